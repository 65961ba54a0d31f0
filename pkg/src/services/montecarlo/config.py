"""
Configuration for the Metropolis sampler.
"""

# Burn-in width adaptation: acceptance window per block of sweeps
TARGET_ACCEPTANCE_LOW = 0.3
TARGET_ACCEPTANCE_HIGH = 0.5
WIDTH_GROW = 1.1
WIDTH_SHRINK = 0.9
ADAPTATION_WINDOW = 10

# Initial configurations
EVEN_SPAN = 1.0
THEORY_CDF_POINTS = 20001

# From-scratch energy audits
AUDIT_WARN_DRIFT = 1e-8

# Histograms
DEFAULT_BINS = "fd"

# Checkpoint files: 8-byte little-endian N, then N little-endian float64
CHECKPOINT_HEADER_DTYPE = "<u8"
CHECKPOINT_VALUE_DTYPE = "<f8"
CHECKPOINT_METADATA_SUFFIX = ".meta.json"
