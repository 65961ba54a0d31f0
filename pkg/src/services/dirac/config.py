"""
Configuration for Dirac-operator densities.
"""

DEFAULT_GRID_POINTS = 4096
MIN_GRID_POINTS = 512

# Snapshots pooled for the sampled Dirac spectrum (N^2 values each)
MAX_SNAPSHOTS = 200
