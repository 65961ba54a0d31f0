"""
Constants for the finite-N ensembles.
"""

# Coefficients of the action in power sums:
# S = (2/N)(P4 + g P2) +/- (2g/N^2) P1^2 +/- (8/N^2) P1 P3 + (6/N^2) P2^2
QUARTIC_WEIGHT = 2.0
P1_SQUARED_WEIGHT = 2.0
P1_P3_WEIGHT = 8.0
P2_SQUARED_WEIGHT = 6.0

# Gaussian baseline potential lambda^2 / 2, i.e. S = P2 / (2N)
GAUSSIAN_WEIGHT = 0.5

# Coulomb repulsion prefactor in E = S - (2/N^2) sum_{i<j} log|l_i - l_j|
REPULSION_WEIGHT = 2.0
