"""
Configuration for the equilibrium-measure solvers.
Numerical defaults; the manager overrides them from the application settings.
"""

import math

# (0,1) branch boundary: the symmetric 1-cut and 2-cut solutions meet here
CRITICAL_COUPLING_01 = -4.0 * math.sqrt(2.0)
CRITICAL_MATCH_TOL = 1e-12

# Quadrature
DEFAULT_QUADRATURE_NODES = 256
DEFAULT_GAP_NODES = 128
MOMENT_NODES = 64
DIRECT_OUTER_NODES = 64
LOG_INTEGRAL_EPSABS = 1e-13
LOG_INTEGRAL_EPSREL = 1e-12
LOG_INTEGRAL_LIMIT = 200
MAX_MOMENT_ORDER = 8

# Cauchy integrals closer than this fraction of the cut width use singularity subtraction
NEAR_FIELD_FRACTION = 0.25
NEAR_SINGULARITY_DISTANCE = 1e-8

# Admissibility screening
ADMISSIBILITY_POINTS = 512
ADMISSIBILITY_TOL = 1e-12
RESIDUAL_GATE = 1e-8

# Newton-Raphson
NEWTON_TOL = 1e-12
NEWTON_MAX_ITER = 100
NEWTON_MAX_HALVINGS = 30
NEWTON_FD_STEP = 1e-7
NEWTON_COND_LIMIT = 1e14
ORDERING_MARGIN = 1e-10

# Continuation
CONTINUATION_STEP = 0.05
CONTINUATION_MIN_STEP = 1e-4

# Broken-symmetry (1,0) branch
ASYM2_SEARCH_MAX_G = -3.0
BROKEN_MIN_M1 = 0.05
SEED_PARTICLES = 160
SEED_LEFT_FRACTIONS = (0.02, 0.05, 0.1, 0.2)
SEED_RELAX_MAXITER = 5000

# Converged broken-symmetry solutions (a1, b1, a2, b2, m1, m2, m3), residual < 1e-12
BROKEN_BRANCH_ANCHORS = {
    -6.0: (
        -2.448689528724, -2.392519900625, 0.526312779754, 1.125953946759,
        0.820356414413, 0.778894209375, 0.544156660810,
    ),
    -5.0: (
        -2.174535091759, -2.095473633281, 0.399948539794, 1.070578006965,
        0.728509114492, 0.657702562217, 0.383845852630,
    ),
    -4.0: (
        -1.832274633059, -1.700389934662, 0.225937281737, 1.013301933106,
        0.611196682652, 0.537843263096, 0.236209310731,
    ),
}

# Free energy and selection
MULTIPLIER_SAMPLES = 401
MULTIPLIER_POINTS_PER_CUT = 5
DEGENERACY_TOL = 1e-9
CRITICAL_TOL = 1e-4

# Critical coupling search
CRITICAL_SCAN_STEP = 0.01
DEFAULT_CRITICAL_BRACKET_10 = (-3.4, -3.0)
