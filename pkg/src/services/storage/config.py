"""
Configuration for artifact storage.
"""

# CSV output: dot decimal separator, 17 significant digits
CSV_FLOAT_FORMAT = "%.17g"
CSV_NA_REP = ""

MANIFEST_NAME = "manifest.json"
TEMP_SUFFIX = ".tmp"
HASH_CHUNK_BYTES = 1 << 20

# Column layouts of the files written by the commands
DENSITY_COLUMNS = ["lambda", "rho"]
HISTOGRAM_COLUMNS = ["bin_center", "density"]
TRACE_COLUMNS = ["sweep", "M", "m2", "energy", "acceptance"]
DIRAC_COLUMNS = ["s", "density"]
PHASE_COLUMNS = [
    "g", "ansatz", "status", "a1", "b1", "a2", "b2",
    "m1", "m2", "m3", "ell", "free_energy", "chosen",
]
