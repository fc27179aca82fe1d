"""CLI constants."""

DEFAULT_CONFIG_PATH = "config.json"
DEFAULT_DB_PATH = "data/simplexnet.duckdb"

# Built-in lattice names accepted wherever a lattice file is expected; "patch:<side>" is also accepted.
LATTICE_ALIASES = ("six-site", "square-network")
PATCH_PREFIX = "patch:"

CONTRACTION_METHODS = ("diagonal", "pairwise")
COVER_METHODS = ("tn", "brute")

# Decimal places for printed energies/entropies and for experiment CSV entropy columns.
REPORT_DECIMALS = 6
CSV_DECIMALS = 4
ENTROPY_COLUMNS = ("entropy", "reference", "residual")

EXIT_OK = 0
EXIT_ERROR = 1

# Manifolds enumerated by the ground command are kept per lattice under this run id.
GROUND_RUN_ID = "ground"
