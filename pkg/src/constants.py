"""
Application constants and configuration values.

This module defines all hard-coded limits, default bounds, names and
labels used throughout the Misère Workbench.
"""

# Application metadata
APP_NAME = "Misère Workbench"
APP_VERSION = "0.1.0"
APP_TAGLINE = "Compute, compare and classify misère games."
CONFIG_VERSION = "1.0"

# Literal limits for the game notation
MAX_INTEGER_LITERAL = 64
MAX_FAMILY_INDEX = 12

# Enumeration resource guard (trees materialised per space)
MAX_ENUMERATION_SIZE = 100_000

# Universe filters
FILTER_ALL = "all"
FILTER_DICOT = "dicot"
FILTER_BINARY = "binary"
FILTER_IMPARTIAL = "impartial"
FILTER_BINARY_DICOT = "binary-dicot"
FILTER_IMPARTIAL_BINARY = "impartial-binary"

UNIVERSE_FILTERS = [
    FILTER_ALL,
    FILTER_DICOT,
    FILTER_BINARY,
    FILTER_IMPARTIAL,
    FILTER_BINARY_DICOT,
    FILTER_IMPARTIAL_BINARY,
]

UNIVERSE_FILTER_LABELS = {
    FILTER_ALL: "All games",
    FILTER_DICOT: "Dicot games",
    FILTER_BINARY: "Binary games",
    FILTER_IMPARTIAL: "Impartial games",
    FILTER_BINARY_DICOT: "Binary dicot games",
    FILTER_IMPARTIAL_BINARY: "Impartial binary games",
}

# Verdict statuses
VERDICT_PROVED = "proved"
VERDICT_REFUTED = "refuted"
VERDICT_UNKNOWN = "unknown"

# Comparison method tags
METHOD_CARAC_ZERO = "carac0"
METHOD_BINARY_RECURSION = "binary-recursion"
METHOD_CARAC_TILDE = "carac"
METHOD_IMPARTIAL_CANONICAL = "impartial-canonical"
METHOD_BOUNDED_SEARCH = "bounded-search"

# Report statuses
STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_UNKNOWN = "unknown"

REPORT_STATUS_LABELS = {
    STATUS_PASS: "Pass",
    STATUS_FAIL: "Fail",
    STATUS_UNKNOWN: "Unknown (bounded)",
}

# Default bounds
DEFAULT_COMPARE_BOUND = 2
DEFAULT_DICOT_DISTINGUISHER_BOUND = 2
WITNESS_SEARCH_BOUND = 2
DEFAULT_SAMPLE_SEED = 20
DEFAULT_SAMPLE_WIDTH = 3
DEFAULT_CENSUS_SAMPLES = 200

# Named printing covers family members up to this index
NAMED_FAMILY_LIMIT = 6

# Census expectations
BINARY_DICOT_3_TREES = 26
BINARY_DICOT_3_CLASSES = 13
DICOT_3_CLASSES = 1268

# Output styles
PRINT_STYLE_BRACES = "braces"
PRINT_STYLE_NAMED = "named"
PRINT_STYLES = [PRINT_STYLE_BRACES, PRINT_STYLE_NAMED]

# Export
FORMULA_INJECTION_CHARS = ("=", "+", "-", "@")
REPORT_SHEET_NAME = "reports"
COUNTEREXAMPLE_SHEET_NAME = "counterexamples"

# Workbench pages
UI_PAGES = [
    {"key": "explore", "name": "Explore", "description": "Parse a game, see its outcome and constructions"},
    {"key": "compare", "name": "Compare", "description": "Decide G >= H modulo a universe"},
    {"key": "verify", "name": "Verify", "description": "Run theorem checks and download reports"},
    {"key": "census", "name": "Census", "description": "Enumerate spaces and count classes"},
]

# Largest space listed in full on the Census page
UI_LIST_LIMIT = 500
