EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3

COHOMOLOGY_MARGIN = 6
"""Degrees checked above the formal dimension when no cutoff is given."""

SEARCH_MAX_N = 400
SEARCH_MAX_K = 8
