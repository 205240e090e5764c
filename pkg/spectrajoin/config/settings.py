"""
Constants for spectrajoin
"""

APP_NAME = 'spectrajoin'

MATRIX_KINDS = ('A', 'L', 'Q', 'NL')
JOIN_KINDS = ('plain', 'ns', 'nns')

CHARPOLY_THEOREMS = ('4.1a', '4.1b', '4.2a', '4.2b', '4.3a', '4.3b')
SPECTRUM_THEOREMS = ('5.1', '6.1', '6.2', '6.3', '6.4')
NICS_TEMPLATES = ('cor4.4a', 'cor4.4b', 'cor4.5a', 'cor4.5b', 'cor5.2', 'cor6.5')

FAMILY_NAMES = ('K', 'P', 'C', 'E', 'S', 'W', 'K_ab', 'Petersen')

# Largest graph6 size written behind a single '~' marker
GRAPH6_MAX_VERTICES = 258047

# Theorem sample points start above every eigenvalue of the join: spectral
# radii of A, L and Q on N vertices are at most 2N.
SAMPLE_OFFSET = 2

DISPLAY_DECIMALS = 4

PUBLISHED_SPECTRA_FILE = 'published_spectra.json'

# Regular graphs on fewer vertices are determined by their adjacency spectrum
SMALLEST_COSPECTRAL_REGULAR_ORDER = 10

# Exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
