"""
spectrajoin - spectra and cospectral mates of neighbours-splitting joins
"""

__version__ = '1.0.0'
