"""
Spectra: numeric eigensolving, regular transfer and closed forms for split joins.
"""

from .spectrum import Spectrum, SplitEigSet
from .jacobi import jacobi_eigenvalues
from .numeric import (
    adjacency_eigenvalues,
    exact_charpoly,
    non_principal_eigenvalues,
    numeric_spectrum,
    regular_transfer,
)
from .roots import solve_cubic_real, solve_quadratic_real
from .closed_forms import (
    closed_form_spectrum,
    nns_adjacency_spectrum,
    nns_laplacian_spectrum,
    nns_normalized_spectrum,
    nns_quotient,
    nns_signless_spectrum,
    ns_normalized_spectrum,
    ns_quotient_normalized,
    split_eig_set,
)

__all__ = [
    "Spectrum",
    "SplitEigSet",
    "jacobi_eigenvalues",
    "adjacency_eigenvalues",
    "exact_charpoly",
    "non_principal_eigenvalues",
    "numeric_spectrum",
    "regular_transfer",
    "solve_cubic_real",
    "solve_quadratic_real",
    "closed_form_spectrum",
    "nns_adjacency_spectrum",
    "nns_laplacian_spectrum",
    "nns_normalized_spectrum",
    "nns_quotient",
    "nns_signless_spectrum",
    "ns_normalized_spectrum",
    "ns_quotient_normalized",
    "split_eig_set",
]
