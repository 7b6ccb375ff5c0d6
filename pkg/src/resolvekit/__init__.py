"""Separating (resolving) sets for Sym(m) on k-subsets and for general permutation groups."""

from .core import Certificate, KSubset, enumerate_ksubsets, incidence_matrix, signature, weight_profile
from .verify import is_robust, is_separating, is_separating_rows, witness_unseparated

__all__ = [
    "Certificate", "KSubset", "enumerate_ksubsets", "incidence_matrix", "signature", "weight_profile",
    "is_separating", "is_separating_rows", "is_robust", "witness_unseparated",
]
__version__ = "0.1.0"
