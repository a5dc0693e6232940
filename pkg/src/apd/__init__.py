"""Alternating power differences of trace functions over the symmetric group.

For a square matrix ``A`` of order ``n`` the trace function is
``f_A(sigma) = sum_i A[i, sigma(i)]`` and

    APD_m(A) = sum over sigma in S_n of sgn(sigma) * f_A(sigma) ** m.

The package enumerates S_n exactly, compresses the n! trace values into a
signed histogram, finds the first non-vanishing degree and compares it with
closed forms for several classical matrix families.
"""

__version__ = "0.1.0"

from .core import ApdResult, Outcome, apd_m, apd_sequence, first_appearance  # noqa: E402
from .matrices import (  # noqa: E402
    Family,
    FamilySpec,
    SquareMatrix,
    circulant,
    hilbert,
    identity,
    load_matrix,
    multiplication_table,
    pascal,
    save_matrix,
    shifted_power_lattice,
    vandermonde,
    vandermonde_nodes,
)
from .permutations import SignedHistogram, signed_value_histogram, trace_of  # noqa: E402

__all__ = [
    "ApdResult", "Outcome", "apd_m", "apd_sequence", "first_appearance",
    "Family", "FamilySpec", "SquareMatrix", "circulant", "hilbert", "identity",
    "load_matrix", "multiplication_table", "pascal", "save_matrix",
    "shifted_power_lattice", "vandermonde", "vandermonde_nodes",
    "SignedHistogram", "signed_value_histogram", "trace_of",
]
