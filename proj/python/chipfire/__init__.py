"""Exact chip-firing dynamics for M-matrices.

The engine takes the matrix delta; firing state i subtracts row i of delta
(column i of L = delta^T). Integers are exact at any size, rationals come
back as fractions.Fraction.
"""

from ._core import (
    CapExceededError,
    ChipfireError,
    DimensionMismatchError,
    DimensionTooLargeError,
    Engine,
    EnergyValue,
    FiringRecord,
    Graph,
    InputParseError,
    NegativeInputError,
    NoGlobalSinkError,
    NotMMatrixError,
    SearchTooLargeError,
    SingularError,
    StateIndexError,
    __version__,
    canonical_critical,
    canonical_z_superstable,
    determinant,
    dual,
    energy,
    energy_difference,
    enumerate_criticals,
    enumerate_z_superstables,
    has_global_sink,
    invert_exact,
    is_chi_superstable,
    is_critical,
    is_g_parking,
    is_stable,
    is_z_matrix,
    is_z_superstable,
    laplacian,
    lift_above_diagonal,
    m_verdict,
    minimize_energy,
    parse_graph,
    reduced_laplacian,
)

__all__ = [
    "CapExceededError",
    "ChipfireError",
    "DimensionMismatchError",
    "DimensionTooLargeError",
    "Engine",
    "EnergyValue",
    "FiringRecord",
    "Graph",
    "InputParseError",
    "NegativeInputError",
    "NoGlobalSinkError",
    "NotMMatrixError",
    "SearchTooLargeError",
    "SingularError",
    "StateIndexError",
    "__version__",
    "canonical_critical",
    "canonical_z_superstable",
    "determinant",
    "dual",
    "energy",
    "energy_difference",
    "enumerate_criticals",
    "enumerate_z_superstables",
    "has_global_sink",
    "invert_exact",
    "is_chi_superstable",
    "is_critical",
    "is_g_parking",
    "is_stable",
    "is_z_matrix",
    "is_z_superstable",
    "laplacian",
    "lift_above_diagonal",
    "m_verdict",
    "minimize_energy",
    "parse_graph",
    "reduced_laplacian",
]
