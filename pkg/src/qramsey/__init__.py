"""Quantum cliques and anticliques of Pauli channels among stabilizer codes.

The decision layer works on packed binary check vectors; every verdict
can be cross-checked by an independent dense-matrix oracle.
"""

from .channel import PauliChannel, from_noise, maximal_stabilizer_channel
from .pauli import PauliOperator, hermitian_rep, parse
from .ramsey import (
    ClassificationResult,
    SearchReport,
    classify,
    compressed_dimension,
    gottesman_correctable,
    is_anticlique,
    is_clique,
    search,
)
from .stabilizer import StabilizerGroup, from_string, validate

__version__ = "0.1.0"

__all__ = [
    "ClassificationResult",
    "PauliChannel",
    "PauliOperator",
    "SearchReport",
    "StabilizerGroup",
    "__version__",
    "classify",
    "compressed_dimension",
    "from_noise",
    "from_string",
    "gottesman_correctable",
    "hermitian_rep",
    "is_anticlique",
    "is_clique",
    "maximal_stabilizer_channel",
    "parse",
    "search",
    "validate",
]
