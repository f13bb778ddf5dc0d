"""Stabilizer groups: validation, enumeration, projectors, completions.

A stabilizer group on n qubits is presented by m <= n generators that are
Hermitian, pairwise commuting, and independent at the check-vector level;
those three conditions already rule out -I as a product.  The canonical
form re-expresses the generators so their check vectors are in reduced
row echelon form (signs tracked exactly through the group product) and
sorts them by check vector, so equal groups compare equal.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import f2
from .pauli import DENSE_QUBIT_LIMIT, CapacityError, PauliOperator, hermitian_rep, parse

__all__ = [
    "StabilizerGroup",
    "ELEMENT_LIMIT",
    "validate",
    "from_string",
    "to_string",
    "elements",
    "centralizer_image",
    "projector",
    "extend_to_maximal",
    "anticommuting_partners",
]

ELEMENT_LIMIT = 20


@dataclass(frozen=True, slots=True)
class StabilizerGroup:
    """Canonically presented stabilizer group; build via :func:`validate`."""

    n: int
    generators: tuple[PauliOperator, ...]

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def k(self) -> int:
        """Logical qubit count of the stabilized code."""
        return self.n - len(self.generators)

    def check_basis(self) -> f2.F2Basis:
        """Canonical basis of the check-vector image L(S)."""
        return f2.reduce((g.check_vector() for g in self.generators), self.n)

    def __str__(self) -> str:
        return to_string(self)


def validate(generators: Sequence[PauliOperator], n: int | None = None) -> StabilizerGroup:
    """Check the stabilizer conditions and return the canonical group.

    Raises ValueError naming the offending generator (1-based) for
    non-Hermitian input, the offending pair for anticommuting input, and
    reports dependent check vectors.  An empty generator list needs an
    explicit ``n`` and stabilizes the full space.
    """
    gens = list(generators)
    if not gens:
        if n is None:
            raise ValueError("qubit count required for an empty generator list")
        if n < 1:
            raise ValueError(f"qubit count must be positive, got {n}")
        return StabilizerGroup(n, ())
    if n is None:
        n = gens[0].n
    for i, g in enumerate(gens):
        if g.n != n:
            raise ValueError(
                f"generator {i + 1} ({g}) acts on {g.n} qubits, expected {n}"
            )
        if not g.is_hermitian():
            raise ValueError(f"generator {i + 1} ({g}) is not Hermitian")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not gens[i].commutes(gens[j]):
                raise ValueError(f"generators anticommute: ({i + 1},{j + 1})")
    if f2.reduce((g.check_vector() for g in gens), n).dim != len(gens):
        raise ValueError("generator check vectors are dependent")
    return StabilizerGroup(n, _canonical(gens, n))


def _canonical(gens: list[PauliOperator], n: int) -> tuple[PauliOperator, ...]:
    # row reduce at the group level: eliminating a pivot multiplies by the
    # pivot generator, which keeps signs exact (products of commuting
    # Hermitian Paulis are Hermitian)
    ops = list(gens)
    row = 0
    for col in range(2 * n):
        src = next(
            (i for i in range(row, len(ops)) if (ops[i].check_vector() >> col) & 1),
            None,
        )
        if src is None:
            continue
        ops[row], ops[src] = ops[src], ops[row]
        for j in range(len(ops)):
            if j != row and (ops[j].check_vector() >> col) & 1:
                ops[j] = ops[j].multiply(ops[row])
        row += 1
    return tuple(sorted(ops, key=lambda g: g.check_vector()))


def from_string(text: str, n: int | None = None) -> StabilizerGroup:
    """Parse a comma-separated generator list such as ``"ZZI,IZZ"``."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return validate([parse(p) for p in parts], n=n)


def to_string(group: StabilizerGroup) -> str:
    return ",".join(str(g) for g in group.generators)


def elements(group: StabilizerGroup, limit: int = ELEMENT_LIMIT) -> list[PauliOperator]:
    """All 2^m group elements with exact phases, identity first."""
    m = len(group.generators)
    if m > limit:
        raise CapacityError(f"element enumeration limited to {limit} generators, got {m}")
    out = [PauliOperator(group.n, 0, 0, 0)]
    for g in group.generators:
        out += [e.multiply(g) for e in out]
    return out


def centralizer_image(group: StabilizerGroup) -> f2.F2Basis:
    """Check-vector image of the centralizer: dimension n + k."""
    return f2.twisted_kernel(
        [g.check_vector() for g in group.generators], group.n
    )


def projector(group: StabilizerGroup, limit: int = DENSE_QUBIT_LIMIT) -> np.ndarray:
    """Dense projector onto the stabilized subspace, (1/2^m) * prod(I + g).

    Entries are exact dyadic rationals; the trace equals 2^k.
    """
    if group.n > limit:
        raise CapacityError(
            f"dense projector limited to {limit} qubits, got {group.n}"
        )
    dim = 1 << group.n
    eye = np.eye(dim, dtype=complex)
    p = eye.copy()
    for g in group.generators:
        p = p @ (eye + g.to_dense(limit)) / 2
    return p


def extend_to_maximal(group: StabilizerGroup) -> list[PauliOperator]:
    """Complete the generators to n commuting independent Hermitian Paulis.

    The originals come first, signs untouched; each added operator is the
    plus-signed Hermitian representative of the smallest admissible check
    vector, so the completion is deterministic.
    """
    rows = [g.check_vector() for g in group.generators]
    full = f2.complete_lagrangian(rows, group.n)
    added = [hermitian_rep(v, group.n) for v in full[len(rows):]]
    return list(group.generators) + added


def anticommuting_partners(ops: Sequence[PauliOperator]) -> list[PauliOperator]:
    """Partners g_1..g_n for a maximal commuting family h_1..h_n.

    Each g_i is Hermitian and plus-signed, the g's commute pairwise, g_i
    anticommutes with h_i and commutes with every other h_j, and the 2n
    check vectors together form a basis of F_2^{2n}.
    """
    if not ops:
        raise ValueError("expected a nonempty maximal commuting family")
    n = ops[0].n
    if len(ops) != n:
        raise ValueError(f"expected {n} operators, got {len(ops)}")
    for i, g in enumerate(ops):
        if g.n != n:
            raise ValueError(f"operator {i + 1} ({g}) acts on {g.n} qubits, expected {n}")
        if not g.is_hermitian():
            raise ValueError(f"operator {i + 1} ({g}) is not Hermitian")
    for i in range(n):
        for j in range(i + 1, n):
            if not ops[i].commutes(ops[j]):
                raise ValueError(f"operators anticommute: ({i + 1},{j + 1})")
    rows = [g.check_vector() for g in ops]
    partners = f2.symplectic_partners(rows, n)
    return [hermitian_rep(u, n) for u in partners]
