"""Linear algebra over GF(2) on packed symplectic bit vectors.

A vector in F_2^{2n} is a plain Python int: bit j (0 <= j < n) holds the
x-part coordinate for qubit j, bit n+j the z-part coordinate.  Integer
comparison therefore orders vectors x-part first; that order is the tie
breaker behind every deterministic choice below ("smallest admissible
vector" always means smallest as an int).

The twisted dot product u * v = <a,d> + <b,c> (mod 2), for u = a|b and
v = c|d, vanishes exactly when the Pauli operators with check vectors u
and v commute.  Everything in this module is pure and allocation-light;
these routines sit in the hot loop of the subspace searches.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

__all__ = [
    "F2Basis",
    "CosetSpace",
    "twisted_dot",
    "swap_halves",
    "format_vector",
    "reduce",
    "in_span",
    "reduce_mod",
    "twisted_kernel",
    "extend_basis",
    "coset_space",
    "coset_count",
    "enumerate_isotropic",
    "complete_lagrangian",
    "symplectic_partners",
]


def _check_vector(v: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    if v < 0 or v >> (2 * n):
        raise ValueError(f"vector {v:#x} does not fit in F_2^{2 * n}")


def _pivot(v: int) -> int:
    # index of the lowest set bit; callers guarantee v != 0
    return (v & -v).bit_length() - 1


def swap_halves(v: int, n: int) -> int:
    """Exchange the x and z halves of ``v``.

    ``twisted_dot(u, v, n)`` equals the parity of ``u & swap_halves(v, n)``,
    which is the form the search loops actually evaluate.
    """
    m = (1 << n) - 1
    return ((v >> n) & m) | ((v & m) << n)


def twisted_dot(u: int, v: int, n: int) -> int:
    """Twisted dot product of u = a|b and v = c|d: <a,d> + <b,c> mod 2."""
    _check_vector(u, n)
    _check_vector(v, n)
    return ((u & (v >> n)).bit_count() + ((u >> n) & v).bit_count()) & 1


def format_vector(v: int, n: int) -> str:
    """Render v as ``(x_1..x_n|z_1..z_n)`` with qubit 1 leftmost."""
    _check_vector(v, n)
    xs = "".join("1" if (v >> j) & 1 else "0" for j in range(n))
    zs = "".join("1" if (v >> (n + j)) & 1 else "0" for j in range(n))
    return f"({xs}|{zs})"


@dataclass(frozen=True, slots=True)
class F2Basis:
    """Independent vectors spanning a subspace of F_2^{2n}.

    Bases built by :func:`reduce` are canonical: reduced row echelon form
    with strictly increasing pivot columns, so two reduce()-built bases
    compare equal iff they span the same subspace.  Bases produced by
    :func:`extend_basis` keep their caller-visible row order instead and
    are only guaranteed independent.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def span(self) -> list[int]:
        """Every vector of the span; 2^dim entries, small dims only."""
        vecs = [0]
        for r in self.rows:
            vecs += [v ^ r for v in vecs]
        return vecs


def reduce(vectors: Iterable[int], n: int) -> F2Basis:
    """Canonical (RREF, increasing pivots) basis of the span of ``vectors``."""
    rows: list[int] = []
    for v in vectors:
        _check_vector(v, n)
        for r in rows:
            if (v >> _pivot(r)) & 1:
                v ^= r
        if v:
            p = _pivot(v)
            rows = [r ^ v if (r >> p) & 1 else r for r in rows]
            rows.append(v)
            rows.sort(key=_pivot)
    return F2Basis(n, tuple(rows))


def reduce_mod(v: int, basis: F2Basis) -> int:
    """Canonical coset representative of ``v + span(basis)``.

    Requires a canonical basis (reduce() output): the pivot coordinates of
    v are cleared, which picks one representative per coset.
    """
    _check_vector(v, basis.n)
    for r in basis.rows:
        if (v >> _pivot(r)) & 1:
            v ^= r
    return v


def in_span(v: int, basis: F2Basis) -> bool:
    """Whether ``v`` lies in the span; safe for non-canonical bases."""
    return reduce((*basis.rows, v), basis.n).dim == reduce(basis.rows, basis.n).dim


def twisted_kernel(generators: Sequence[int], n: int) -> F2Basis:
    """Canonical basis of {v : twisted_dot(v, g) = 0 for all g}.

    With independent generators the kernel has dimension 2n - len(generators);
    dependent input still yields the correct kernel (rank is what counts).
    """
    constraints = reduce((swap_halves(g, n) for g in generators), n)
    pivots = {_pivot(r) for r in constraints.rows}
    basis = []
    for f in range(2 * n):
        if f in pivots:
            continue
        v = 1 << f
        for r in constraints.rows:
            if (r >> f) & 1:
                v |= 1 << _pivot(r)
        basis.append(v)
    return reduce(basis, n)


def extend_basis(partial: F2Basis, candidates: Iterable[int]) -> F2Basis:
    """Extend ``partial`` to a basis of span(candidates), greedily.

    Candidates are tried in increasing order; the result keeps the partial
    rows first, then the chosen extensions.  Raises if span(candidates)
    does not contain span(partial).
    """
    n = partial.n
    cand = sorted({c for c in candidates})
    for c in cand:
        _check_vector(c, n)
    if reduce(partial.rows, n).dim != len(partial.rows):
        raise ValueError("partial basis is dependent")
    target = reduce(cand, n)
    for row in partial.rows:
        if not in_span(row, target):
            raise ValueError(
                f"candidates do not suffice: {format_vector(row, n)} is outside their span"
            )
    rows = list(partial.rows)
    work = reduce(rows, n)
    for c in cand:
        if len(rows) == target.dim:
            break
        if reduce_mod(c, work):
            rows.append(c)
            work = reduce(rows, n)
    return F2Basis(n, tuple(rows))


@dataclass(frozen=True, slots=True)
class CosetSpace:
    """Bookkeeping for cosets of span(sub) inside span(sub) + span(ext).

    ``sub`` is canonical; ``ext`` extends it to the full space and every
    ext vector is twisted-orthogonal to every sub vector; ``full`` is the
    canonical basis of the union, used for membership checks.
    """

    sub: F2Basis
    ext: F2Basis
    full: F2Basis


def coset_space(sub: F2Basis, ambient: Iterable[int]) -> CosetSpace:
    """Coset space of span(sub) inside span(sub ∪ ambient)."""
    ext_rows = extend_basis(sub, ambient).rows[len(sub.rows):]
    for e in ext_rows:
        for s in sub.rows:
            if twisted_dot(e, s, sub.n):
                raise ValueError(
                    f"extension vector {format_vector(e, sub.n)} is not "
                    f"twisted-orthogonal to {format_vector(s, sub.n)}"
                )
    full = reduce((*sub.rows, *ext_rows), sub.n)
    return CosetSpace(sub, F2Basis(sub.n, ext_rows), full)


def coset_count(hits: Iterable[int], cs: CosetSpace) -> int:
    """Number of distinct cosets of span(cs.sub) represented among hits.

    A hit outside span(sub ∪ ext) is a caller bug and raises.
    """
    seen = set()
    for h in hits:
        if reduce_mod(h, cs.full):  # cs.full is canonical, so this is membership
            raise ValueError(
                f"hit {format_vector(h, cs.sub.n)} lies outside the coset space"
            )
        seen.add(reduce_mod(h, cs.sub))
    return len(seen)


def enumerate_isotropic(n: int, d: int) -> Iterator[F2Basis]:
    """All d-dimensional totally isotropic subspaces of F_2^{2n}.

    Each subspace is emitted exactly once, as its canonical basis, in
    sorted order.  Depth is extended one vector at a time: candidates are
    drawn from the twisted kernel of the current rows, restricted to
    canonical coset representatives so each parent-child edge is visited
    once; duplicates arising from multiple parents are removed by keeping
    the canonical form only.
    """
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    if d < 0 or d > n:
        raise ValueError(f"isotropic dimension must be in 0..{n}, got {d}")
    current: set[tuple[int, ...]] = {()}
    for _ in range(d):
        nxt: set[tuple[int, ...]] = set()
        for rows in current:
            pivot_mask = 0
            for r in rows:
                pivot_mask |= 1 << _pivot(r)
            kernel = twisted_kernel(rows, n)
            for v in kernel.span():
                if v and not (v & pivot_mask):
                    # v is reduced mod rows and nonzero, hence outside the span
                    p = _pivot(v)
                    new_rows = tuple(
                        sorted(
                            ((r ^ v if (r >> p) & 1 else r) for r in rows),
                            key=_pivot,
                        )
                    )
                    merged = sorted((*new_rows, v), key=_pivot)
                    nxt.add(tuple(merged))
        current = nxt
    for rows in sorted(current):
        yield F2Basis(n, rows)


def complete_lagrangian(rows: Sequence[int], n: int) -> tuple[int, ...]:
    """Extend independent, mutually twisted-orthogonal vectors to a
    Lagrangian (dimension-n isotropic) basis.

    The input rows come first, then the smallest admissible vector at each
    step, so the completion is deterministic.
    """
    out = list(rows)
    base = reduce(out, n)
    if base.dim != len(out):
        raise ValueError("rows are dependent")
    for i, u in enumerate(out):
        for v in out[i:]:
            if twisted_dot(u, v, n):
                raise ValueError(
                    f"rows are not isotropic: {format_vector(u, n)} and "
                    f"{format_vector(v, n)} anticommute"
                )
    while len(out) < n:
        kernel = twisted_kernel(out, n)
        v = min(c for c in kernel.span() if c and reduce_mod(c, base))
        out.append(v)
        base = reduce(out, n)
    return tuple(out)


def symplectic_partners(rows: Sequence[int], n: int) -> tuple[int, ...]:
    """Dual partners of a Lagrangian basis under the twisted form.

    Given a basis h_1..h_n of a Lagrangian subspace, returns u_1..u_n with
    twisted_dot(u_i, h_j) = delta_ij and twisted_dot(u_i, u_j) = 0, so the
    union of the two families is a basis of F_2^{2n}.  The construction is
    deterministic: solve each dual system with free coordinates at zero,
    then sweep pairs (i < j), replacing u_j by u_j + h_i whenever u_j and
    u_i fail to commute.  A fix at step i cannot disturb earlier steps
    because h_i pairs to zero with every u_m, m != i.
    """
    if len(rows) != n:
        raise ValueError(f"expected {n} rows for a Lagrangian basis, got {len(rows)}")
    base = reduce(rows, n)
    if base.dim != n:
        raise ValueError("rows are dependent")
    for i, u in enumerate(rows):
        for v in rows[i:]:
            if twisted_dot(u, v, n):
                raise ValueError("rows are not isotropic")
    width = 2 * n
    coef_mask = (1 << width) - 1
    # RREF with right-hand-side tracking in the bits above the coefficients
    red: list[tuple[int, int]] = []  # (augmented row, pivot column)
    for i, r in enumerate(rows):
        row = swap_halves(r, n) | (1 << (width + i))
        for other, p in red:
            if (row >> p) & 1:
                row ^= other
        p = _pivot(row & coef_mask)
        red = [(o ^ row if (o >> p) & 1 else o, q) for o, q in red]
        red.append((row, p))
    partners = []
    for l in range(n):
        u = 0
        for row, p in red:
            if (row >> (width + l)) & 1:
                u |= 1 << p
        partners.append(u)
    swaps = [swap_halves(r, n) for r in rows]
    for i in range(n):
        sw_i = swap_halves(partners[i], n)
        for j in range(i + 1, n):
            if (partners[j] & sw_i).bit_count() & 1:
                partners[j] ^= rows[i]
    # postconditions; a violation here is a finding, not something to patch
    for i, u in enumerate(partners):
        for j, h in enumerate(rows):
            if twisted_dot(u, h, n) != (1 if i == j else 0):
                raise RuntimeError(
                    f"partner construction failed the duality pattern at ({i}, {j})"
                )
        for v in partners[i + 1:]:
            if twisted_dot(u, v, n):
                raise RuntimeError("partner construction left an anticommuting pair")
    if reduce((*rows, *partners), n).dim != width:
        raise RuntimeError("partner construction did not complete a basis")
    return tuple(partners)
