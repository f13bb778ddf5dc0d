"""Self-verification battery: nine cross-route checks, CLI- and test-shared.

Each check returns a CheckResult and never raises on a mathematical
failure; the detail string carries enough to reproduce one.  Parameter
defaults are the full-strength versions used by the acceptance suite;
the CLI passes reduced values unless asked to be exhaustive.

The checks deliberately pit independent routes against each other:
bit-level decisions against dense linear algebra, constructive witnesses
against exhaustive search, and theorem statements against enumeration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import channel, f2, oracle, ramsey, stabilizer
from .channel import PauliChannel
from .pauli import PauliOperator, hermitian_rep

__all__ = ["CheckResult", "CRITERIA", "dense_verdict_check", "run"]


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, failures: list[str], detail: str) -> CheckResult:
    if failures:
        return CheckResult(name, False, f"{len(failures)} failure(s); first: {failures[0]}")
    return CheckResult(name, True, detail)


def _random_pauli(rng: random.Random, n: int) -> PauliOperator:
    return PauliOperator(
        n, rng.randrange(4), rng.randrange(1 << n), rng.randrange(1 << n)
    )


def _random_isotropic_rows(rng: random.Random, n: int, d: int) -> list[int]:
    rows: list[int] = []
    while len(rows) < d:
        v = rng.randrange(1, 1 << (2 * n))
        if all(f2.twisted_dot(v, r, n) == 0 for r in rows) and not f2.in_span(
            v, f2.reduce(rows, n)
        ):
            rows.append(v)
    return rows


def _random_group(
    rng: random.Random, n: int, d: int | None = None, signs: bool = True
) -> stabilizer.StabilizerGroup:
    if d is None:
        d = rng.randrange(0, n + 1)
    gens = []
    for v in _random_isotropic_rows(rng, n, d):
        g = hermitian_rep(v, n)
        if signs and rng.random() < 0.5:
            g = PauliOperator(n, (g.phase + 2) % 4, g.x, g.z)
        gens.append(g)
    return stabilizer.validate(gens, n=n)


def _random_channel(rng: random.Random, n: int, max_ops: int) -> PauliChannel:
    ops = [
        hermitian_rep(rng.randrange(1 << (2 * n)), n)
        for _ in range(rng.randrange(1, max_ops + 1))
    ]
    return channel.from_noise(ops, n=n)


def _subset_channel(vectors: tuple[int, ...], n: int) -> PauliChannel:
    return channel.from_noise([hermitian_rep(v, n) for v in vectors], n=n)


def _mask_channel(mask: int, n: int) -> PauliChannel:
    ops = [hermitian_rep(v, n) for v in range(1 << (2 * n)) if (mask >> v) & 1]
    return channel.from_noise(ops, n=n)


def _small_subsets(n: int, max_size: int):
    vectors = range(1 << (2 * n))
    for size in range(1, max_size + 1):
        yield from combinations(vectors, size)


def _code_candidates(n: int) -> list[stabilizer.StabilizerGroup]:
    """Every nontrivial code candidate: isotropic subspaces with k >= 1."""
    groups = []
    for d in range(0, n):
        for basis in f2.enumerate_isotropic(n, d):
            groups.append(
                stabilizer.validate([hermitian_rep(v, n) for v in basis.rows], n=n)
            )
    return groups


def check_pauli_algebra(pairs: int = 500, seed: int = 0, max_n: int = 3) -> CheckResult:
    """Dense ground truth for the whole operator algebra."""
    failures: list[str] = []
    total = 0
    for n in range(1, max_n + 1):
        rng = random.Random((seed << 8) | n)
        for _ in range(pairs):
            g, h = _random_pauli(rng, n), _random_pauli(rng, n)
            gd, hd = g.to_dense(), h.to_dense()
            total += 1
            if not np.array_equal(g.multiply(h).to_dense(), gd @ hd):
                failures.append(f"multiply: {g!r} * {h!r}")
                continue
            if not np.array_equal(g.adjoint().to_dense(), gd.conj().T):
                failures.append(f"adjoint: {g!r}")
            if g.commutes(h) != bool(np.array_equal(gd @ hd, hd @ gd)):
                failures.append(f"commutes: {g!r} vs {h!r}")
            if g.is_hermitian() != bool(np.array_equal(gd, gd.conj().T)):
                failures.append(f"is_hermitian: {g!r}")
            eye = np.eye(1 << n)
            if g.is_scalar() != bool(np.array_equal(gd, gd[0, 0] * eye)):
                failures.append(f"is_scalar: {g!r}")
            partner = _random_pauli(rng, 1)
            if not np.array_equal(
                g.tensor(partner).to_dense(), np.kron(gd, partner.to_dense())
            ):
                failures.append(f"tensor: {g!r} (x) {partner!r}")
    return _result(
        "pauli algebra vs dense matrices",
        failures,
        f"{total} random pairs across n=1..{max_n}: multiply, adjoint, tensor, "
        "commutes, is_hermitian, is_scalar all agree exactly",
    )


def check_centralizer_dimension(max_n: int = 3) -> CheckResult:
    """dim L(Z(S)) = n + k for every isotropic subspace, exhaustively."""
    failures: list[str] = []
    total = 0
    for n in range(1, max_n + 1):
        for d in range(0, n + 1):
            for basis in f2.enumerate_isotropic(n, d):
                group = stabilizer.validate(
                    [hermitian_rep(v, n) for v in basis.rows], n=n
                )
                total += 1
                got = stabilizer.centralizer_image(group).dim
                if got != n + group.k:
                    failures.append(
                        f"n={n} group {group}: dim {got} != {n + group.k}"
                    )
    return _result(
        "centralizer dimension n+k",
        failures,
        f"{total} stabilizer groups over all isotropic subspaces, n<=3, exact",
    )


def check_oracle_equivalence(
    seed: int = 0, max_subset_size: int = 4, n3_cases: int = 200
) -> CheckResult:
    """compressed_dimension == dense Gram rank, exhaustive n=2 + sampled n=3."""
    failures: list[str] = []
    candidates = _code_candidates(2)
    exhaustive = 0
    for subset in _small_subsets(2, max_subset_size):
        ch = _subset_channel(subset, 2)
        for group in candidates:
            exhaustive += 1
            fast = ramsey.compressed_dimension(ch, group)
            dense = oracle.dense_compressed_dimension(ch, group).rank
            if fast != dense:
                failures.append(
                    f"n=2 noise {[str(o) for o in ch.operators]} vs {group}: "
                    f"{fast} != {dense}"
                )
    rng = random.Random(seed)
    for _ in range(n3_cases):
        ch = _random_channel(rng, 3, 6)
        group = _random_group(rng, 3)
        fast = ramsey.compressed_dimension(ch, group)
        dense = oracle.dense_compressed_dimension(ch, group).rank
        if fast != dense:
            failures.append(
                f"n=3 noise {[str(o) for o in ch.operators]} vs {group}: "
                f"{fast} != {dense}"
            )
    return _result(
        "compressed dimension vs dense Gram rank",
        failures,
        f"{exhaustive} exhaustive n=2 cases and {n3_cases} random n=3 cases, exact",
    )


def check_main_theorem(seed: int = 0, n3_cases: int = 10) -> CheckResult:
    """Maximal stabilizer channels admit no nontrivial witness, any k."""
    failures: list[str] = []
    examined = 0
    groups = [
        stabilizer.validate([hermitian_rep(v, 2) for v in basis.rows], n=2)
        for basis in f2.enumerate_isotropic(2, 2)
    ]
    rng = random.Random(seed)
    for _ in range(n3_cases):
        groups.append(_random_group(rng, 3, 3))
    for group in groups:
        ch = channel.maximal_stabilizer_channel(group)
        report = ramsey.search(ch, "both")
        examined += report.total_examined
        if report.witnesses:
            failures.append(
                f"{group} channel has witness "
                f"{report.witnesses[0].to_json_dict()}"
            )
    return _result(
        "maximal stabilizer channels have no witnesses",
        failures,
        f"all 15 Lagrangians at n=2 plus {n3_cases} random maximal stabilizers "
        f"at n=3; {examined} candidate codes examined, zero witnesses",
    )


def check_trichotomy(
    seed: int = 0,
    subsample: float = 0.01,
    mask_sample: int | None = None,
) -> CheckResult:
    """classify never answers Inconsistent over all 65,535 n=2 channels.

    A seeded fraction of the verdicts is re-verified densely.  With
    mask_sample set, only that many randomly chosen channels are run
    (the CLI's quick mode).
    """
    failures: list[str] = []
    rng = random.Random(seed)
    masks: list[int] = list(range(1, 1 << 16))
    if mask_sample is not None:
        masks = sorted(rng.sample(masks, min(mask_sample, len(masks))))
    tags = {"Anticlique": 0, "Clique": 0, "MaximalStabilizerChannel": 0}
    reverified = 0
    for mask in masks:
        ch = _mask_channel(mask, 2)
        result = ramsey.classify(ch)
        if result.tag == "Inconsistent":
            failures.append(
                f"mask {mask:#06x} noise {[str(o) for o in ch.operators]}: "
                f"{result.diagnostic}"
            )
            continue
        tags[result.tag] += 1
        if rng.random() < subsample:
            reverified += 1
            ok = dense_verdict_check(ch, result)
            if not ok:
                failures.append(
                    f"mask {mask:#06x}: dense oracle rejects {result.tag} witness "
                    f"{result.witness}"
                )
    detail = (
        f"{len(masks)} channels classified: {tags['Anticlique']} anticliques, "
        f"{tags['Clique']} cliques, {tags['MaximalStabilizerChannel']} maximal; "
        f"{reverified} verdicts re-verified densely"
    )
    return _result("trichotomy over every n=2 channel", failures, detail)


def dense_verdict_check(ch: PauliChannel, result: ramsey.ClassificationResult) -> bool:
    if result.tag == "Anticlique":
        return oracle.dense_compressed_dimension(ch, result.witness).rank == 1
    if result.tag == "Clique":
        want = 1 << (2 * result.witness.k)
        return oracle.dense_compressed_dimension(ch, result.witness).rank == want
    if result.tag == "MaximalStabilizerChannel":
        return oracle.dense_maximal_check(ch, result.witness)
    return False


def check_correctability_equivalence(max_subset_size: int = 4) -> CheckResult:
    """gottesman_correctable == is_anticlique == kl_check, exhaustively at n=2."""
    failures: list[str] = []
    candidates = _code_candidates(2)
    total = 0
    for subset in _small_subsets(2, max_subset_size):
        ch = _subset_channel(subset, 2)
        for group in candidates:
            total += 1
            gottesman = ramsey.gottesman_correctable(ch, group)
            anti = ramsey.is_anticlique(ch, group)
            kl = oracle.kl_check(ch, group)
            if not (gottesman == anti == kl):
                failures.append(
                    f"noise {[str(o) for o in ch.operators]} vs {group}: "
                    f"gottesman={gottesman} anticlique={anti} kl={kl}"
                )
    return _result(
        "correctability criteria agree",
        failures,
        f"{total} (channel, code) cases: gottesman == anticlique == KL throughout",
    )


def check_sign_invariance(cases: int = 50, seed: int = 0) -> CheckResult:
    """Generator signs move the projector but never the compressed rank."""
    failures: list[str] = []
    rng = random.Random(seed)
    checked = 0
    for _ in range(cases):
        n = rng.randrange(1, 3)
        ch = _random_channel(rng, n, 5)
        group = _random_group(rng, n, rng.randrange(1, n + 1), signs=False)
        base = oracle.dense_compressed_dimension(ch, group).rank
        for i, g in enumerate(group.generators):
            flipped_gens = list(group.generators)
            flipped_gens[i] = PauliOperator(n, (g.phase + 2) % 4, g.x, g.z)
            flipped = stabilizer.validate(flipped_gens, n=n)
            checked += 1
            if np.array_equal(
                stabilizer.projector(group), stabilizer.projector(flipped)
            ):
                failures.append(f"{group}: flipping generator {i + 1} kept P fixed")
                continue
            got = oracle.dense_compressed_dimension(ch, flipped).rank
            if got != base:
                failures.append(
                    f"noise {[str(o) for o in ch.operators]} vs {group}: "
                    f"rank {base} became {got} after flipping generator {i + 1}"
                )
    return _result(
        "sign invariance of the compressed rank",
        failures,
        f"{checked} single-sign flips over {cases} random (channel, code) cases; "
        "projector always changed, dense rank never did",
    )


def check_completion_lemmas(cases: int = 100, seed: int = 0) -> CheckResult:
    """extend_to_maximal and anticommuting_partners meet their postconditions."""
    failures: list[str] = []
    rng = random.Random(seed)
    for case in range(cases):
        n = rng.randrange(1, 5)
        group = _random_group(rng, n)
        full = stabilizer.extend_to_maximal(group)
        if tuple(full[: group.num_generators]) != group.generators:
            failures.append(f"case {case}: completion disturbed the prefix")
            continue
        try:
            stabilizer.validate(full, n=n)
        except ValueError as exc:
            failures.append(f"case {case}: completion invalid: {exc}")
            continue
        if len(full) != n:
            failures.append(f"case {case}: completion has {len(full)} generators")
            continue
        partners = stabilizer.anticommuting_partners(full)
        for i, g in enumerate(partners):
            for j, h in enumerate(full):
                if g.commutes(h) != (i != j):
                    failures.append(
                        f"case {case}: partner {i + 1} breaks the delta pattern"
                    )
        for i in range(n):
            for j in range(i + 1, n):
                if not partners[i].commutes(partners[j]):
                    failures.append(f"case {case}: partners {i + 1},{j + 1} anticommute")
        rows = [g.check_vector() for g in full] + [g.check_vector() for g in partners]
        if f2.reduce(rows, n).dim != 2 * n:
            failures.append(f"case {case}: combined check vectors do not span")
    return _result(
        "completion lemmas",
        failures,
        f"{cases} random completions at n<=4: prefixes kept, delta commutation "
        "pattern exact, combined rank 2n",
    )


def check_private_codes(
    samples: int = 100,
    seed: int = 0,
    subsample: float = 0.01,
    mask_sample: int | None = None,
) -> CheckResult:
    """Every sampled clique witness is a private code at the sampled pairs."""
    failures: list[str] = []
    rng = random.Random(seed)
    masks: list[int] = list(range(1, 1 << 16))
    if mask_sample is not None:
        masks = sorted(rng.sample(masks, min(mask_sample, len(masks))))
    selected = [m for m in masks if rng.random() < subsample]
    cliques = 0
    for mask in selected:
        ch = _mask_channel(mask, 2)
        result = ramsey.classify(ch)
        if result.tag != "Clique":
            continue
        cliques += 1
        if not oracle.private_witness_check(
            ch, result.witness, samples=samples, seed=seed
        ):
            failures.append(
                f"mask {mask:#06x}: clique witness {result.witness} failed "
                f"privacy sampling"
            )
    return _result(
        "clique witnesses are private codes",
        failures,
        f"{cliques} clique witnesses from {len(selected)} sampled channels, "
        f"{samples} orthogonal pairs each, all pairs saw noise overlap",
    )


CRITERIA: tuple[tuple[int, str], ...] = (
    (1, "check_pauli_algebra"),
    (2, "check_centralizer_dimension"),
    (3, "check_oracle_equivalence"),
    (4, "check_main_theorem"),
    (5, "check_trichotomy"),
    (6, "check_correctability_equivalence"),
    (7, "check_sign_invariance"),
    (8, "check_completion_lemmas"),
    (9, "check_private_codes"),
)


def run(
    exhaustive: bool = False, seed: int = 0, max_n: int | None = None
) -> list[tuple[int, CheckResult]]:
    """Run all criteria; quick parameters unless ``exhaustive``."""
    cap = max_n if max_n is not None else 4
    if exhaustive:
        plan = {
            "check_pauli_algebra": dict(seed=seed, max_n=min(3, cap)),
            "check_centralizer_dimension": dict(max_n=min(3, cap)),
            "check_oracle_equivalence": dict(seed=seed),
            "check_main_theorem": dict(seed=seed),
            "check_trichotomy": dict(seed=seed),
            "check_correctability_equivalence": dict(),
            "check_sign_invariance": dict(seed=seed),
            "check_completion_lemmas": dict(seed=seed),
            "check_private_codes": dict(seed=seed),
        }
    else:
        plan = {
            "check_pauli_algebra": dict(pairs=100, seed=seed, max_n=min(3, cap)),
            "check_centralizer_dimension": dict(max_n=min(3, cap)),
            "check_oracle_equivalence": dict(
                seed=seed, max_subset_size=2, n3_cases=20 if cap >= 3 else 0
            ),
            "check_main_theorem": dict(seed=seed, n3_cases=3 if cap >= 3 else 0),
            "check_trichotomy": dict(seed=seed, mask_sample=1500),
            "check_correctability_equivalence": dict(max_subset_size=2),
            "check_sign_invariance": dict(cases=15, seed=seed),
            "check_completion_lemmas": dict(cases=25, seed=seed),
            "check_private_codes": dict(
                samples=25, seed=seed, subsample=0.05, mask_sample=1500
            ),
        }
    out = []
    for number, name in CRITERIA:
        func = globals()[name]
        out.append((number, func(**plan[name])))
    return out
