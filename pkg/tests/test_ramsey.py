"""Decision procedures: compressed dimension, witnesses, search, trichotomy.

The dense oracle module is used freely as the ground truth; exhaustive
agreement over the whole n=2 landscape lives in the acceptance suite,
so here the focus is the contracts and the worked examples.
"""

import random
from itertools import combinations

import pytest

from qramsey import channel, f2, oracle, ramsey, stabilizer
from qramsey.pauli import CapacityError, hermitian_rep, identity, parse


def make_channel(*ops, n=None):
    return channel.from_noise([parse(s) for s in ops], n=n)


def random_channel(rng, n, max_ops=5):
    ops = [
        hermitian_rep(rng.randrange(1 << (2 * n)), n)
        for _ in range(rng.randrange(1, max_ops))
    ]
    return channel.from_noise(ops, n=n)


def random_group(rng, n, d=None):
    if d is None:
        d = rng.randrange(0, n + 1)
    rows = []
    while len(rows) < d:
        v = rng.randrange(1, 1 << (2 * n))
        if all(f2.twisted_dot(v, r, n) == 0 for r in rows) and not f2.in_span(
            v, f2.reduce(rows, n)
        ):
            rows.append(v)
    return stabilizer.validate([hermitian_rep(v, n) for v in rows], n=n)


MAXIMAL_X = channel.maximal_stabilizer_channel(stabilizer.from_string("XI,IX"))
FULL_P2 = channel.from_noise([hermitian_rep(v, 2) for v in range(16)])


class TestCompressedDimension:
    def test_maximal_channel_against_zz(self):
        assert ramsey.compressed_dimension(MAXIMAL_X, stabilizer.from_string("ZZ")) == 2

    def test_identity_channel_is_always_one(self):
        ident = make_channel("II")
        for text in ("ZZ", "ZI", "ZI,IZ", "XX,ZZ"):
            assert ramsey.compressed_dimension(ident, stabilizer.from_string(text)) == 1

    def test_full_pauli_channel_saturates(self):
        assert ramsey.compressed_dimension(FULL_P2, stabilizer.from_string("ZI")) == 4

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="qubits"):
            ramsey.compressed_dimension(make_channel("X"), stabilizer.from_string("ZI"))

    def test_monotone_bounds(self):
        rng = random.Random(3)
        for _ in range(60):
            n = rng.randrange(1, 4)
            ch = random_channel(rng, n)
            group = random_group(rng, n)
            dim = ramsey.compressed_dimension(ch, group)
            assert 1 <= dim <= min(
                len(channel.difference_set(ch)), 1 << (2 * group.k)
            )

    def test_agrees_with_dense_oracle(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randrange(1, 4)
            ch = random_channel(rng, n)
            group = random_group(rng, n)
            assert (
                ramsey.compressed_dimension(ch, group)
                == oracle.dense_compressed_dimension(ch, group).rank
            )


class TestCliqueAnticliquePredicates:
    def test_dephasing_pair_is_anticlique_on_zi(self):
        ch = make_channel("XI", "ZI")
        assert ramsey.is_anticlique(ch, stabilizer.from_string("ZI"))
        assert not ramsey.is_clique(ch, stabilizer.from_string("ZI"))

    def test_clique_example(self):
        ch = make_channel("II", "XI", "ZI")
        assert ramsey.is_clique(ch, stabilizer.from_string("IX"))

    def test_maximal_channel_has_no_nontrivial_witnesses(self):
        for d in (1, 2):
            for basis in f2.enumerate_isotropic(2, d):
                group = stabilizer.validate(
                    [hermitian_rep(v, 2) for v in basis.rows], n=2
                )
                if group.k == 0:
                    continue
                assert not ramsey.is_anticlique(MAXIMAL_X, group)
                assert not ramsey.is_clique(MAXIMAL_X, group)

    def test_weights_are_irrelevant(self):
        ops = [parse("II"), parse("XI"), parse("ZI")]
        skew = channel.from_noise(ops, [0.90, 0.05, 0.05])
        group = stabilizer.from_string("IX")
        assert ramsey.is_clique(skew, group)
        assert ramsey.compressed_dimension(skew, group) == 4


class TestGottesmanCorrectable:
    def test_repetition_code_corrects_bit_flips(self):
        noise = make_channel("III", "XII", "IXI", "IIX")
        assert ramsey.gottesman_correctable(noise, stabilizer.from_string("ZZI,IZZ"))

    def test_undetected_logical_noise(self):
        noise = make_channel("III", "ZII")
        assert not ramsey.gottesman_correctable(noise, stabilizer.from_string("ZZI,IZZ"))

    def test_identity_channel(self):
        rng = random.Random(7)
        for _ in range(10):
            n = rng.randrange(1, 4)
            assert ramsey.gottesman_correctable(
                channel.from_noise([identity(n)]), random_group(rng, n)
            )

    def test_matches_anticlique_on_random_cases(self):
        rng = random.Random(11)
        for _ in range(80):
            n = rng.randrange(1, 3)
            ch = random_channel(rng, n)
            group = random_group(rng, n)
            assert ramsey.gottesman_correctable(ch, group) == ramsey.is_anticlique(
                ch, group
            )


class TestSearch:
    def test_maximal_channel_yields_no_witnesses(self):
        report = ramsey.search(MAXIMAL_X, "both")
        assert report.witnesses == ()
        assert report.examined == ((1, 15), (2, 1))
        assert report.total_examined == 16

    def test_examined_counts_match_enumeration(self):
        report = ramsey.search(make_channel("III"), "anticlique")
        for k, count in report.examined:
            assert count == sum(1 for _ in f2.enumerate_isotropic(3, 3 - k))

    def test_identity_channel_every_code_is_an_anticlique(self):
        report = ramsey.search(make_channel("II"), "anticlique", [1])
        assert len(report.witnesses) == 15
        assert all(w.kind == "anticlique" and w.dim_pgp == 1 for w in report.witnesses)

    def test_full_pauli_channel_every_code_is_a_clique(self):
        report = ramsey.search(FULL_P2, "clique")
        assert len(report.witnesses) == 16
        assert {w.k for w in report.witnesses} == {1, 2}

    def test_witnesses_verified_by_public_predicates(self):
        ch = make_channel("II", "XI", "ZI")
        report = ramsey.search(ch, "both")
        assert report.witnesses
        for w in report.witnesses:
            if w.kind == "anticlique":
                assert ramsey.is_anticlique(ch, w.group)
            else:
                assert ramsey.is_clique(ch, w.group)
            assert ramsey.compressed_dimension(ch, w.group) == w.dim_pgp

    def test_deterministic(self):
        ch = make_channel("II", "XI", "ZI")
        assert ramsey.search(ch, "both") == ramsey.search(ch, "both")

    def test_mode_filtering(self):
        ch = make_channel("II", "XI", "ZI")
        both = ramsey.search(ch, "both")
        anti = ramsey.search(ch, "anticlique")
        cliq = ramsey.search(ch, "clique")
        assert {w for w in both.witnesses if w.kind == "anticlique"} == set(anti.witnesses)
        assert {w for w in both.witnesses if w.kind == "clique"} == set(cliq.witnesses)

    def test_k_range_validation(self):
        ch = make_channel("II")
        with pytest.raises(ValueError, match="nonempty"):
            ramsey.search(ch, "both", [])
        with pytest.raises(ValueError, match="1..2"):
            ramsey.search(ch, "both", [3])
        with pytest.raises(ValueError, match="mode"):
            ramsey.search(ch, "sideways")

    def test_capacity_limit(self):
        with pytest.raises(CapacityError):
            ramsey.search(channel.from_noise([identity(5)]), "both")

    def test_json_shape(self):
        doc = ramsey.search(make_channel("XI", "ZI"), "both", [1]).to_json_dict()
        assert doc["channel"] == {"n": 2, "noise": ["XI", "ZI"]}
        assert doc["mode"] == "both"
        assert doc["examined"] == {"1": 15}
        for w in doc["witnesses"]:
            assert set(w) == {"k", "kind", "witness_generators", "dim_PGP"}


class TestClassify:
    def test_maximal_stabilizer_channel(self):
        result = ramsey.classify(MAXIMAL_X)
        assert result.tag == "MaximalStabilizerChannel"
        assert str(result.witness) == "XI,IX"
        assert result.examined == 0
        # the witness reconstructs the channel's difference set exactly
        span = set(result.witness.check_basis().span())
        assert span == channel.difference_set(MAXIMAL_X)

    def test_single_qubit_conjugate_noise_is_maximal(self):
        result = ramsey.classify(make_channel("X", "Z"))
        assert result.tag == "MaximalStabilizerChannel"
        assert str(result.witness) == "Y"

    def test_clique_from_the_constructive_path(self):
        result = ramsey.classify(make_channel("II", "XI", "ZI"))
        assert result.tag == "Clique"
        assert str(result.witness) == "IX"
        assert result.dim_pgp == 4
        assert result.examined == 0

    def test_anticlique_via_fallback(self):
        # the clique candidate fails (no identity in the noise), so the
        # exhaustive fallback runs and finds an anticlique
        ch = make_channel("XI", "ZI")
        result = ramsey.classify(ch)
        assert result.tag == "Anticlique"
        assert result.examined > 0
        assert ramsey.is_anticlique(ch, result.witness)
        assert oracle.dense_compressed_dimension(ch, result.witness).rank == 1

    def test_commuting_noise_constructive_anticlique(self):
        ch = make_channel("II", "ZI")
        result = ramsey.classify(ch)
        assert result.tag == "Anticlique"
        assert result.examined == 0
        assert ramsey.is_anticlique(ch, result.witness)

    def test_pure_noise_channel_full_space_witness(self):
        result = ramsey.classify(make_channel("X"))
        assert result.tag == "Anticlique"
        assert result.witness.num_generators == 0
        assert result.witness.k == 1

    def test_construction_wins_even_when_anticlique_exists(self):
        # both witness kinds exist for this channel; the noncommuting
        # construction is tried first and returns the clique
        ch = make_channel("III", "XII", "ZII")
        result = ramsey.classify(ch)
        assert result.tag == "Clique"
        assert result.examined == 0
        anti = ramsey.search(ch, "anticlique", [1])
        assert anti.witnesses

    def test_random_channels_never_inconsistent(self):
        rng = random.Random(13)
        for _ in range(120):
            n = rng.randrange(1, 4)
            ch = random_channel(rng, n)
            result = ramsey.classify(ch)
            assert result.tag != "Inconsistent"
            if result.tag == "Anticlique":
                assert ramsey.is_anticlique(ch, result.witness)
            elif result.tag == "Clique":
                assert ramsey.is_clique(ch, result.witness)

    def test_witness_groups_are_canonical(self):
        result = ramsey.classify(make_channel("XI", "ZI"))
        rebuilt = stabilizer.validate(result.witness.generators, n=2)
        assert rebuilt == result.witness

    def test_capacity_limit(self):
        with pytest.raises(CapacityError):
            ramsey.classify(channel.from_noise([identity(5)]))
        assert ramsey.classify(channel.from_noise([identity(5)]), limit=5).tag

    def test_json_shape(self):
        doc = ramsey.classify(make_channel("II", "XI", "ZI")).to_json_dict()
        assert doc == {
            "verdict": "Clique",
            "witness_generators": ["IX"],
            "dim_PGP": 4,
            "examined": 0,
        }


class TestConstructionInternals:
    """The two proof procedures, checked on their own postconditions."""

    def test_commuting_candidates_verify(self):
        rng = random.Random(17)
        built = 0
        for _ in range(200):
            n = rng.randrange(1, 4)
            rows = random_group(rng, n, rng.randrange(0, n + 1)).generators
            ops = [identity(n), *rows]
            ch = channel.from_noise(ops, n=n)
            diffs = channel.difference_set(ch)
            if ramsey._maximal_rows(diffs, n) is not None:
                continue
            checks = sorted({op.check_vector() for op in ch.operators})
            cand = ramsey._commuting_anticlique_candidate(checks, diffs, n)
            assert cand.num_generators == n - 1
            assert ramsey.is_anticlique(ch, cand)
            built += 1
        assert built > 100

    def test_noncommuting_candidate_shape(self):
        ch = make_channel("II", "XI", "ZI")
        checks = sorted({op.check_vector() for op in ch.operators})
        cand = ramsey._noncommuting_clique_candidate(checks, 2)
        assert cand.num_generators == 1
        # candidate generators commute with the first anticommuting check
        for g in cand.generators:
            assert f2.twisted_dot(g.check_vector(), checks[1], 2) == 0
