import numpy as np
import pytest
from fractions import Fraction

from cosetlab import oracle, sampling
from cosetlab.errors import (
    CapExceededError,
    GroupMismatchError,
    VerificationError,
    ZeroRankError,
)
from cosetlab.groups import cached_group, involution_class, parse_cycles
from cosetlab.irreps import group_irreps, irrep_labels, label_dim, label_str, plancherel
from cosetlab.rng import CounterRng
from cosetlab.sampling import (
    HiddenSubgroup,
    MeasurementBasis,
    RegisterTuple,
    claim_projector_average,
    doubled_expectation,
    expected_isotypic_dimension,
    interference_moments,
    multiregister_dist,
    multiregister_expectation,
    projector_rank,
    projector_sum_bound,
    strong_dist,
    subgroup_projector,
    subset_expectation,
    subsets,
    weak_dist,
    weak_dist_tuples,
    weak_rank,
)

S3 = cached_group("sym:3")
S4 = cached_group("sym:4")
W2 = cached_group("wreath:2")
W3 = cached_group("wreath:3")


def transposition_subgroup(group, text="(01)"):
    return HiddenSubgroup(group, parse_cycles(text, group.n))


def swap_subgroup(group):
    return HiddenSubgroup(group, involution_class(group).representative)


# ---------------------------------------------------------------------------
# Hidden subgroup and basis plumbing

def test_hidden_subgroup_rejects_identity():
    with pytest.raises(ValueError):
        HiddenSubgroup(S3, parse_cycles("e", 3))


def test_hidden_subgroup_rejects_non_involution():
    with pytest.raises(ValueError):
        HiddenSubgroup(S3, parse_cycles("(012)", 3))


def test_hidden_subgroup_descriptor():
    assert HiddenSubgroup(S3).descriptor() == "trivial"
    assert HiddenSubgroup(S3).order == 1
    h = transposition_subgroup(S3)
    assert h.order == 2
    assert h.descriptor() == str(h.m)


def test_basis_rejects_non_orthonormal():
    with pytest.raises(ValueError):
        MeasurementBasis(np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        MeasurementBasis(np.ones((2, 3)))


def test_basis_product_and_haar():
    rng = CounterRng(7, "basis")
    b1 = MeasurementBasis.haar(2, rng.sub("a"))
    b2 = MeasurementBasis.standard(3)
    prod = MeasurementBasis.product(b1, b2)
    assert prod.dim == 6
    assert prod.provenance.startswith("product(haar[seed=7;")
    # Haar basis is replayable from the same stream.
    again = MeasurementBasis.haar(2, rng.sub("a"))
    np.testing.assert_array_equal(b1.vectors, again.vectors)


def test_register_tuple_validation():
    reps3 = group_irreps(S3)
    reps4 = group_irreps(S4)
    with pytest.raises(GroupMismatchError):
        RegisterTuple((reps3[1], reps4[1]))
    with pytest.raises(CapExceededError):
        RegisterTuple((reps3[1],) * 3, tensor_cap=7)
    with pytest.raises(KeyError):
        RegisterTuple.from_labels(S3, ["[7]"])
    tup = RegisterTuple.from_labels(S3, ["[2,1]", "[2,1]"])
    assert tup.k == 2 and tup.total_dim == 4
    assert tup.labels == ("[2,1]", "[2,1]")


# ---------------------------------------------------------------------------
# Projectors and ranks

def test_subgroup_projector_refuses_trivial():
    rep = group_irreps(S3)[1]
    with pytest.raises(ValueError):
        subgroup_projector(rep, HiddenSubgroup(S3))


def test_projector_rank_matches_character_rank():
    for group, hidden in [
        (S3, transposition_subgroup(S3)),
        (S4, transposition_subgroup(S4)),
        (S4, transposition_subgroup(S4, "(01)(23)")),
        (W2, swap_subgroup(W2)),
        (W3, swap_subgroup(W3)),
    ]:
        for rep in group_irreps(group):
            proj = subgroup_projector(rep, hidden)
            assert projector_rank(proj) == weak_rank(group, rep.label, hidden)


def test_standard_sign_rep_rank_zero():
    # Sign representation of S_3 kills the transposition coset projector.
    assert weak_rank(S3, (1, 1, 1), transposition_subgroup(S3)) == 0


# ---------------------------------------------------------------------------
# Weak stage

def test_weak_s3_transposition_exact_values():
    dist = weak_dist(S3, transposition_subgroup(S3))
    assert dist.exact
    assert dist.probability("[3]") == Fraction(1, 3)
    assert dist.probability("[2,1]") == Fraction(2, 3)
    assert dist.probability("[1,1,1]") == 0


def test_weak_trivial_is_plancherel():
    for group in (S3, S4, W2, W3):
        dist = weak_dist(group, HiddenSubgroup(group))
        assert dist.outcomes == plancherel(group).outcomes


def test_weak_sums_to_one_everywhere():
    cases = [
        (S3, transposition_subgroup(S3)),
        (S4, transposition_subgroup(S4, "(01)(23)")),
        (W2, swap_subgroup(W2)),
        (W3, swap_subgroup(W3)),
    ]
    for group, hidden in cases:
        dist = weak_dist(group, hidden)
        assert sum(dist.exact_values()) == 1


def test_weak_wreath_swap_pairs_get_half_dimension_rank():
    hidden = swap_subgroup(W2)
    for lab in irrep_labels(W2):
        rank = weak_rank(W2, lab, hidden)
        if label_str(lab).startswith("{"):
            # chi vanishes on flip classes, so pairs keep exactly half.
            assert 2 * rank == label_dim(lab)


def test_weak_tuples_product_measure():
    hidden = transposition_subgroup(S3)
    dist = weak_dist_tuples(S3, hidden, 2)
    assert sum(dist.exact_values()) == 1
    single = weak_dist(S3, hidden)
    # Marginal over the second register recovers the one-register weights.
    for lab, p in single.outcomes:
        marg = sum(
            q for lbl, q in dist.outcomes if lbl.startswith("(" + lab + ",")
        )
        assert marg == p
    with pytest.raises(CapExceededError):
        weak_dist_tuples(S3, hidden, 2, cap=5)


# ---------------------------------------------------------------------------
# Strong stage

def test_strong_trivial_uniform_every_basis():
    rep = group_irreps(S3)[1]
    for basis in (
        MeasurementBasis.standard(2),
        MeasurementBasis.haar(2, CounterRng(3, "strong")),
    ):
        dist = strong_dist(rep, HiddenSubgroup(S3), basis)
        assert dist.exact
        assert all(p == Fraction(1, 2) for p in dist.exact_values())


def test_strong_zero_rank_raises():
    rep = group_irreps(S3)[2]
    assert rep.name == "[1,1,1]"
    with pytest.raises(ZeroRankError):
        strong_dist(rep, transposition_subgroup(S3), MeasurementBasis.standard(1))


def test_strong_standard_rep_pinned_values():
    rep = group_irreps(S3)[1]
    dist = strong_dist(rep, transposition_subgroup(S3), MeasurementBasis.standard(2))
    # Pi for (01) is diag(1, 0) in the orthogonal model, rank 1.
    assert dist.probability("b0") == pytest.approx(1.0, abs=1e-12)
    assert dist.probability("b1") == pytest.approx(0.0, abs=1e-12)


def test_strong_matches_rebuilt_matrices():
    rng = CounterRng(11, "strong-check")
    for group, hidden in [(S4, transposition_subgroup(S4)), (W2, swap_subgroup(W2))]:
        for rep in group_irreps(group):
            rank = weak_rank(group, rep.label, hidden)
            if rank == 0:
                continue
            basis = MeasurementBasis.haar(rep.dim, rng.sub(group.spec, rep.name))
            dist = strong_dist(rep, hidden, basis)
            proj = 0.5 * (np.eye(rep.dim) + oracle.rebuilt_matrix(rep, hidden.m))
            for j in range(rep.dim):
                mass = np.linalg.norm(proj @ basis.column(j)) ** 2
                assert dist.probability(f"b{j}") == pytest.approx(
                    mass / rank, abs=1e-9
                )


# ---------------------------------------------------------------------------
# Multiregister stage

def test_multiregister_trivial_uniform():
    tup = RegisterTuple.from_labels(S3, ["[2,1]", "[2,1]"])
    dist = multiregister_dist(tup, HiddenSubgroup(S3), MeasurementBasis.standard(4))
    assert dist.exact
    assert all(p == Fraction(1, 4) for p in dist.exact_values())


def test_multiregister_zero_rank_names_register():
    tup = RegisterTuple.from_labels(S3, ["[2,1]", "[1,1,1]"])
    with pytest.raises(ZeroRankError) as info:
        multiregister_dist(
            tup, transposition_subgroup(S3), MeasurementBasis.standard(2)
        )
    assert "[1,1,1]" in str(info.value)


def test_multiregister_matches_kron_oracle():
    rng = CounterRng(5, "multi-check")
    cases = [
        (S3, ["[2,1]", "[2,1]"], transposition_subgroup(S3)),
        (W2, ["{[2],[1,1]}", "([2],+)"], swap_subgroup(W2)),
    ]
    for group, labels, hidden in cases:
        tup = RegisterTuple.from_labels(group, labels)
        basis = MeasurementBasis.haar(tup.total_dim, rng.sub(group.spec))
        dist = multiregister_dist(tup, hidden, basis)
        mats = [
            0.5 * (np.eye(rep.dim) + oracle.rebuilt_matrix(rep, hidden.m))
            for rep in tup.irreps
        ]
        full = mats[0]
        for mat in mats[1:]:
            full = np.kron(full, mat)
        rank = round(np.real(full.trace()))
        for j in range(tup.total_dim):
            mass = np.linalg.norm(full @ basis.column(j)) ** 2
            assert dist.probability(f"b{j}") == pytest.approx(mass / rank, abs=1e-9)


def test_multiregister_k1_equals_strong():
    hidden = transposition_subgroup(S4)
    rep = group_irreps(S4)[1]
    basis = MeasurementBasis.haar(rep.dim, CounterRng(2, "k1"))
    tup = RegisterTuple((rep,))
    a = strong_dist(rep, hidden, basis)
    b = multiregister_dist(tup, hidden, basis)
    np.testing.assert_allclose(a.values(), b.values(), atol=1e-12)


# ---------------------------------------------------------------------------
# Interference functionals

def test_subsets_enumeration():
    assert subsets(2) == [(), (0,), (1,), (0, 1)]
    assert subsets(2, nonempty=True) == [(0,), (1,), (0, 1)]


def test_subset_expectation_pinned_standard_rep():
    rep = group_irreps(S3)[1]
    tup = RegisterTuple((rep, rep))
    M = S3.class_of(parse_cycles("(01)", 3))
    b = np.zeros(4, dtype=complex)
    b[0] = 1.0
    # Averaged (0,0) entry over the three transpositions is zero, and the
    # doubled entry squares to (1 + 1/4 + 1/4)/3 = 1/2.
    assert subset_expectation(tup, b, (0,), M) == pytest.approx(0.0, abs=1e-12)
    assert subset_expectation(tup, b, (1,), M) == pytest.approx(0.0, abs=1e-12)
    assert subset_expectation(tup, b, (0, 1), M) == pytest.approx(0.5, abs=1e-12)


def test_subset_expectation_matches_brute():
    rng = CounterRng(13, "subset")
    cases = [
        (S3, ["[2,1]", "[2,1]"], S3.class_of(parse_cycles("(01)", 3))),
        (W2, ["([2],-)", "{[2],[1,1]}"], involution_class(W2)),
    ]
    for group, labels, M in cases:
        tup = RegisterTuple.from_labels(group, labels)
        b = rng.sub(group.spec).unit_vector(tup.total_dim)
        for sub in subsets(tup.k, nonempty=True):
            spectral = subset_expectation(tup, b, sub, M)
            brute = oracle.brute_subset_overlap(tup.irreps, b, sub, M)
            assert abs(brute.imag) < 1e-9
            assert spectral == pytest.approx(brute.real, abs=1e-9)


def test_doubled_expectation_matches_brute():
    rng = CounterRng(17, "doubled")
    cases = [
        (S3, ["[2,1]", "[2,1]"], S3.class_of(parse_cycles("(01)", 3))),
        (W2, ["([1,1],-)", "{[2],[1,1]}"], involution_class(W2)),
    ]
    for group, labels, M in cases:
        tup = RegisterTuple.from_labels(group, labels)
        b = rng.sub(group.spec).unit_vector(tup.total_dim)
        for s1 in subsets(tup.k):
            for s2 in subsets(tup.k):
                spectral = doubled_expectation(tup, b, s1, s2, M)
                brute = oracle.brute_doubled_overlap(tup.irreps, b, s1, s2, M)
                assert abs(brute.imag) < 1e-9
                assert spectral == pytest.approx(brute.real, abs=1e-9)


def test_doubled_empty_pair_is_norm_fourth():
    tup = RegisterTuple.from_labels(S3, ["[2,1]"])
    b = CounterRng(19).unit_vector(2)
    M = S3.class_of(parse_cycles("(01)", 3))
    assert doubled_expectation(tup, b, (), (), M) == pytest.approx(1.0, abs=1e-12)


def test_interference_moments_pinned():
    rep = group_irreps(S3)[1]
    tup = RegisterTuple((rep, rep))
    M = S3.class_of(parse_cycles("(01)", 3))
    b = np.zeros(4, dtype=complex)
    b[0] = 1.0
    mom = interference_moments(tup, b, M)  # check=True runs the brute oracle
    assert mom.expectation == pytest.approx(3 / 8, abs=1e-12)
    assert mom.variance == pytest.approx(25 / 128, abs=1e-12)
    assert mom.variance_bound >= mom.variance
    assert mom.oracle_mean == pytest.approx(3 / 8, abs=1e-12)


def test_interference_moments_random_vectors_verified():
    rng = CounterRng(23, "moments")
    cases = [
        (S3, ["[2,1]", "[2,1]", "[2,1]"], S3.class_of(parse_cycles("(01)", 3))),
        (W2, ["{[2],[1,1]}", "([2],-)"], involution_class(W2)),
        (W3, ["{[3],[2,1]}", "([2,1],+)"], involution_class(W3)),
    ]
    for group, labels, M in cases:
        tup = RegisterTuple.from_labels(group, labels)
        for t in range(3):
            b = rng.sub(group.spec, t).unit_vector(tup.total_dim)
            mom = interference_moments(tup, b, M)
            assert mom.variance >= -1e-12
            assert mom.variance_bound >= mom.variance - 1e-12


def test_trivial_register_moments_are_degenerate():
    tup = RegisterTuple.from_labels(S3, ["[3]", "[3]"])
    M = S3.class_of(parse_cycles("(01)", 3))
    b = np.array([1.0 + 0j])
    mom = interference_moments(tup, b, M)
    assert mom.expectation == pytest.approx(1.0, abs=1e-12)
    assert mom.variance == pytest.approx(0.0, abs=1e-12)


def test_multiregister_expectation_verifies_against_oracle():
    tup = RegisterTuple.from_labels(W2, ["([2],-)", "([1,1],+)"])
    b = CounterRng(29).unit_vector(tup.total_dim)
    val = multiregister_expectation(tup, b, involution_class(W2))
    brute, _ = oracle.brute_multiregister_moments(tup.irreps, b, involution_class(W2))
    assert val == pytest.approx(brute, abs=1e-9)


def test_class_must_be_involutions():
    tup = RegisterTuple.from_labels(S3, ["[2,1]"])
    b = np.zeros(2, dtype=complex)
    b[0] = 1.0
    with pytest.raises(ValueError):
        subset_expectation(tup, b, (0,), S3.class_of(parse_cycles("(012)", 3)))
    with pytest.raises(GroupMismatchError):
        subset_expectation(tup, b, (0,), involution_class(W2))


# ---------------------------------------------------------------------------
# Second-moment inequalities

def test_claim_projector_average_irreducible_is_tight():
    for group in (S3, S4, W2):
        for rep in group_irreps(group):
            b = CounterRng(31, group.spec, rep.name).unit_vector(rep.dim)
            lhs, rhs = claim_projector_average(rep, b)
            assert lhs == pytest.approx(1 / rep.dim, abs=1e-9)
            assert rhs == pytest.approx(1 / rep.dim, abs=1e-9)


def test_claim_projector_average_tensor_rep():
    from cosetlab.irreps import MatrixRep

    rep = group_irreps(S3)[1]
    stack = np.einsum("gij,gkl->gikjl", rep.stack, rep.stack).reshape(6, 4, 4)
    tensor = MatrixRep(S3, stack, name="[2,1]x[2,1]")
    for t in range(4):
        b = CounterRng(37, t).unit_vector(4)
        lhs, rhs = claim_projector_average(tensor, b)
        assert lhs <= rhs + 1e-9


def test_projector_sum_bound_holds():
    rng = CounterRng(41, "psb")
    cases = [
        (S3, ["[2,1]"], 1),
        (S3, ["[2,1]", "[2,1]"], 2),
        (W2, ["{[2],[1,1]}", "([1,1],-)"], 2),
    ]
    for group, labels, _ in cases:
        tup = RegisterTuple.from_labels(group, labels)
        b = rng.sub(group.spec, len(labels)).unit_vector(tup.total_dim)
        for sigma in irrep_labels(group):
            lhs, rhs = projector_sum_bound(tup, sigma, b)
            assert lhs <= rhs + 1e-9


def test_projector_sum_bound_needs_empty_subsets():
    # Restricting the right side to nonempty subsets breaks on the trivial
    # component already at k = 1: the identity-pair term contributes a full
    # ||b||^4 to the left side that only the empty subset can pay for.
    tup = RegisterTuple.from_labels(S3, ["[2,1]"])
    b = np.zeros(2, dtype=complex)
    b[0] = 1.0
    lhs, rhs = projector_sum_bound(tup, (3,), b)
    assert lhs <= rhs + 1e-12
    masses = sampling.isotypic_masses(tup, (0,), b)
    nonempty_rhs = 2 * sum(
        masses[label_str(t)] / label_dim(t) for t in irrep_labels(S3)
    )
    assert lhs > nonempty_rhs + 0.4


def test_expected_isotypic_dimension_identity():
    for group in (S3, W2):
        for k in (1, 2):
            for sub in subsets(k, nonempty=True):
                for sigma in irrep_labels(group):
                    val = expected_isotypic_dimension(sigma, sub, k, group)
                    assert val == Fraction(label_dim(sigma) ** 2, group.order)


def test_expected_isotypic_dimension_guards():
    with pytest.raises(ValueError):
        expected_isotypic_dimension((3,), (), 2, S3)
    with pytest.raises(ValueError):
        expected_isotypic_dimension((3,), (5,), 2, S3)
    with pytest.raises(CapExceededError):
        expected_isotypic_dimension((3,), (0,), 2, S3, cap=3)
