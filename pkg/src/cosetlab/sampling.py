"""Fourier sampling of coset states for a hidden involution subgroup.

The hidden subgroup is H = {e, m} with m an involution (or the trivial
subgroup, for control runs).  Measuring a coset state block-diagonalizes
into three stages, each of which is a finite distribution here:

  weak:   irrep label rho comes up with  d_rho |H| rank(Pi_H) / |G|,
          where Pi_H = (rho(e) + rho(m)) / 2.  The rank is (d + chi(m)) / 2,
          an exact integer, so the whole distribution is exact.
  strong: given rho, a basis vector b comes up with ||Pi_H b||^2 / rank.
  multiregister: k labels drawn independently at the weak stage share the
          same hidden m, so the strong stage on the tensor product sees
          interference between registers.

The interference functionals below average over a full conjugacy class M of
involutions.  With J_sigma the isotypic projector onto sigma inside the
action of the group on the chosen registers:

  subset_expectation(I)        sum_sigma (chi_sigma(M)/d_sigma) ||J_sigma b||^2
                               = average over m in M of <b, m^I b>,
  doubled_expectation(I1, I2)  the same on b (x) conj(b), carried as the
                               rank-one matrix W = b b^dagger so that no
                               D^2 x D^2 matrix is ever materialized.

These give exact mean / variance identities for the measured mass
||Pi_m^(x)k b||^2 as m ranges over M, which is what the distinguishability
bounds consume.  Every functional here is checked against the brute-force
oracle module in the test suite; the expectation and variance entry points
re-run that comparison at call time unless explicitly told not to.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np

from .distributions import SamplingDistribution, uniform_distribution
from .errors import (
    CapExceededError,
    GroupMismatchError,
    NonCharacterError,
    RepresentationDefectError,
    VerificationError,
    ZeroRankError,
)
from .groups import ConjugacyClass, FiniteGroup
from .irreps import (
    EPS,
    TRACE_INT_TOL,
    Irrep,
    MatrixRep,
    character_table,
    group_irreps,
    irrep_labels,
    label_dim,
    label_str,
)
from .rng import CounterRng

TOL = 1e-9
DEFAULT_TENSOR_CAP = 4096
# Above this many stacked entries (|G| * D^2) the subset action falls back to
# a per-element loop instead of a dense Kronecker stack.
_DENSE_LIMIT = 1 << 25


# ---------------------------------------------------------------------------
# Hidden subgroup and measurement basis

@dataclass(frozen=True)
class HiddenSubgroup:
    """H = {e, m} for an involution m, or the trivial subgroup (m None)."""

    group: FiniteGroup
    m: object = None

    def __post_init__(self):
        if self.m is None:
            return
        e = self.group.elements[0]
        self.group.index(self.m)
        if self.m == e:
            raise ValueError("m is the identity; use m=None for the trivial subgroup")
        if self.m * self.m != e:
            raise ValueError(f"m = {self.m} is not an involution")

    @property
    def trivial(self) -> bool:
        return self.m is None

    @property
    def order(self) -> int:
        return 1 if self.trivial else 2

    def descriptor(self) -> str:
        return "trivial" if self.trivial else str(self.m)


class MeasurementBasis:
    """An orthonormal basis, columns of `vectors`, with provenance for reports."""

    def __init__(self, vectors: np.ndarray, provenance: str = "explicit"):
        arr = np.array(vectors, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"basis must be a square matrix, got {arr.shape}")
        gram = arr.conj().T @ arr
        defect = np.max(np.abs(gram - np.eye(arr.shape[0])))
        if defect > 1e-8:
            raise ValueError(f"basis is not orthonormal (defect {defect:.3e})")
        arr.setflags(write=False)
        self.vectors = arr
        self.provenance = provenance

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def column(self, j: int) -> np.ndarray:
        return self.vectors[:, j]

    @classmethod
    def standard(cls, dim: int) -> "MeasurementBasis":
        return cls(np.eye(dim), "standard")

    @classmethod
    def haar(cls, dim: int, rng: CounterRng) -> "MeasurementBasis":
        tag = "/".join(str(p) for p in rng.path)
        return cls(rng.haar_basis(dim), f"haar[seed={rng.seed};{tag}]")

    @classmethod
    def product(cls, *bases: "MeasurementBasis") -> "MeasurementBasis":
        mat = bases[0].vectors
        for b in bases[1:]:
            mat = np.kron(mat, b.vectors)
        return cls(mat, "product(" + ",".join(b.provenance for b in bases) + ")")


@dataclass(frozen=True)
class RegisterTuple:
    """A k-tuple of irreps of one group, with a cap on the tensor dimension."""

    irreps: tuple[Irrep, ...]
    tensor_cap: int = DEFAULT_TENSOR_CAP

    def __post_init__(self):
        if not self.irreps:
            raise ValueError("need at least one register")
        spec = self.irreps[0].group.spec
        for r in self.irreps:
            if r.group.spec != spec:
                raise GroupMismatchError("registers live over different groups")
        if self.total_dim > self.tensor_cap:
            raise CapExceededError(
                f"tensor dimension {self.total_dim} exceeds cap {self.tensor_cap}"
            )

    @classmethod
    def from_labels(cls, group: FiniteGroup, labels, cache_dir: str | None = None,
                    tensor_cap: int = DEFAULT_TENSOR_CAP) -> "RegisterTuple":
        by_label = {rep.name: rep for rep in group_irreps(group, cache_dir)}
        picked = []
        for lab in labels:
            key = lab if isinstance(lab, str) else label_str(lab)
            if key not in by_label:
                raise KeyError(f"no irrep labelled {key!r} over {group.spec}")
            picked.append(by_label[key])
        return cls(tuple(picked), tensor_cap)

    @property
    def group(self) -> FiniteGroup:
        return self.irreps[0].group

    @property
    def k(self) -> int:
        return len(self.irreps)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(r.dim for r in self.irreps)

    @property
    def total_dim(self) -> int:
        return prod(self.dims)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.irreps)


# ---------------------------------------------------------------------------
# Projectors and the three sampling stages

def subgroup_projector(rep: MatrixRep, hidden: HiddenSubgroup) -> np.ndarray:
    """(rep(e) + rep(m)) / 2.  The trivial subgroup has no projector stage."""
    if hidden.trivial:
        raise ValueError(
            "trivial subgroup: every stage is uniform, there is no projector"
        )
    if rep.group.spec != hidden.group.spec:
        raise GroupMismatchError("rep and hidden subgroup live over different groups")
    mat = 0.5 * (np.eye(rep.dim) + rep.matrix(hidden.m))
    defect = np.max(np.abs(mat @ mat - mat))
    if defect > EPS:
        raise RepresentationDefectError(
            f"subgroup projector not idempotent (defect {defect:.3e})"
        )
    herm = np.max(np.abs(mat - mat.conj().T))
    if herm > EPS:
        raise RepresentationDefectError(
            f"subgroup projector not self-adjoint (defect {herm:.3e})"
        )
    return mat


def projector_rank(mat: np.ndarray) -> int:
    """Rank of a projector from its trace, guarded against non-integers."""
    t = complex(mat.trace())
    if abs(t.imag) > TRACE_INT_TOL or abs(t.real - round(t.real)) > TRACE_INT_TOL:
        raise RepresentationDefectError(
            f"projector trace {t!r} is not an integer within tolerance"
        )
    return round(t.real)


def _class_position(group: FiniteGroup, cls: ConjugacyClass) -> int:
    for i, c in enumerate(group.conjugacy_classes()):
        if c is cls or c.representative == cls.representative:
            return i
    raise GroupMismatchError("conjugacy class does not belong to this group")


def _check_involution_class(group: FiniteGroup, M: ConjugacyClass) -> int:
    if M.group.spec != group.spec:
        raise GroupMismatchError(
            f"class over {M.group.spec} used with group {group.spec}"
        )
    e = group.elements[0]
    rep = M.representative
    if rep == e or rep * rep != e:
        raise ValueError(f"class of {rep} is not a class of involutions")
    return _class_position(group, M)


def weak_rank(group: FiniteGroup, label, hidden: HiddenSubgroup) -> int:
    """rank of Pi_H inside the irrep, exactly: d for trivial H, else
    (d + chi(m)) / 2."""
    d = label_dim(label)
    if hidden.trivial:
        return d
    chi = character_table(group)[label][_class_position(group, group.class_of(hidden.m))]
    rank = Fraction(d + chi, 2)
    assert rank.denominator == 1 and rank >= 0, (label, rank)
    return int(rank)


def weak_dist(group: FiniteGroup, hidden: HiddenSubgroup) -> SamplingDistribution:
    """Exact distribution of the observed irrep label."""
    if hidden.group.spec != group.spec:
        raise GroupMismatchError("hidden subgroup belongs to a different group")
    outcomes = []
    for lab in irrep_labels(group):
        rank = weak_rank(group, lab, hidden)
        p = Fraction(label_dim(lab) * hidden.order * rank, group.order)
        outcomes.append((label_str(lab), p))
    return SamplingDistribution(
        "weak", group.spec, hidden.descriptor(), tuple(outcomes), exact=True
    )


def weak_dist_tuples(group: FiniteGroup, hidden: HiddenSubgroup, k: int,
                     cap: int = 100_000) -> SamplingDistribution:
    """The k-register weak distribution: a product measure over label tuples."""
    single = weak_dist(group, hidden)
    if len(single.outcomes) ** k > cap:
        raise CapExceededError(
            f"{len(single.outcomes)}^{k} tuple outcomes exceed cap {cap}"
        )
    outcomes = []
    for combo in itertools.product(single.outcomes, repeat=k):
        lbl = "(" + ",".join(lab for lab, _ in combo) + ")"
        p = prod((p for _, p in combo), start=Fraction(1))
        outcomes.append((lbl, p))
    return SamplingDistribution(
        "weak-product", group.spec, hidden.descriptor(), tuple(outcomes), exact=True
    )


def strong_dist(rep: Irrep, hidden: HiddenSubgroup,
                basis: MeasurementBasis) -> SamplingDistribution:
    """Distribution of the measured basis vector inside one observed irrep."""
    if basis.dim != rep.dim:
        raise ValueError(f"basis dim {basis.dim} != irrep dim {rep.dim}")
    labels = tuple(f"b{j}" for j in range(rep.dim))
    if hidden.trivial:
        # Pi_H is exactly the identity and each basis vector is unit, so the
        # distribution is uniform with no arithmetic to do.
        return uniform_distribution(
            labels, "strong", rep.group.spec, "trivial", registers=(rep.name,)
        )
    proj = subgroup_projector(rep, hidden)
    rank = projector_rank(proj)
    if rank == 0:
        raise ZeroRankError(
            f"{rep.name}: Pi_H has rank 0 for m = {hidden.m}; "
            "this label never survives the weak stage"
        )
    masses = np.sum(np.abs(proj @ basis.vectors) ** 2, axis=0)
    outcomes = tuple(
        (labels[j], float(masses[j] / rank)) for j in range(rep.dim)
    )
    return SamplingDistribution(
        "strong", rep.group.spec, hidden.descriptor(), outcomes,
        registers=(rep.name,),
    )


def _apply_per_register(tensor: np.ndarray, mats: dict[int, np.ndarray]) -> np.ndarray:
    for axis, mat in mats.items():
        tensor = np.moveaxis(np.tensordot(mat, tensor, axes=(1, axis)), 0, axis)
    return tensor


def multiregister_dist(registers: RegisterTuple, hidden: HiddenSubgroup,
                       basis: MeasurementBasis) -> SamplingDistribution:
    """Strong measurement on the tensor product of k registers, one shared m."""
    D = registers.total_dim
    if basis.dim != D:
        raise ValueError(f"basis dim {basis.dim} != tensor dim {D}")
    labels = tuple(f"b{j}" for j in range(D))
    group = registers.group
    if hidden.trivial:
        return uniform_distribution(
            labels, "multiregister", group.spec, "trivial",
            registers=registers.labels,
        )
    projs = {}
    rank_total = 1
    for i, rep in enumerate(registers.irreps):
        proj = subgroup_projector(rep, hidden)
        rank = projector_rank(proj)
        if rank == 0:
            raise ZeroRankError(
                f"register {i} ({rep.name}): Pi_H has rank 0 for m = {hidden.m}"
            )
        projs[i] = proj
        rank_total *= rank
    block = basis.vectors.reshape(registers.dims + (D,))
    block = _apply_per_register(block, projs)
    masses = np.sum(np.abs(block.reshape(D, D)) ** 2, axis=0)
    outcomes = tuple((labels[j], float(masses[j] / rank_total)) for j in range(D))
    return SamplingDistribution(
        "multiregister", group.spec, hidden.descriptor(), outcomes,
        registers=registers.labels,
    )


# ---------------------------------------------------------------------------
# Isotypic masses via class-bucketed group averages

def subsets(k: int, nonempty: bool = False):
    """All subsets of range(k) as sorted tuples, in bitmask order."""
    out = []
    for mask in range(2 ** k):
        sub = tuple(i for i in range(k) if mask >> i & 1)
        if nonempty and not sub:
            continue
        out.append(sub)
    return out


def _subset_stack(registers: RegisterTuple, subset) -> np.ndarray:
    """Dense (|G|, D, D) stack of g acting on the subset registers only."""
    order = registers.group.order
    stack = np.ones((order, 1, 1))
    for i, rep in enumerate(registers.irreps):
        fac = rep.stack if i in subset else np.broadcast_to(
            np.eye(rep.dim), (order, rep.dim, rep.dim)
        )
        d0, d1 = stack.shape[1], rep.dim
        stack = np.einsum("gij,gkl->gikjl", stack, fac).reshape(
            order, d0 * d1, d0 * d1
        )
    return stack


def _bucket_by_class(group: FiniteGroup, per_element: np.ndarray) -> np.ndarray:
    n_classes = len(group.conjugacy_classes())
    out = np.zeros(n_classes, dtype=np.complex128)
    np.add.at(out, group.class_indices(), per_element)
    return out


def _subset_overlap_buckets(registers: RegisterTuple, subset,
                            b: np.ndarray) -> np.ndarray:
    """u_c = sum over g in class c of <b, g^subset b>."""
    group = registers.group
    D = registers.total_dim
    if group.order * D * D <= _DENSE_LIMIT:
        stack = _subset_stack(registers, subset)
        per = np.einsum("i,gij,j->g", b.conj(), stack, b)
    else:
        bt = b.reshape(registers.dims)
        per = np.empty(group.order, dtype=np.complex128)
        for gi in range(group.order):
            mats = {i: registers.irreps[i].stack[gi] for i in subset}
            per[gi] = np.vdot(b, _apply_per_register(bt, mats).reshape(-1))
    return _bucket_by_class(group, per)


def _masses_from_buckets(group: FiniteGroup, buckets: np.ndarray,
                         eps: float) -> dict[str, float]:
    """<b, J_sigma b> per irrep label, from class-bucketed overlaps."""
    table = character_table(group)
    out = {}
    for lab in irrep_labels(group):
        chi = np.asarray(table[lab], dtype=np.float64)
        val = complex(label_dim(lab) / group.order * np.dot(chi, buckets))
        if abs(val.imag) > eps:
            raise RepresentationDefectError(
                f"isotypic mass for {label_str(lab)} has imaginary part "
                f"{val.imag:.3e}"
            )
        out[label_str(lab)] = val.real
    return out


def isotypic_masses(registers: RegisterTuple, subset, b: np.ndarray,
                    eps: float = EPS) -> dict[str, float]:
    """||J_sigma b||^2 for every irrep sigma, with g acting on `subset` only."""
    buckets = _subset_overlap_buckets(registers, tuple(subset), b)
    return _masses_from_buckets(registers.group, buckets, eps)


def _doubled_overlap_buckets(registers: RegisterTuple, first, second,
                             b: np.ndarray) -> np.ndarray:
    """V_c = sum over g in class c of <W, g^first W (g^second)^dagger>_F,
    with W = b b^dagger carrying the doubled-space vector b (x) conj(b)."""
    D = registers.total_dim
    if D * D > registers.tensor_cap:
        raise CapExceededError(
            f"doubled dimension {D * D} exceeds cap {registers.tensor_cap}"
        )
    w = np.outer(b, b.conj())
    s1 = _subset_stack(registers, tuple(first))
    s2 = _subset_stack(registers, tuple(second))
    per = np.einsum("gik,kl,gjl,ij->g", s1, w, s2.conj(), w.conj(), optimize=True)
    return _bucket_by_class(registers.group, per)


def doubled_isotypic_masses(registers: RegisterTuple, first, second,
                            b: np.ndarray, eps: float = EPS) -> dict[str, float]:
    """||J_sigma (b (x) conj(b))||^2 per sigma on the doubled space, where g
    acts by g^first on the left factor and conj(g^second) on the right."""
    buckets = _doubled_overlap_buckets(registers, first, second, b)
    return _masses_from_buckets(registers.group, buckets, eps)


# ---------------------------------------------------------------------------
# Interference functionals over a class of involutions

def _class_coefficients(group: FiniteGroup, M: ConjugacyClass) -> dict[str, Fraction]:
    """chi_sigma(M) / d_sigma per label, exact; zero entries dropped."""
    pos = _check_involution_class(group, M)
    table = character_table(group)
    out = {}
    for lab in irrep_labels(group):
        chi = table[lab][pos]
        if chi:
            out[label_str(lab)] = Fraction(chi, label_dim(lab))
    return out


def subset_expectation(registers: RegisterTuple, b: np.ndarray, subset,
                       M: ConjugacyClass) -> float:
    """E^I: the average over m in M of <b, m^I b>, computed spectrally."""
    coeffs = _class_coefficients(registers.group, M)
    masses = isotypic_masses(registers, subset, b)
    return float(sum(float(c) * masses[lab] for lab, c in coeffs.items()))


def doubled_expectation(registers: RegisterTuple, b: np.ndarray, first, second,
                        M: ConjugacyClass) -> float:
    """E^{I1,I2}: the doubled-space analogue on b (x) conj(b)."""
    coeffs = _class_coefficients(registers.group, M)
    masses = doubled_isotypic_masses(registers, first, second, b)
    return float(sum(float(c) * masses[lab] for lab, c in coeffs.items()))


@dataclass(frozen=True)
class InterferenceMoments:
    """Exact spectral mean / variance of the mass ||Pi_m^(x)k b||^2 over M."""

    expectation: float
    variance: float
    variance_bound: float
    subset_terms: dict
    doubled_terms: dict
    oracle_mean: float | None = None
    oracle_variance: float | None = None


def interference_moments(registers: RegisterTuple, b: np.ndarray,
                         M: ConjugacyClass, check: bool = True,
                         tol: float = TOL) -> InterferenceMoments:
    """Mean and variance of the multiregister measurement mass over m in M.

    mean     = 2^-k (1 + sum over nonempty I of E^I)
    variance = 4^-k (sum over nonempty I1, I2 of E^{I1,I2}
                     - |sum over nonempty I of E^I|^2)
    and the raw doubled sum divided by 4^k is an upper bound for the
    variance.  With check=True (the default) both moments are re-derived by
    brute enumeration of M and a mismatch beyond tol raises
    VerificationError.
    """
    k = registers.k
    subs = subsets(k, nonempty=True)
    subset_terms = {s: subset_expectation(registers, b, s, M) for s in subs}
    doubled_terms = {
        (s1, s2): doubled_expectation(registers, b, s1, s2, M)
        for s1 in subs for s2 in subs
    }
    lin = sum(subset_terms.values())
    raw = sum(doubled_terms.values())
    mean = (1.0 + lin) / 2 ** k
    bound = raw / 4 ** k
    variance = (raw - lin * lin) / 4 ** k
    oracle_mean = oracle_var = None
    if check:
        from . import oracle

        oracle_mean, oracle_var = oracle.brute_multiregister_moments(
            registers.irreps, b, M
        )
        if abs(mean - oracle_mean) > tol:
            raise VerificationError(
                f"spectral mean {mean!r} != brute mean {oracle_mean!r}"
            )
        if abs(variance - oracle_var) > tol:
            raise VerificationError(
                f"spectral variance {variance!r} != brute variance {oracle_var!r}"
            )
        if bound < oracle_var - tol:
            raise VerificationError(
                f"variance bound {bound!r} below brute variance {oracle_var!r}"
            )
    return InterferenceMoments(
        float(mean), float(variance), float(bound),
        subset_terms, doubled_terms, oracle_mean, oracle_var,
    )


def multiregister_expectation(registers: RegisterTuple, b: np.ndarray,
                              M: ConjugacyClass, check: bool = True) -> float:
    """Average over m in M of ||Pi_m^(x)k b||^2, via the subset expansion."""
    k = registers.k
    lin = sum(
        subset_expectation(registers, b, s, M) for s in subsets(k, nonempty=True)
    )
    mean = (1.0 + lin) / 2 ** k
    if check:
        from . import oracle

        brute, _ = oracle.brute_multiregister_moments(registers.irreps, b, M)
        if abs(mean - brute) > TOL:
            raise VerificationError(
                f"spectral mean {mean!r} != brute mean {brute!r}"
            )
    return float(mean)


def multiregister_variance_bound(registers: RegisterTuple, b: np.ndarray,
                                 M: ConjugacyClass, check: bool = True) -> float:
    """4^-k sum over nonempty I1, I2 of E^{I1,I2}; an upper bound on the
    variance of the measured mass (the subtracted square is nonnegative)."""
    return interference_moments(registers, b, M, check=check).variance_bound


# ---------------------------------------------------------------------------
# Second-moment inequalities

def claim_projector_average(rep: MatrixRep, b: np.ndarray,
                            tol: float = TOL) -> tuple[float, float]:
    """lhs: exact average over ALL g of |<b, g b>|^2.  rhs: the isotypic
    second-moment sum, sum over sigma of ||J_sigma b||^4 / d_sigma.  Returns
    (lhs, rhs) and raises VerificationError if lhs > rhs + tol."""
    group = rep.group
    per = np.einsum("i,gij,j->g", b.conj(), rep.stack, b)
    lhs = float(np.mean(np.abs(per) ** 2))
    buckets = _bucket_by_class(group, per)
    masses = _masses_from_buckets(group, buckets, EPS)
    rhs = float(sum(
        masses[label_str(lab)] ** 2 / label_dim(lab) for lab in irrep_labels(group)
    ))
    if lhs > rhs + tol:
        raise VerificationError(f"average {lhs!r} exceeds isotypic sum {rhs!r}")
    return lhs, rhs


def projector_sum_bound(registers: RegisterTuple, sigma, b: np.ndarray,
                        tol: float = TOL) -> tuple[float, float]:
    """lhs: sum over ALL subset pairs (I1, I2) of ||J_sigma (b (x) conj(b))||^2
    on the doubled space.  rhs: 2^k d_sigma^2 times the sum over ALL subsets I
    of sum over tau of ||J_tau^I b||^2 / d_tau.  Returns (lhs, rhs); raises
    VerificationError if the inequality fails beyond tol.
    """
    sigma_label = sigma.label if isinstance(sigma, Irrep) else sigma
    key = label_str(sigma_label)
    d_sigma = label_dim(sigma_label)
    group = registers.group
    k = registers.k
    all_subs = subsets(k)
    lhs = 0.0
    for s1 in all_subs:
        for s2 in all_subs:
            lhs += doubled_isotypic_masses(registers, s1, s2, b)[key]
    inner = 0.0
    for s in all_subs:
        masses = isotypic_masses(registers, s, b)
        inner += sum(
            masses[label_str(tau)] / label_dim(tau) for tau in irrep_labels(group)
        )
    rhs = 2 ** k * d_sigma ** 2 * inner
    if lhs > rhs + tol:
        raise VerificationError(
            f"doubled projector sum {lhs!r} exceeds bound {rhs!r} "
            f"for sigma = {key}"
        )
    return float(lhs), float(rhs)


def expected_isotypic_dimension(sigma, subset, k: int, group: FiniteGroup,
                                cap: int = 100_000) -> Fraction:
    """Expected rank fraction of J_sigma^I under k-fold Plancherel sampling:
    sum over label tuples of P(tuple) * mult(sigma) * d_sigma / d_tuple.

    Exact arithmetic throughout; the result must equal d_sigma^2 / |G| for
    every nonempty I, and a mismatch raises RepresentationDefectError.
    """
    sub = tuple(sorted(set(subset)))
    if not sub:
        raise ValueError("subset must be nonempty")
    if any(i < 0 or i >= k for i in sub):
        raise ValueError(f"subset {sub} out of range for k = {k}")
    sigma_label = sigma.label if isinstance(sigma, Irrep) else sigma
    d_sigma = label_dim(sigma_label)
    labels = irrep_labels(group)
    if len(labels) ** k > cap:
        raise CapExceededError(f"{len(labels)}^{k} label tuples exceed cap {cap}")
    table = character_table(group)
    classes = group.conjugacy_classes()
    sizes = [c.size for c in classes]
    chi_sigma = table[sigma_label]
    total = Fraction(0)
    for tup in itertools.product(labels, repeat=k):
        dims = [label_dim(l) for l in tup]
        d_tuple = prod(dims)
        outside = prod(dims[i] for i in range(k) if i not in sub)
        inner = 0
        for ci in range(len(classes)):
            chi = outside
            for i in sub:
                chi *= table[tup[i]][ci]
            inner += sizes[ci] * chi * chi_sigma[ci]
        mult = Fraction(inner, group.order)
        if mult.denominator != 1 or mult < 0:
            raise NonCharacterError(
                f"multiplicity {mult} of {label_str(sigma_label)} is not a "
                "nonnegative integer"
            )
        weight = Fraction(prod(d * d for d in dims), group.order ** k)
        total += weight * mult * Fraction(d_sigma, d_tuple)
    expected = Fraction(d_sigma * d_sigma, group.order)
    if total != expected:
        raise RepresentationDefectError(
            f"expected isotypic dimension {total} != {expected} "
            f"for sigma = {label_str(sigma_label)}, I = {sub}, k = {k}"
        )
    return total
