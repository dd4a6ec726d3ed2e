"""Bad sets and the total-variation bound chain, exact at desk scale.

Given a conjugacy class M of involutions and a set Lambda of irrep labels
(the "bad" ones), the key scalars are exact rationals:

  lambda    = max over sigma outside Lambda of |chi_sigma(M)| / d_sigma
  P(Lambda) = Plancherel mass of Lambda
  Delta     = lambda + P(Lambda) * (sum of ALL irrep dimensions)

and the bound chain, in the L1 distance convention:

  weak:        ||H^(x)k - P^(x)k||_1          <= 2 k (lambda + P(Lambda))
  expectation: Exp_rho ||U - A(rho,.)||_1     <= 2 * 2^k (lambda + P(Lambda))
  full:        Exp_rho Exp_m ||H_m - U||_1    <= 2^k [ (1-lambda)^-k sqrt(Delta)
                                                       + 3 (lambda + P(Lambda)) ]

where H is the weak distribution for the subgroup {e, m}, P the Plancherel
distribution, H_m(rho,.) the multiregister strong distribution, A its
average over m in M, and U uniform.  Expectations over the label tuple rho
use the Plancherel product measure; the report also recomputes the full
distance under the H product weights to show the gap between the two.

Every bound is compared against an exactly enumerated counterpart whenever
the tuple space is small enough.  A tuple containing a register of rank
zero has no conditional strong distribution; such tuples are scored with
the pessimal L1 distance 2 under Plancherel weighting (their weight under H
is exactly zero) and their total mass is reported separately.

An auxiliary variant of Delta with the second term divided by |G| is
computed and reported alongside; all inequality checks use the primary
definition above.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod, sqrt

import numpy as np

from .errors import BoundUndefinedError, CapExceededError, GroupMismatchError
from .groups import ConjugacyClass, FiniteGroup, cached_group, involution_class
from .irreps import character_table, group_irreps, irrep_labels, label_dim, label_str
from .oracle import exact_tv
from .parallel import kahan_sum, ordered_map
from .rng import CounterRng
from .sampling import (
    DEFAULT_TENSOR_CAP,
    HiddenSubgroup,
    MeasurementBasis,
    RegisterTuple,
    _apply_per_register,
    multiregister_dist,
    weak_dist,
    weak_dist_tuples,
    weak_rank,
)

TOL = 1e-9
PESSIMAL_TV = 2.0
EXACT_TUPLE_CAP = 10_000
CUTOFF_RULE = "paper"


# ---------------------------------------------------------------------------
# Bad sets and the scalar bound inputs

@dataclass(frozen=True)
class BadSet:
    """A set Lambda of irrep labels with its exact lambda and mass."""

    group: FiniteGroup
    M: ConjugacyClass
    labels: frozenset
    lambda_value: Fraction
    plancherel_mass: Fraction
    complement_empty: bool

    def __post_init__(self):
        assert 0 <= self.lambda_value <= 1
        assert 0 <= self.plancherel_mass <= 1

    def label_strings(self) -> tuple[str, ...]:
        ordered = [l for l in irrep_labels(self.group) if l in self.labels]
        return tuple(label_str(l) for l in ordered)


def _normalized_characters(group: FiniteGroup, M: ConjugacyClass) -> dict:
    """label -> |chi(M)| / d as an exact Fraction."""
    classes = group.conjugacy_classes()
    pos = None
    for i, c in enumerate(classes):
        if c is M or c.representative == M.representative:
            pos = i
            break
    if pos is None:
        raise GroupMismatchError("class does not belong to the group")
    table = character_table(group)
    return {
        lab: Fraction(abs(table[lab][pos]), label_dim(lab))
        for lab in irrep_labels(group)
    }


def cutoff_labels(group: FiniteGroup, n: int) -> frozenset:
    """Diagonal labels whose base partition dimension d satisfies d^5 < n^n,
    checked in exact integer arithmetic."""
    from .irreps import DiagonalLabel
    from .tableaux import dimension

    picked = set()
    for lab in irrep_labels(group):
        if isinstance(lab, DiagonalLabel) and dimension(lab.rho) ** 5 < n ** n:
            picked.add(lab)
    return frozenset(picked)


def build_bad_set(group: FiniteGroup, M: ConjugacyClass, rule) -> BadSet:
    """rule: the string "paper" (dimension-cutoff set over a wreath group),
    "empty", or an explicit iterable of labels / label strings."""
    from .groups import WreathGroup
    from .irreps import parse_label

    if rule == CUTOFF_RULE:
        if not isinstance(group, WreathGroup):
            raise GroupMismatchError("the dimension cutoff rule needs a wreath group")
        labels = cutoff_labels(group, group.n)
    elif rule == "empty" or rule is None:
        labels = frozenset()
    else:
        known = set(irrep_labels(group))
        picked = set()
        for item in rule:
            lab = parse_label(item) if isinstance(item, str) else item
            if lab not in known:
                raise ValueError(f"label {label_str(lab)} is not an irrep of {group.spec}")
            picked.add(lab)
        labels = frozenset(picked)
    normalized = _normalized_characters(group, M)
    outside = [normalized[l] for l in irrep_labels(group) if l not in labels]
    lam = max(outside) if outside else Fraction(0)
    mass = sum(
        (Fraction(label_dim(l) ** 2, group.order) for l in labels), Fraction(0)
    )
    return BadSet(group, M, labels, lam, mass, complement_empty=not outside)


def lambda_cutoff_holds(badset: BadSet, n: int) -> bool:
    """lambda <= n^(-n/5), checked exactly: lambda^5 * n^n <= 1."""
    lam = badset.lambda_value
    return lam.numerator ** 5 * n ** n <= lam.denominator ** 5


def sum_of_dimensions(group: FiniteGroup) -> int:
    return sum(label_dim(l) for l in irrep_labels(group))


def delta(badset: BadSet) -> Fraction:
    """lambda + P(Lambda) * (sum over ALL irreps of d), exact."""
    return badset.lambda_value + badset.plancherel_mass * sum_of_dimensions(badset.group)


def delta_alt(badset: BadSet) -> Fraction:
    """Variant with the mass term divided by |G|, reported alongside delta."""
    group = badset.group
    return badset.lambda_value + Fraction(
        badset.plancherel_mass * sum_of_dimensions(group), group.order
    )


def weak_tv_bound(badset: BadSet, k: int) -> Fraction:
    return 2 * k * (badset.lambda_value + badset.plancherel_mass)


def expectation_tv_bound(badset: BadSet, k: int) -> Fraction:
    return 2 * 2 ** k * (badset.lambda_value + badset.plancherel_mass)


def full_tvd_bound(badset: BadSet, k: int) -> float:
    """2^k [ (1-lambda)^-k sqrt(Delta) + 3 (lambda + P(Lambda)) ]."""
    lam = badset.lambda_value
    if lam >= 1:
        raise BoundUndefinedError(
            f"lambda = {lam} >= 1: the (1-lambda)^-k factor is undefined"
        )
    head = float((1 - lam)) ** (-k) * sqrt(float(delta(badset)))
    return 2 ** k * (head + 3 * float(lam + badset.plancherel_mass))


def exact_weak_tv(group: FiniteGroup, M: ConjugacyClass, k: int) -> Fraction:
    """||H^(x)k - P^(x)k||_1 by full tuple enumeration, exact."""
    hidden = HiddenSubgroup(group, M.representative)
    trivial = HiddenSubgroup(group)
    return exact_tv(
        weak_dist_tuples(group, hidden, k), weak_dist_tuples(group, trivial, k)
    )


# ---------------------------------------------------------------------------
# Exact enumeration of the bound counterparts

@dataclass(frozen=True)
class EnumerationStats:
    """Per-trial exact expectations over the tuple space (one basis per
    trial), plus the weighted per-triple distances for quantiles."""

    trials: int
    zero_rank_mass: Fraction
    expectation_tv: tuple[float, ...]
    full_tv: tuple[float, ...]
    full_tv_weak_weighted: tuple[float, ...]
    expected_variance: tuple[float, ...]
    expectation_deviation: tuple[float, ...]
    triple_weights: tuple[float, ...]
    triple_values: tuple[float, ...]


def _tuple_masses(dims, projs, basis_mat: np.ndarray) -> np.ndarray:
    D = basis_mat.shape[0]
    block = basis_mat.reshape(dims + (D,))
    block = _apply_per_register(block, projs)
    return np.sum(np.abs(block.reshape(D, D)) ** 2, axis=0)


def _tuple_task(group, M, reps, ranks, trials, seed, tuple_idx, k):
    dims = tuple(r.dim for r in reps)
    D = prod(dims)
    rank_total = prod(ranks)
    projs_per_m = [
        {i: 0.5 * (np.eye(r.dim) + r.matrix(m)) for i, r in enumerate(reps)}
        for m in M.members
    ]
    n_m = len(projs_per_m)
    exp_tv = np.empty(trials)
    full_tv = np.empty(trials)
    var_ = np.empty(trials)
    dev = np.empty(trials)
    triples = []
    for t in range(trials):
        basis = CounterRng(seed, "bases", tuple_idx, t).haar_basis(D)
        raw = np.empty((n_m, D))
        for mi, projs in enumerate(projs_per_m):
            raw[mi] = _tuple_masses(dims, projs, basis)
        mean_raw = raw.mean(axis=0)
        var_[t] = np.mean(np.mean((raw - mean_raw) ** 2, axis=0))
        dev[t] = np.mean(np.abs(mean_raw - 0.5 ** k))
        if rank_total > 0:
            probs = raw / rank_total
            tvs = np.sum(np.abs(probs - 1.0 / D), axis=1)
            full_tv[t] = tvs.mean()
            exp_tv[t] = np.sum(np.abs(probs.mean(axis=0) - 1.0 / D))
            triples.extend(float(v) for v in tvs)
        else:
            full_tv[t] = PESSIMAL_TV
            exp_tv[t] = PESSIMAL_TV
            triples.extend([PESSIMAL_TV] * n_m)
    return exp_tv, full_tv, var_, dev, triples, rank_total


def exact_enumeration(group: FiniteGroup, M: ConjugacyClass, k: int,
                      seed: int, trials: int,
                      tensor_cap: int = DEFAULT_TENSOR_CAP,
                      threads: int = 1,
                      cache_dir: str | None = None) -> EnumerationStats:
    """Enumerate every label tuple with its exact Plancherel and H weights;
    average the per-basis distances with deterministic ordered reduction."""
    if trials < 1:
        raise ValueError("need at least one basis trial")
    labels = irrep_labels(group)
    if len(labels) ** k > EXACT_TUPLE_CAP:
        raise CapExceededError(
            f"{len(labels)}^{k} tuples exceed the exact-mode cap {EXACT_TUPLE_CAP}"
        )
    reps_by_label = {r.label: r for r in group_irreps(group, cache_dir)}
    hidden = HiddenSubgroup(group, M.representative)
    planch = {l: Fraction(label_dim(l) ** 2, group.order) for l in labels}
    hweight = {
        l: Fraction(label_dim(l) * 2 * weak_rank(group, l, hidden), group.order)
        for l in labels
    }
    tuples = list(itertools.product(labels, repeat=k))
    for tup in tuples:
        if prod(label_dim(l) for l in tup) > tensor_cap:
            raise CapExceededError(
                f"tuple {tuple(label_str(l) for l in tup)} exceeds tensor cap"
            )

    def run(args):
        idx, tup = args
        reps = tuple(reps_by_label[l] for l in tup)
        ranks = tuple(weak_rank(group, l, hidden) for l in tup)
        return _tuple_task(group, M, reps, ranks, trials, seed, idx, k)

    results = ordered_map(run, list(enumerate(tuples)), threads=threads)

    zero_rank_mass = Fraction(0)
    weights_p = []
    weights_h = []
    for tup, res in zip(tuples, results):
        wp = prod((planch[l] for l in tup), start=Fraction(1))
        wh = prod((hweight[l] for l in tup), start=Fraction(1))
        weights_p.append(float(wp))
        weights_h.append(float(wh))
        if res[5] == 0:
            zero_rank_mass += wp

    def combine(which, weights):
        return tuple(
            kahan_sum(w * res[which][t] for w, res in zip(weights, results))
            for t in range(trials)
        )

    exp_tv = combine(0, weights_p)
    full_tv = combine(1, weights_p)
    full_tv_h = combine(1, weights_h)
    var_ = combine(2, weights_p)
    dev = combine(3, weights_p)

    n_m = M.size
    triple_weights = []
    triple_values = []
    for w, res in zip(weights_p, results):
        per = w / (n_m * trials)
        for v in res[4]:
            triple_weights.append(per)
            triple_values.append(v)
    return EnumerationStats(
        trials, zero_rank_mass, exp_tv, full_tv, full_tv_h, var_, dev,
        tuple(triple_weights), tuple(triple_values),
    )


def weighted_quantile(values, weights, q: float) -> float:
    """Smallest value whose cumulative weight reaches q of the total."""
    order = np.argsort(np.asarray(values), kind="stable")
    vals = np.asarray(values)[order]
    wts = np.asarray(weights)[order]
    total = wts.sum()
    cum = np.cumsum(wts)
    idx = int(np.searchsorted(cum, q * total, side="left"))
    idx = min(idx, len(vals) - 1)
    return float(vals[idx])


# ---------------------------------------------------------------------------
# Sampled mode (tuple space too large to enumerate)

@dataclass(frozen=True)
class SampledStats:
    trials: int
    values: tuple[float, ...]
    zero_rank_hits: int


def sampled_enumeration(group: FiniteGroup, M: ConjugacyClass, k: int,
                        seed: int, trials: int,
                        tensor_cap: int = DEFAULT_TENSOR_CAP,
                        cache_dir: str | None = None) -> SampledStats:
    """Monte Carlo over (tuple, m, basis) triples: tuple per-register from
    the Plancherel measure, m uniform in M, basis Haar-seeded.  Returns the
    per-triple L1 distances to uniform (pessimal 2 on zero-rank tuples)."""
    labels = irrep_labels(group)
    reps_by_label = {r.label: r for r in group_irreps(group, cache_dir)}
    hidden = HiddenSubgroup(group, M.representative)
    weights = np.array(
        [float(Fraction(label_dim(l) ** 2, group.order)) for l in labels]
    )
    cum = np.cumsum(weights)
    values = []
    zero_hits = 0
    for t in range(trials):
        rng = CounterRng(seed, "sampled", t)
        picks = rng.floats01(0, k)
        tup = tuple(
            labels[min(int(np.searchsorted(cum, u, side="right")), len(labels) - 1)]
            for u in picks
        )
        D = prod(label_dim(l) for l in tup)
        if D > tensor_cap:
            raise CapExceededError("sampled tuple exceeds tensor cap")
        ranks = [weak_rank(group, l, hidden) for l in tup]
        m = M.members[rng.index(k, M.size)]
        if prod(ranks) == 0:
            values.append(PESSIMAL_TV)
            zero_hits += 1
            continue
        reps = tuple(reps_by_label[l] for l in tup)
        dims = tuple(r.dim for r in reps)
        basis = rng.sub("basis").haar_basis(D)
        projs = {i: 0.5 * (np.eye(r.dim) + r.matrix(m)) for i, r in enumerate(reps)}
        masses = _tuple_masses(dims, projs, basis)
        probs = masses / prod(ranks)
        values.append(float(np.sum(np.abs(probs - 1.0 / D))))
    return SampledStats(trials, tuple(values), zero_hits)


# ---------------------------------------------------------------------------
# The assembled pipeline

@dataclass(frozen=True)
class BoundReport:
    group_spec: str
    n: int
    k: int
    mode: str
    seed: int
    trials: int
    class_descriptor: str
    class_size: int
    rule: str
    bad_labels: tuple[str, ...]
    lambda_value: Fraction
    lambda_complement_empty: bool
    plancherel_mass: Fraction
    sum_dims: int
    delta_value: Fraction
    delta_alt_value: Fraction
    weak_bound: Fraction
    weak_exact: Fraction
    expectation_bound: Fraction
    full_bound: float | None
    full_bound_undefined: bool
    expectation_exact_max: float | None
    expectation_exact_mean: float | None
    full_exact_max: float | None
    full_exact_mean: float | None
    full_exact_weak_weighted_mean: float | None
    expected_variance_max: float | None
    expectation_deviation_max: float | None
    zero_rank_mass: Fraction | None
    quantiles: dict | None
    control_tv: float
    lambda_cutoff_ok: bool | None
    flags: dict

    @property
    def all_pass(self) -> bool:
        return all(self.flags.values())

    def to_json_dict(self) -> dict:
        def frac(x):
            return None if x is None else {"exact": str(x), "value": float(x)}

        return {
            "report": "bounds",
            "group": self.group_spec,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "involution_class": {
                "descriptor": self.class_descriptor,
                "size": self.class_size,
            },
            "bad_set": {
                "rule": self.rule,
                "labels": list(self.bad_labels),
                "lambda": frac(self.lambda_value),
                "lambda_complement_empty": self.lambda_complement_empty,
                "plancherel_mass": frac(self.plancherel_mass),
            },
            "sum_dims": self.sum_dims,
            "delta": frac(self.delta_value),
            "delta_alt": frac(self.delta_alt_value),
            "bounds": {
                "weak_tv": frac(self.weak_bound),
                "expectation_tv": frac(self.expectation_bound),
                "full_tvd": self.full_bound,
                "full_tvd_undefined": self.full_bound_undefined,
            },
            "exact": {
                "weak_tv": frac(self.weak_exact),
                "expectation_tv_max": self.expectation_exact_max,
                "expectation_tv_mean": self.expectation_exact_mean,
                "full_tv_max": self.full_exact_max,
                "full_tv_mean": self.full_exact_mean,
                "full_tv_weak_weighted_mean": self.full_exact_weak_weighted_mean,
                "expected_variance_max": self.expected_variance_max,
                "expectation_deviation_max": self.expectation_deviation_max,
                "zero_rank_mass": frac(self.zero_rank_mass),
            },
            "quantiles": self.quantiles,
            "control_trivial_tv": self.control_tv,
            "lambda_cutoff_ok": self.lambda_cutoff_ok,
            "flags": dict(self.flags),
            "all_pass": self.all_pass,
        }

    def csv_rows(self) -> list[dict]:
        row = {
            "group": self.group_spec,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "class": self.class_descriptor,
            "rule": self.rule,
            "lambda": float(self.lambda_value),
            "plancherel_mass": float(self.plancherel_mass),
            "delta": float(self.delta_value),
            "delta_alt": float(self.delta_alt_value),
            "weak_bound": float(self.weak_bound),
            "weak_exact": float(self.weak_exact),
            "expectation_bound": float(self.expectation_bound),
            "expectation_exact_max": _blank(self.expectation_exact_max),
            "full_bound": _blank(self.full_bound),
            "full_exact_max": _blank(self.full_exact_max),
            "expected_variance_max": _blank(self.expected_variance_max),
            "zero_rank_mass": _blank(
                None if self.zero_rank_mass is None else float(self.zero_rank_mass)
            ),
            "control_trivial_tv": self.control_tv,
            "all_pass": self.all_pass,
        }
        for name, ok in self.flags.items():
            row["flag_" + name] = ok
        return [row]


def _blank(x):
    return "" if x is None else x


def _control_tv(group, reps_by_label, labels, k, seed, tensor_cap) -> float:
    """Trivial-subgroup control: the multiregister distribution must be
    exactly uniform for any basis."""
    pick = labels[0]
    for l in labels:
        if label_dim(l) > 1 and label_dim(l) ** k <= tensor_cap:
            pick = l
            break
    reps = tuple(reps_by_label[pick] for _ in range(k))
    tup = RegisterTuple(reps, tensor_cap=tensor_cap)
    worst = Fraction(0)
    for t in range(2):
        basis = MeasurementBasis.haar(
            tup.total_dim, CounterRng(seed, "control", t)
        )
        dist = multiregister_dist(tup, HiddenSubgroup(group), basis)
        uniform = Fraction(1, tup.total_dim)
        tv = sum(abs(p - uniform) for p in dist.exact_values())
        worst = max(worst, tv)
    return float(worst)


def theorem_pipeline(n: int, k: int, seed: int = 0, trials: int = 20,
                     rule=CUTOFF_RULE, tensor_cap: int = DEFAULT_TENSOR_CAP,
                     threads: int = 1,
                     cache_dir: str | None = None) -> BoundReport:
    """End-to-end bound report over the wreath group on 2n points."""
    group = cached_group(f"wreath:{n}")
    M = involution_class(group)
    bad = build_bad_set(group, M, rule)
    labels = irrep_labels(group)
    reps_by_label = {r.label: r for r in group_irreps(group, cache_dir)}

    d_val = delta(bad)
    weak_b = weak_tv_bound(bad, k)
    exp_b = expectation_tv_bound(bad, k)
    full_undefined = False
    try:
        full_b = full_tvd_bound(bad, k)
    except BoundUndefinedError:
        full_b = None
        full_undefined = True

    weak_x = exact_weak_tv(group, M, k)
    rule_name = rule if isinstance(rule, str) else "explicit"

    exact_ok = (
        len(labels) ** k <= EXACT_TUPLE_CAP
        and max(label_dim(l) for l in labels) ** k <= tensor_cap
        and n <= 3
    )

    flags = {
        "weak_tv": weak_b >= weak_x,
    }
    quantiles = None
    control = _control_tv(group, reps_by_label, labels, k, seed, tensor_cap)
    flags["control_trivial"] = control == 0.0
    cutoff_ok = None
    if rule == CUTOFF_RULE:
        cutoff_ok = lambda_cutoff_holds(bad, n)
        flags["lambda_cutoff"] = cutoff_ok

    if exact_ok:
        stats = exact_enumeration(
            group, M, k, seed, trials, tensor_cap, threads, cache_dir
        )
        exp_max = max(stats.expectation_tv)
        exp_mean = kahan_sum(stats.expectation_tv) / trials
        full_max = max(stats.full_tv)
        full_mean = kahan_sum(stats.full_tv) / trials
        full_h_mean = kahan_sum(stats.full_tv_weak_weighted) / trials
        var_max = max(stats.expected_variance)
        dev_max = max(stats.expectation_deviation)
        quantiles = {
            "p50": weighted_quantile(stats.triple_values, stats.triple_weights, 0.5),
            "p90": weighted_quantile(stats.triple_values, stats.triple_weights, 0.9),
            "max": float(max(stats.triple_values)),
        }
        flags["expectation_tv"] = float(exp_b) >= exp_max - TOL
        if not full_undefined:
            flags["full_tvd"] = full_b >= full_max - TOL
        flags["expected_variance"] = float(d_val) >= var_max - TOL
        flags["expectation_deviation"] = (
            float(bad.lambda_value + bad.plancherel_mass) >= dev_max - TOL
        )
        zero_mass = stats.zero_rank_mass
        mode = "exact"
    else:
        sampled = sampled_enumeration(
            group, M, k, seed, trials, tensor_cap, cache_dir
        )
        vals = np.array(sampled.values)
        ones = np.ones_like(vals)
        quantiles = {
            "p50": weighted_quantile(vals, ones, 0.5),
            "p90": weighted_quantile(vals, ones, 0.9),
            "max": float(vals.max()),
        }
        exp_max = exp_mean = None
        full_max = None
        full_mean = float(vals.mean())
        full_h_mean = None
        var_max = dev_max = None
        zero_mass = None
        if not full_undefined:
            flags["full_tvd_sampled_mean"] = full_b >= full_mean - TOL
        mode = "sampled"

    return BoundReport(
        group_spec=group.spec, n=n, k=k, mode=mode, seed=seed, trials=trials,
        class_descriptor=str(M.representative), class_size=M.size,
        rule=rule_name, bad_labels=bad.label_strings(),
        lambda_value=bad.lambda_value,
        lambda_complement_empty=bad.complement_empty,
        plancherel_mass=bad.plancherel_mass,
        sum_dims=sum_of_dimensions(group),
        delta_value=d_val, delta_alt_value=delta_alt(bad),
        weak_bound=weak_b, weak_exact=weak_x,
        expectation_bound=exp_b,
        full_bound=full_b, full_bound_undefined=full_undefined,
        expectation_exact_max=exp_max, expectation_exact_mean=exp_mean,
        full_exact_max=full_max, full_exact_mean=full_mean,
        full_exact_weak_weighted_mean=full_h_mean,
        expected_variance_max=var_max, expectation_deviation_max=dev_max,
        zero_rank_mass=zero_mass, quantiles=quantiles,
        control_tv=control, lambda_cutoff_ok=cutoff_ok, flags=flags,
    )
