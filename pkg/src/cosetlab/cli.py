"""Command-line interface.

Four commands: `irreps` prints representation inventories with exact
integrity checks, `sample` emits measurement distributions, `verify` runs
formula-vs-oracle comparisons, and `bounds` produces the bound-chain
report.

Exit codes: 0 every check passed; 1 a verification or bound check failed;
2 usage error (bad flags, unsupported group, malformed element); 3
precondition or resource error (zero-rank strong measurement, tensor caps,
a bound that is undefined for the requested parameters).

Identical (command line, seed) pairs produce byte-identical output for any
--threads value; randomness comes only from the documented counter-based
generator.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import prod

import numpy as np

from . import bounds as bounds_mod
from .errors import (
    BoundUndefinedError,
    CapExceededError,
    CosetLabError,
    GroupMismatchError,
    OutcomeMismatchError,
    UnsupportedGroupError,
    ZeroRankError,
)
from .groups import (
    FiniteGroup,
    SymmetricGroup,
    WreathGroup,
    cached_group,
    involution_class,
    parse_cycles,
    parse_permutation,
    parse_wreath_element,
)
from .irreps import (
    MatrixRep,
    character_table,
    group_irreps,
    irrep_labels,
    label_dim,
    label_str,
    parse_label,
    wreath_character,
)
from .oracle import (
    brute_doubled_overlap,
    brute_induced_rep,
    brute_multiregister_moments,
    brute_subset_overlap,
    equality_result,
    exact_result,
    inequality_result,
    rebuilt_matrix,
)
from .rng import CounterRng
from .report import csv_text, emit, json_text
from .sampling import (
    DEFAULT_TENSOR_CAP,
    HiddenSubgroup,
    MeasurementBasis,
    RegisterTuple,
    claim_projector_average,
    doubled_expectation,
    expected_isotypic_dimension,
    interference_moments,
    multiregister_dist,
    projector_sum_bound,
    strong_dist,
    subset_expectation,
    subsets,
    weak_dist,
    weak_dist_tuples,
    weak_rank,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

TUPLE_REPORT_CAP = 10_000


# ---------------------------------------------------------------------------
# shared plumbing

def _add_output_flags(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def _add_cache_flags(p):
    p.add_argument("--cache-dir", default=None,
                   help="irrep matrix cache directory (default: COSETLAB_CACHE_DIR)")
    p.add_argument("--no-cache", action="store_true",
                   help="ignore both --cache-dir and the environment")


def _cache_dir(args):
    # empty string defeats the environment fallback
    return "" if args.no_cache else args.cache_dir


def _group(spec: str) -> FiniteGroup:
    return cached_group(spec)


def _involution(group: FiniteGroup):
    """The distinguished involution class: block-swap elements for wreath
    groups, the transposition class for symmetric groups."""
    if isinstance(group, WreathGroup):
        return involution_class(group)
    for cls in group.conjugacy_classes():
        if cls.representative.order() == 2:
            return cls
    raise UnsupportedGroupError(f"{group.spec} has no involutions")


def _parse_member(group: FiniteGroup, text: str):
    if isinstance(group, SymmetricGroup):
        if text.strip().startswith("["):
            return parse_permutation(text)
        return parse_cycles(text, group.n)
    return parse_wreath_element(text)


def _resolve_hidden(group: FiniteGroup, args) -> HiddenSubgroup:
    chosen = [args.trivial, args.m is not None, args.m_index is not None]
    if sum(chosen) > 1:
        raise UsageError("choose at most one of --trivial, --m, --m-index")
    if args.trivial:
        return HiddenSubgroup(group)
    if args.m is not None:
        return HiddenSubgroup(group, _parse_member(group, args.m))
    M = _involution(group)
    index = args.m_index if args.m_index is not None else 0
    if not 0 <= index < M.size:
        raise UsageError(f"--m-index out of range, class has {M.size} members")
    return HiddenSubgroup(group, M.members[index])


class UsageError(Exception):
    pass


def _basis_for(args, dim: int, *stream) -> MeasurementBasis:
    if args.basis == "standard":
        return MeasurementBasis.standard(dim)
    return MeasurementBasis.haar(dim, CounterRng(args.seed, "cli", *stream))


def _dist_json(dist) -> dict:
    return dist.to_json_dict()


def _dist_csv_rows(dist) -> list[dict]:
    rows = []
    exact = dist.exact_values() if dist.exact else None
    floats = dist.values()
    for i, lab in enumerate(dist.labels):
        row = {"outcome": lab, "probability": float(floats[i])}
        if exact is not None:
            row["exact"] = str(exact[i])
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# irreps

def cmd_irreps(args) -> int:
    group = _group(args.group)
    labels = irrep_labels(group)
    table = character_table(group)
    classes = group.conjugacy_classes()
    sum_sq = sum(label_dim(l) ** 2 for l in labels)
    order = group.order
    ortho_ok = True
    for a in labels:
        for b in labels:
            inner = sum(
                cls.size * table[a][i] * table[b][i] for i, cls in enumerate(classes)
            )
            if inner != (order if a == b else 0):
                ortho_ok = False
    checks = {"sum_dim_sq": sum_sq == order, "orthogonality": ortho_ok}
    payload = {
        "command": "irreps",
        "group": group.spec,
        "order": order,
        "classes": [
            {"representative": str(c.representative), "size": c.size}
            for c in classes
        ],
        "irreps": [
            {
                "label": label_str(l),
                "dim": label_dim(l),
                "plancherel": {
                    "exact": str(Fraction(label_dim(l) ** 2, order)),
                    "value": label_dim(l) ** 2 / order,
                },
                "characters": list(table[l]),
            }
            for l in labels
        ],
        "checks": checks,
        "all_pass": all(checks.values()),
    }
    if args.format == "csv":
        rows = []
        for l in labels:
            row = {"label": label_str(l), "dim": label_dim(l),
                   "plancherel": label_dim(l) ** 2 / order}
            for i, c in enumerate(classes):
                row[f"chi@{c.representative}"] = table[l][i]
            rows.append(row)
        emit(csv_text(rows), args.out)
    else:
        emit(json_text(payload), args.out)
    return EXIT_OK if payload["all_pass"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# sample

def cmd_sample(args) -> int:
    group = _group(args.group)
    hidden = _resolve_hidden(group, args)
    if args.weak and args.strong:
        raise UsageError("--weak and --strong are mutually exclusive")
    if args.weak:
        dist = (weak_dist(group, hidden) if args.k == 1
                else weak_dist_tuples(group, hidden, args.k))
        payload = _dist_json(dist)
    elif args.strong:
        if args.label is None:
            raise UsageError("--strong needs --label")
        target = parse_label(args.label)
        rep = next(
            (r for r in group_irreps(group, _cache_dir(args)) if r.label == target),
            None,
        )
        if rep is None:
            raise UsageError(f"{args.label} is not an irrep of {group.spec}")
        basis = _basis_for(args, rep.dim, "strong", label_str(target))
        dist = strong_dist(rep, hidden, basis)
        payload = _dist_json(dist)
    else:
        payload = _tuple_report(group, hidden, args)
        dist = None
    if args.format == "csv":
        rows = _dist_csv_rows(dist) if dist is not None else payload["csv_rows"]
        payload.pop("csv_rows", None)
        emit(csv_text(rows), args.out)
    else:
        payload.pop("csv_rows", None)
        emit(json_text(payload), args.out)
    return EXIT_OK


def _tuple_report(group: FiniteGroup, hidden: HiddenSubgroup, args) -> dict:
    """All label k-tuples with exact weak probabilities, plus the conditional
    multiregister distribution for each tuple in the chosen basis."""
    k = args.k
    labels = irrep_labels(group)
    if len(labels) ** k > TUPLE_REPORT_CAP:
        raise CapExceededError(
            f"{len(labels)}^{k} tuples exceed the report cap {TUPLE_REPORT_CAP}"
        )
    weak = weak_dist(group, hidden)
    weak_exact = dict(zip(weak.labels, weak.exact_values()))
    reps = {r.label: r for r in group_irreps(group, _cache_dir(args))}
    import itertools as it

    entries = []
    csv_rows = []
    total = Fraction(0)
    for idx, tup in enumerate(it.product(labels, repeat=k)):
        names = [label_str(l) for l in tup]
        prob = prod((weak_exact[n] for n in names), start=Fraction(1))
        total += prob
        dims = [label_dim(l) for l in tup]
        D = prod(dims)
        conditional = None
        zero_rank = False
        if D <= args.tensor_cap:
            try:
                regs = RegisterTuple(
                    tuple(reps[l] for l in tup), tensor_cap=args.tensor_cap
                )
                basis = _basis_for(args, D, "tuple", idx)
                conditional = [
                    float(v) for v in multiregister_dist(regs, hidden, basis).values()
                ]
            except ZeroRankError:
                zero_rank = True
        entries.append({
            "labels": names,
            "weak": {"exact": str(prob), "value": float(prob)},
            "zero_rank": zero_rank,
            "conditional": conditional,
        })
        csv_rows.append({
            "labels": ";".join(names),
            "weak_exact": str(prob),
            "weak": float(prob),
            "zero_rank": zero_rank,
            "conditional_sum": "" if conditional is None else sum(conditional),
        })
    return {
        "command": "sample",
        "mode": "tuple",
        "group": group.spec,
        "subgroup": hidden.descriptor(),
        "k": k,
        "basis": args.basis,
        "seed": args.seed,
        "outcome_sets": len(entries),
        "weak_total": str(total),
        "entries": entries,
        "csv_rows": csv_rows,
    }


# ---------------------------------------------------------------------------
# verify

def _default_groups(args, fallback):
    if args.group:
        return [_group(args.group)]
    return [_group(s) for s in fallback]


def _random_registers(group, reps_by_label, rng, k, tensor_cap):
    labels = irrep_labels(group)
    tup = tuple(labels[rng.index(i, len(labels))] for i in range(k))
    if prod(label_dim(l) for l in tup) > tensor_cap:
        tup = tuple(labels[0] for _ in range(k))
    return RegisterTuple(tuple(reps_by_label[l] for l in tup), tensor_cap=tensor_cap)


def _lemma_rank(args) -> list:
    results = []
    for group in _default_groups(args, ("wreath:2", "wreath:3")):
        M = _involution(group)
        hidden = HiddenSubgroup(group, M.representative)
        for rep in group_irreps(group, _cache_dir(args)):
            proj = 0.5 * (np.eye(rep.dim) + rebuilt_matrix(rep, M.representative))
            trace = np.trace(proj).real
            oracle_rank = int(round(trace))
            assert abs(trace - oracle_rank) < 1e-6
            results.append(exact_result(
                f"rank {group.spec} {label_str(rep.label)}",
                weak_rank(group, rep.label, hidden),
                oracle_rank,
            ))
    return results


def _lemma_expectation(args) -> list:
    results = []
    for group in _default_groups(args, ("wreath:2",)):
        M = _involution(group)
        reps_by_label = {r.label: r for r in group_irreps(group, _cache_dir(args))}
        for t in range(args.trials):
            rng = CounterRng(args.seed, "verify", "expectation", group.spec, t)
            regs = _random_registers(group, reps_by_label, rng, args.k, args.tensor_cap)
            b = rng.sub("vec").unit_vector(regs.total_dim)
            full = tuple(range(args.k))
            formula = subset_expectation(regs, b, full, M)
            oracle_v = brute_subset_overlap(regs.irreps, b, full, M)
            results.append(equality_result(
                f"expectation {group.spec} k={args.k} trial={t}", formula, oracle_v
            ))
            if args.k > 1:
                mask = rng.index(100, 2 ** args.k)
                sub = tuple(i for i in range(args.k) if mask >> i & 1)
                formula = subset_expectation(regs, b, sub, M)
                oracle_v = brute_subset_overlap(regs.irreps, b, sub, M)
                results.append(equality_result(
                    f"expectation {group.spec} subset={sub} trial={t}",
                    formula, oracle_v,
                ))
    return results


def _lemma_second_moment(args) -> list:
    results = []
    for group in _default_groups(args, ("wreath:2",)):
        M = _involution(group)
        reps_by_label = {r.label: r for r in group_irreps(group, _cache_dir(args))}
        for t in range(args.trials):
            rng = CounterRng(args.seed, "verify", "second-moment", group.spec, t)
            regs = _random_registers(group, reps_by_label, rng, args.k, args.tensor_cap)
            if regs.total_dim ** 2 > args.tensor_cap:
                continue
            b = rng.sub("vec").unit_vector(regs.total_dim)
            full = tuple(range(args.k))
            pairs = [(full, full)]
            m1 = rng.index(200, 2 ** args.k)
            m2 = rng.index(201, 2 ** args.k)
            pairs.append((
                tuple(i for i in range(args.k) if m1 >> i & 1),
                tuple(i for i in range(args.k) if m2 >> i & 1),
            ))
            for first, second in pairs:
                formula = doubled_expectation(regs, b, first, second, M)
                oracle_v = brute_doubled_overlap(regs.irreps, b, first, second, M)
                results.append(equality_result(
                    f"second-moment {group.spec} I1={first} I2={second} trial={t}",
                    formula, oracle_v,
                ))
    return results


def _lemma_multiregister(args) -> list:
    results = []
    for group in _default_groups(args, ("wreath:2",)):
        M = _involution(group)
        reps_by_label = {r.label: r for r in group_irreps(group, _cache_dir(args))}
        for t in range(args.trials):
            rng = CounterRng(args.seed, "verify", "multiregister", group.spec, t)
            regs = _random_registers(group, reps_by_label, rng, args.k, args.tensor_cap)
            if regs.total_dim ** 2 > args.tensor_cap:
                continue
            b = rng.sub("vec").unit_vector(regs.total_dim)
            moments = interference_moments(regs, b, M, check=False)
            mean_o, var_o = brute_multiregister_moments(regs.irreps, b, M)
            tag = f"{group.spec} k={args.k} trial={t}"
            results.append(equality_result(
                f"multiregister mean {tag}", moments.expectation, mean_o))
            results.append(equality_result(
                f"multiregister variance {tag}", moments.variance, var_o))
            results.append(inequality_result(
                f"multiregister variance bound {tag}",
                moments.variance_bound, var_o))
    return results


def _lemma_claim_average(args) -> list:
    results = []
    for group in _default_groups(args, ("sym:3", "wreath:2")):
        reps = group_irreps(group, _cache_dir(args))
        for rep in reps:
            for t in range(min(args.trials, 5)):
                rng = CounterRng(args.seed, "verify", "claim", group.spec,
                                 label_str(rep.label), t)
                b = rng.unit_vector(rep.dim)
                lhs, rhs = claim_projector_average(rep, b)
                tag = f"{group.spec} {label_str(rep.label)} trial={t}"
                results.append(equality_result(
                    f"claim lhs=1/d {tag}", lhs, 1.0 / rep.dim))
                results.append(equality_result(
                    f"claim rhs=1/d {tag}", rhs, 1.0 / rep.dim))
        # a genuinely reducible instance: the tensor square of the last irrep
        rep = reps[-1]
        stack = np.einsum("gij,gkl->gikjl", rep.stack, rep.stack)
        stack = stack.reshape(group.order, rep.dim ** 2, rep.dim ** 2)
        square = MatrixRep(group, stack, f"{label_str(rep.label)}^2")
        rng = CounterRng(args.seed, "verify", "claim", group.spec, "square")
        b = rng.unit_vector(square.dim)
        lhs, rhs = claim_projector_average(square, b)
        results.append(inequality_result(
            f"claim reducible {group.spec} {square.name}", rhs, lhs))
    return results


def _lemma_projector_sum(args) -> list:
    results = []
    for group in _default_groups(args, ("wreath:2",)):
        labels = irrep_labels(group)
        reps_by_label = {r.label: r for r in group_irreps(group, _cache_dir(args))}
        for t in range(args.trials):
            rng = CounterRng(args.seed, "verify", "projector-sum", group.spec, t)
            regs = _random_registers(group, reps_by_label, rng, args.k, args.tensor_cap)
            if regs.total_dim ** 2 > args.tensor_cap:
                continue
            b = rng.sub("vec").unit_vector(regs.total_dim)
            sigma = labels[rng.index(300, len(labels))]
            lhs, rhs = projector_sum_bound(regs, sigma, b)
            results.append(inequality_result(
                f"projector-sum {group.spec} sigma={label_str(sigma)} trial={t}",
                rhs, lhs,
            ))
    return results


def _lemma_induced(args) -> list:
    from .irreps import DiagonalLabel, PairLabel
    from .tableaux import partitions

    results = []
    if args.group:
        group = _group(args.group)
        if not isinstance(group, WreathGroup) or group.n > 3:
            raise UsageError("--lemma induced needs a wreath group with n <= 3")
        ns = [group.n]
    else:
        ns = [2, 3]
    for n in ns:
        group = _group(f"wreath:{n}")
        classes = group.conjugacy_classes()
        parts = list(partitions(n))
        for i, rho in enumerate(parts):
            for sigma in parts[i:]:
                induced = brute_induced_rep(n, rho, sigma)
                for cls in classes:
                    g = cls.representative
                    trace = complex(induced.traces()[group.index(g)])
                    assert abs(trace.imag) < 1e-6
                    got = int(round(trace.real))
                    assert abs(trace.real - got) < 1e-6
                    if rho == sigma:
                        want = (wreath_character(DiagonalLabel(rho, 1), g)
                                + wreath_character(DiagonalLabel(rho, -1), g))
                    else:
                        want = wreath_character(PairLabel(rho, sigma), g)
                    results.append(exact_result(
                        f"induced wreath:{n} {rho}x{sigma} at {g}", want, got))
        # normalized characters at the swap class, and the matrix truth of
        # the diagonal labels on flip elements
        M = involution_class(group)
        table = character_table(group)
        pos = [i for i, c in enumerate(classes)
               if c.representative == M.representative][0]
        for rep in group_irreps(group, _cache_dir(args)):
            lab = rep.label
            chi = Fraction(table[lab][pos], label_dim(lab))
            if isinstance(lab, PairLabel):
                want = Fraction(0)
            else:
                from .tableaux import dimension

                want = Fraction(lab.sign, dimension(lab.rho))
            results.append(exact_result(
                f"normalized char at M wreath:{n} {label_str(lab)}", want, chi))
            if isinstance(lab, DiagonalLabel):
                for cls in classes:
                    if not cls.representative.flip:
                        continue
                    g = cls.representative
                    mat_trace = complex(rep.traces()[group.index(g)])
                    results.append(equality_result(
                        f"diagonal flip trace wreath:{n} {label_str(lab)} at {g}",
                        wreath_character(lab, g), mat_trace,
                    ))
    return results


def _lemma_expected_decomp(args) -> list:
    results = []
    if args.group:
        configs = [(_group(args.group), args.k)]
    else:
        configs = [(_group("sym:3"), min(args.k, 3)), (_group("wreath:2"), min(args.k, 2))]
    for group, k in configs:
        for sigma in irrep_labels(group):
            want = Fraction(label_dim(sigma) ** 2, group.order)
            for subset in subsets(k, nonempty=True):
                got = expected_isotypic_dimension(sigma, subset, k, group)
                results.append(exact_result(
                    f"expected-decomp {group.spec} k={k} sigma={label_str(sigma)} I={subset}",
                    want, got,
                ))
    return results


_LEMMAS = {
    "rank": _lemma_rank,
    "expectation": _lemma_expectation,
    "second-moment": _lemma_second_moment,
    "multiregister": _lemma_multiregister,
    "claim-average": _lemma_claim_average,
    "projector-sum": _lemma_projector_sum,
    "induced": _lemma_induced,
    "expected-decomp": _lemma_expected_decomp,
}


def cmd_verify(args) -> int:
    if args.lemma == "all":
        names = list(_LEMMAS)
        args.trials = min(args.trials, 10)
    else:
        names = [args.lemma]
    results = []
    for name in names:
        results.extend(_LEMMAS[name](args))
    failed = [r for r in results if not r.passed]
    payload = {
        "command": "verify",
        "lemma": args.lemma,
        "group": args.group,
        "k": args.k,
        "trials": args.trials,
        "seed": args.seed,
        "results": [r.to_json_dict() for r in results],
        "pass_count": len(results) - len(failed),
        "fail_count": len(failed),
        "all_pass": not failed,
    }
    if args.format == "csv":
        emit(csv_text([r.to_json_dict() for r in results]), args.out)
    else:
        emit(json_text(payload), args.out)
    for r in failed:
        print(f"FAIL {r.name}: formula={r.formula_value} oracle={r.oracle_value}",
              file=sys.stderr)
    return EXIT_OK if not failed else EXIT_FAIL


# ---------------------------------------------------------------------------
# bounds

def cmd_bounds(args) -> int:
    if args.lambda_all and args.labels:
        raise UsageError("--lambda-all and --labels are mutually exclusive")
    if args.lambda_all:
        rule = "empty"
    elif args.labels:
        rule = [s.strip() for s in args.labels.split(";")]
    else:
        rule = args.cutoff
    report = bounds_mod.theorem_pipeline(
        args.n, args.k, seed=args.seed, trials=args.trials, rule=rule,
        tensor_cap=args.tensor_cap, threads=args.threads,
        cache_dir=_cache_dir(args),
    )
    if args.full_tvd and report.full_bound_undefined:
        print("full bound undefined: the largest normalized character outside "
              "the bad set is >= 1", file=sys.stderr)
        return EXIT_RESOURCE
    if args.format == "csv":
        emit(csv_text(report.csv_rows()), args.out)
    else:
        emit(json_text(report.to_json_dict()), args.out)
    return EXIT_OK if report.all_pass else EXIT_FAIL


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosetlab",
        description="Exact Fourier-sampling laboratory for symmetric and "
                    "wreath product groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("irreps", help="list irreps with exact integrity checks")
    p.add_argument("--group", required=True, help="sym:n or wreath:n")
    _add_output_flags(p)
    _add_cache_flags(p)
    p.set_defaults(func=cmd_irreps)

    p = sub.add_parser("sample", help="emit measurement distributions")
    p.add_argument("--group", required=True)
    p.add_argument("--m", default=None,
                   help='hidden involution: cycles "(01)" or image list for '
                        'sym:n, "([..],[..],t)" for wreath:n')
    p.add_argument("--m-index", type=int, default=None,
                   help="index into the distinguished involution class")
    p.add_argument("--trivial", action="store_true",
                   help="trivial hidden subgroup (control)")
    p.add_argument("--weak", action="store_true",
                   help="representation-name distribution only")
    p.add_argument("--strong", action="store_true",
                   help="within-representation distribution; needs --label")
    p.add_argument("--label", default=None, help="irrep label for --strong")
    p.add_argument("--k", type=int, default=1, help="number of registers")
    p.add_argument("--basis", choices=("standard", "haar"), default="standard")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tensor-cap", type=int, default=DEFAULT_TENSOR_CAP)
    _add_output_flags(p)
    _add_cache_flags(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="formula-vs-oracle comparisons")
    p.add_argument("--lemma", required=True, choices=sorted(_LEMMAS) + ["all"])
    p.add_argument("--group", default=None,
                   help="override the lemma's default group matrix")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--tensor-cap", type=int, default=DEFAULT_TENSOR_CAP)
    _add_output_flags(p)
    _add_cache_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="bound-chain report for wreath:n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--cutoff", default="paper", choices=("paper",),
                   help="named bad-set rule: keep diagonal labels whose base "
                        "dimension d satisfies d^5 < n^n")
    p.add_argument("--labels", default=None,
                   help='explicit bad-set labels, ";"-separated')
    p.add_argument("--lambda-all", action="store_true",
                   help="empty bad set, so lambda ranges over every irrep")
    p.add_argument("--full-tvd", action="store_true",
                   help="fail with exit 3 if the full bound is undefined")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--tensor-cap", type=int, default=DEFAULT_TENSOR_CAP)
    _add_output_flags(p)
    _add_cache_flags(p)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedGroupError, GroupMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ZeroRankError, CapExceededError, BoundUndefinedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OutcomeMismatchError, CosetLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
