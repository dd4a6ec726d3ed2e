"""Irreducible representations and exact characters of S_n and W(n).

S_n irreps use Young's orthogonal form: the adjacent transposition (i,i+1)
acts on standard tableaux with diagonal entry 1/axial-distance and an
off-diagonal coupling to the letter-swapped tableau when that is standard.
General elements are filled in by a breadth-first walk over the Cayley graph
of adjacent transpositions, one matrix product per element.

W(n) irreps come in two families:

  * pair label {rho, sigma}, rho != sigma: induced from the flip-0 subgroup
    with coset representatives {identity, s}; dimension 2 d_rho d_sigma.
    Blocks, with m = d_rho d_sigma and KRS(a, b) = rho(a) (x) sigma(b):
    flip 0 -> [[KRS(alpha,beta), 0], [0, KRS(beta,alpha)]],
    flip 1 -> [[0, KRS(alpha,beta)], [KRS(beta,alpha), 0]].
  * diagonal label (rho, sign): acts on V (x) V by
    ((alpha,beta),t) -> (rho(alpha) (x) rho(beta)) . (sign * SWAP)^t,
    dimension d_rho^2.

Characters are exact integers throughout (Murnaghan-Nakayama plus the
wreath character rules in wreath_character); matrices are float64, since
every explicit model here is real orthogonal.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .distributions import SamplingDistribution
from .errors import (
    CapExceededError,
    GroupMismatchError,
    NonCharacterError,
    RepresentationDefectError,
)
from .groups import FiniteGroup, SymmetricGroup, WreathElement, WreathGroup, cached_group
from .rng import CounterRng
from .tableaux import (
    Partition,
    character_sn,
    check_partition,
    dimension,
    letter_positions,
    partition_str,
    partitions,
    parse_partition,
    standard_tableaux,
)

EPS = 1e-9
TRACE_INT_TOL = 1e-6
MAX_YOR_N = 7
MAX_WREATH_N = 4
CACHE_VERSION = 1
CACHE_ENV = "COSETLAB_CACHE_DIR"


# ---------------------------------------------------------------------------
# Irrep labels

@dataclass(frozen=True)
class PairLabel:
    """Unordered pair {rho, sigma} of distinct partitions of the same n."""

    first: Partition
    second: Partition

    def __post_init__(self):
        a = check_partition(self.first)
        b = check_partition(self.second)
        if sum(a) != sum(b):
            raise ValueError("pair label partitions must have equal size")
        if a == b:
            raise ValueError("pair label needs two distinct partitions")
        order = {lam: i for i, lam in enumerate(partitions(sum(a)))}
        if order[a] > order[b]:
            a, b = b, a
        object.__setattr__(self, "first", a)
        object.__setattr__(self, "second", b)


@dataclass(frozen=True)
class DiagonalLabel:
    """Diagonal label (rho, sign), sign in {+1, -1}."""

    rho: Partition
    sign: int

    def __post_init__(self):
        object.__setattr__(self, "rho", check_partition(self.rho))
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")


def label_str(label) -> str:
    if isinstance(label, tuple):
        return partition_str(label)
    if isinstance(label, PairLabel):
        return "{" + partition_str(label.first) + "," + partition_str(label.second) + "}"
    if isinstance(label, DiagonalLabel):
        return "(" + partition_str(label.rho) + (",+)" if label.sign == 1 else ",-)")
    raise TypeError(f"not an irrep label: {label!r}")


def parse_label(text: str):
    t = text.strip()
    if t.startswith("["):
        return parse_partition(t)
    if t.startswith("{") and t.endswith("}"):
        mid = t[1:-1].index("],[") + 2
        return PairLabel(parse_partition(t[1:mid]), parse_partition(t[mid:-1].lstrip(",")))
    if t.startswith("(") and t.endswith(")"):
        body = t[1:-1]
        cut = body.rindex(",")
        sign_text = body[cut + 1 :].strip()
        if sign_text not in ("+", "-"):
            raise ValueError(f"diagonal label sign must be + or -, got {sign_text!r}")
        return DiagonalLabel(parse_partition(body[:cut]), 1 if sign_text == "+" else -1)
    raise ValueError(f"cannot parse irrep label {text!r}")


def label_dim(label) -> int:
    if isinstance(label, tuple):
        return dimension(label)
    if isinstance(label, PairLabel):
        return 2 * dimension(label.first) * dimension(label.second)
    if isinstance(label, DiagonalLabel):
        return dimension(label.rho) ** 2
    raise TypeError(f"not an irrep label: {label!r}")


def label_filename(label) -> str:
    table = str.maketrans(
        {"[": "", "]": "", ",": "-", "{": "pair-", "}": "", "(": "diag-",
         ")": "", "+": "plus", "-": "minus", " ": ""}
    )
    return label_str(label).translate(table)


def irrep_labels(group: FiniteGroup) -> tuple:
    """All irrep labels of the group, in the package's fixed order.

    Symmetric groups: partitions in reverse-lexicographic order.  Wreath
    groups: for each partition the (+) then (-) diagonal label, then the
    pairs {p_i, p_j} with i < j in partition order.
    """
    if isinstance(group, SymmetricGroup):
        return partitions(group.n)
    if isinstance(group, WreathGroup):
        parts = partitions(group.n)
        labels = []
        for rho in parts:
            labels.append(DiagonalLabel(rho, 1))
            labels.append(DiagonalLabel(rho, -1))
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                labels.append(PairLabel(parts[i], parts[j]))
        return tuple(labels)
    raise GroupMismatchError(f"unsupported group {group!r}")


# ---------------------------------------------------------------------------
# Matrix representations

class MatrixRep:
    """A matrix representation given by a stack aligned with group.elements."""

    def __init__(self, group: FiniteGroup, stack: np.ndarray, name: str = "rep"):
        assert stack.shape[0] == group.order and stack.shape[1] == stack.shape[2]
        self.group = group
        self.stack = stack
        self.name = name

    @property
    def dim(self) -> int:
        return self.stack.shape[1]

    def matrix(self, g) -> np.ndarray:
        return self.stack[self.group.index(g)]

    def matrices(self) -> dict:
        return {g: self.stack[i] for i, g in enumerate(self.group.elements)}

    def traces(self) -> np.ndarray:
        return np.einsum("gii->g", self.stack)

    def check(self, eps: float = EPS, pair_budget: int = 2000) -> None:
        """Verify unitarity and the homomorphism property.

        Exhaustive over all |G|^2 products when |G| <= 200, otherwise over
        pair_budget deterministic pseudorandom pairs.  Raises
        RepresentationDefectError on failure.
        """
        stack = self.stack
        eye = np.eye(self.dim)
        gram = np.einsum("gji,gjk->gik", stack.conj(), stack)
        worst = np.max(np.abs(gram - eye))
        if worst > eps:
            raise RepresentationDefectError(
                f"{self.name}: unitarity defect {worst:.3e} exceeds {eps:.1e}"
            )
        order = self.group.order
        if order <= 200:
            table = self.group.multiplication_table()
            for i in range(order):
                prod = stack[i] @ stack
                defect = np.max(np.abs(prod - stack[table[i]]))
                if defect > eps:
                    raise RepresentationDefectError(
                        f"{self.name}: homomorphism defect {defect:.3e} at row {i}"
                    )
        else:
            els = self.group.elements
            rng = CounterRng(0, "rep-check", self.name)
            for t in range(pair_budget):
                i = rng.index(2 * t, order)
                j = rng.index(2 * t + 1, order)
                k = self.group.index(els[i] * els[j])
                defect = np.max(np.abs(stack[i] @ stack[j] - stack[k]))
                if defect > eps:
                    raise RepresentationDefectError(
                        f"{self.name}: homomorphism defect {defect:.3e} "
                        f"at sampled pair {t}"
                    )


class Irrep(MatrixRep):
    """An irreducible representation with exact integer characters.

    characters is aligned with group.conjugacy_classes(); matrix data is the
    explicit orthogonal model described in the module docstring.
    """

    def __init__(self, group, label, stack, characters: tuple[int, ...]):
        super().__init__(group, stack, name=label_str(label))
        self.label = label
        self.characters = characters

    @property
    def dimension(self) -> int:
        return self.dim

    def character(self, g) -> int:
        return self.characters[int(self.group.class_indices()[self.group.index(g)])]

    def character_of_class(self, cls) -> int:
        classes = self.group.conjugacy_classes()
        for i, c in enumerate(classes):
            if c is cls:
                return self.characters[i]
        raise GroupMismatchError("class does not belong to this irrep's group")

    def check(self, eps: float = EPS, pair_budget: int = 2000) -> None:
        super().check(eps, pair_budget)
        classes = self.group.conjugacy_classes()
        # Exact irreducibility: sum |C| chi(C)^2 == |G| in integer arithmetic.
        norm = sum(c.size * chi * chi for c, chi in zip(classes, self.characters))
        if norm != self.group.order:
            raise RepresentationDefectError(
                f"{self.name}: character norm {norm} != |G| = {self.group.order}"
            )
        traces = self.traces()
        expected = np.array(self.characters, dtype=np.float64)[self.group.class_indices()]
        worst = np.max(np.abs(traces - expected))
        if worst > eps:
            raise RepresentationDefectError(
                f"{self.name}: trace/character mismatch {worst:.3e}"
            )


# ---------------------------------------------------------------------------
# Young's orthogonal form for S_n

def _is_standard(rows) -> bool:
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if j + 1 < len(row) and row[j + 1] <= v:
                return False
            if i + 1 < len(rows) and j < len(rows[i + 1]) and rows[i + 1][j] <= v:
                return False
    return True


def _swap_letters(tab, a: int, b: int):
    return tuple(
        tuple(b if v == a else a if v == b else v for v in row) for row in tab
    )


def _yor_generator(lam: Partition, i: int) -> np.ndarray:
    """Matrix of the adjacent transposition (i, i+1) on standard tableaux."""
    tabs = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(tabs)}
    d = len(tabs)
    mat = np.zeros((d, d))
    for k, tab in enumerate(tabs):
        pos = letter_positions(tab)
        r1, c1 = pos[i]
        r2, c2 = pos[i + 1]
        axial = (c2 - r2) - (c1 - r1)
        mat[k, k] = 1.0 / axial
        swapped = _swap_letters(tab, i, i + 1)
        if _is_standard(swapped):
            mat[index[swapped], k] = math.sqrt(1.0 - 1.0 / axial**2)
    return mat


def _extend_by_generators(group: FiniteGroup, gens, dim: int) -> np.ndarray:
    """Fill a full matrix stack from generator matrices by a BFS over the
    Cayley graph; one matrix product per element."""
    count = group.order
    stack = np.zeros((count, dim, dim))
    e = group.identity()
    ei = group.index(e)
    stack[ei] = np.eye(dim)
    seen = np.zeros(count, dtype=bool)
    seen[ei] = True
    queue = [e]
    head = 0
    while head < len(queue):
        g = queue[head]
        head += 1
        gi = group.index(g)
        for s_el, s_mat in gens:
            h = g * s_el
            hi = group.index(h)
            if not seen[hi]:
                seen[hi] = True
                stack[hi] = stack[gi] @ s_mat
                queue.append(h)
    assert seen.all(), "generators do not generate the group"
    return stack


def sym_character_row(lam: Partition, group: SymmetricGroup) -> tuple[int, ...]:
    return tuple(character_sn(lam, c.label) for c in group.conjugacy_classes())


def young_orthogonal_rep(lam, cache_dir: str | None = None) -> Irrep:
    """The S_n irrep of shape lam in Young's orthogonal form."""
    lam = check_partition(lam)
    n = sum(lam)
    if n > MAX_YOR_N:
        raise CapExceededError(
            f"orthogonal-form matrices are capped at n <= {MAX_YOR_N}, got n = {n}"
        )
    group = cached_group(f"sym:{n}")
    d = dimension(lam)
    stack = _cache_load(cache_dir, group, lam, (group.order, d, d))
    if stack is None:
        gens = []
        for i in range(n - 1):
            images = list(range(n))
            images[i], images[i + 1] = images[i + 1], images[i]
            from .groups import Permutation

            gens.append((Permutation(tuple(images)), _yor_generator(lam, i)))
        stack = _extend_by_generators(group, gens, d)
        _cache_store(cache_dir, group, lam, stack)
    return Irrep(group, lam, stack, sym_character_row(lam, group))


def sym_irreps(n: int, cache_dir: str | None = None) -> tuple[Irrep, ...]:
    return tuple(young_orthogonal_rep(lam, cache_dir) for lam in partitions(n))


# ---------------------------------------------------------------------------
# Wreath product irreps

def _swap_matrix(d: int) -> np.ndarray:
    s = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            s[i * d + j, j * d + i] = 1.0
    return s


def _wreath_element_index(group: WreathGroup, sym: SymmetricGroup, g: WreathElement) -> int:
    f = sym.order
    return (sym.index(g.alpha) * f + sym.index(g.beta)) * 2 + g.flip


def _diagonal_stack(r_stack: np.ndarray, sign: int) -> np.ndarray:
    f, d, _ = r_stack.shape
    big = np.einsum("aij,bkl->abikjl", r_stack, r_stack).reshape(f, f, d * d, d * d)
    swap = _swap_matrix(d)
    out = np.empty((2 * f * f, d * d, d * d))
    out[0::2] = big.reshape(f * f, d * d, d * d)
    out[1::2] = (sign * (big @ swap)).reshape(f * f, d * d, d * d)
    return out


def _pair_stack(r_stack: np.ndarray, s_stack: np.ndarray) -> np.ndarray:
    f = r_stack.shape[0]
    m = r_stack.shape[1] * s_stack.shape[1]
    krs = np.einsum("aij,bkl->abikjl", r_stack, s_stack).reshape(f, f, m, m)
    blk11 = krs.reshape(f * f, m, m)
    blk22 = krs.transpose(1, 0, 2, 3).reshape(f * f, m, m)
    out = np.zeros((2 * f * f, 2 * m, 2 * m))
    out[0::2, :m, :m] = blk11
    out[0::2, m:, m:] = blk22
    out[1::2, :m, m:] = blk11
    out[1::2, m:, :m] = blk22
    return out


def wreath_character(label, g: WreathElement) -> int:
    """Exact character of the W(n) irrep with the given label at g."""
    n = g.degree
    ct_a = g.alpha.cycle_type()
    ct_b = g.beta.cycle_type()
    if isinstance(label, PairLabel):
        if sum(label.first) != n:
            raise GroupMismatchError("label degree does not match element degree")
        if g.flip:
            return 0
        rho, sig = label.first, label.second
        return character_sn(rho, ct_a) * character_sn(sig, ct_b) + character_sn(
            sig, ct_a
        ) * character_sn(rho, ct_b)
    if isinstance(label, DiagonalLabel):
        if sum(label.rho) != n:
            raise GroupMismatchError("label degree does not match element degree")
        if g.flip:
            # trace((A (x) B) . sign*SWAP) = sign * trace(AB)
            return label.sign * character_sn(label.rho, (g.alpha * g.beta).cycle_type())
        return character_sn(label.rho, ct_a) * character_sn(label.rho, ct_b)
    raise TypeError(f"not a wreath irrep label: {label!r}")


def wreath_irreps(n: int, cache_dir: str | None = None) -> tuple[Irrep, ...]:
    """All irreps of W(n) with explicit matrices, in irrep_labels order."""
    if n > MAX_WREATH_N:
        raise CapExceededError(
            f"wreath irrep matrices are capped at n <= {MAX_WREATH_N}, got n = {n}"
        )
    grp = cached_group(f"wreath:{n}")
    sym = cached_group(f"sym:{n}")
    # The wreath enumeration is (alpha, beta, flip) nested loops over the
    # lex-ordered permutations, so the index formula below holds; assert once.
    probe = grp.elements[min(3, grp.order - 1)]
    assert _wreath_element_index(grp, sym, probe) == grp.index(probe)

    sym_stacks = {lam: young_orthogonal_rep(lam, cache_dir).stack for lam in partitions(n)}
    table = character_table(grp)
    out = []
    for lab in irrep_labels(grp):
        d = label_dim(lab)
        stack = _cache_load(cache_dir, grp, lab, (grp.order, d, d))
        if stack is None:
            if isinstance(lab, DiagonalLabel):
                stack = _diagonal_stack(sym_stacks[lab.rho], lab.sign)
            else:
                stack = _pair_stack(sym_stacks[lab.first], sym_stacks[lab.second])
            _cache_store(cache_dir, grp, lab, stack)
        out.append(Irrep(grp, lab, stack, table[lab]))
    assert sum(ir.dim**2 for ir in out) == grp.order
    return tuple(out)


def group_irreps(group: FiniteGroup, cache_dir: str | None = None) -> tuple[Irrep, ...]:
    if isinstance(group, SymmetricGroup):
        return sym_irreps(group.n, cache_dir)
    if isinstance(group, WreathGroup):
        return wreath_irreps(group.n, cache_dir)
    raise GroupMismatchError(f"unsupported group {group!r}")


# ---------------------------------------------------------------------------
# Character tables, Plancherel, projectors, multiplicities

_TABLE_CACHE: dict[str, dict] = {}


def character_table(group: FiniteGroup) -> dict:
    """label -> tuple of exact integer characters, aligned with
    group.conjugacy_classes()."""
    key = group.spec
    if key in _TABLE_CACHE:
        return _TABLE_CACHE[key]
    classes = group.conjugacy_classes()
    table = {}
    if isinstance(group, SymmetricGroup):
        for lam in irrep_labels(group):
            table[lam] = tuple(character_sn(lam, c.label) for c in classes)
    elif isinstance(group, WreathGroup):
        for lab in irrep_labels(group):
            table[lab] = tuple(wreath_character(lab, c.representative) for c in classes)
    else:
        raise GroupMismatchError(f"unsupported group {group!r}")
    _TABLE_CACHE[key] = table
    return table


def plancherel(group: FiniteGroup) -> SamplingDistribution:
    """The Plancherel distribution d^2/|G| on irrep labels, exact."""
    labels = irrep_labels(group)
    outcomes = tuple(
        (label_str(lab), Fraction(label_dim(lab) ** 2, group.order)) for lab in labels
    )
    return SamplingDistribution(
        "plancherel", group.spec, "trivial", outcomes, exact=True
    )


def class_character(rep: MatrixRep) -> tuple[int, ...]:
    """Exact integer class function from matrix traces (guarded rounding)."""
    out = []
    for cls in rep.group.conjugacy_classes():
        t = rep.matrix(cls.representative).trace()
        t = complex(t)
        if abs(t.imag) > TRACE_INT_TOL or abs(t.real - round(t.real)) > TRACE_INT_TOL:
            raise NonCharacterError(f"trace {t!r} is not an integer within tolerance")
        out.append(round(t.real))
    return tuple(out)


def multiplicity(rep_character, sigma_label, group: FiniteGroup) -> int:
    """Exact multiplicity <chi_rep, chi_sigma> over the given group.

    rep_character is a class function aligned with group.conjugacy_classes();
    values must be integers (within 1e-6 if given as floats).  A non-integer
    inner product raises NonCharacterError.
    """
    classes = group.conjugacy_classes()
    if len(rep_character) != len(classes):
        raise GroupMismatchError("class function length does not match class count")
    ints = []
    for x in rep_character:
        z = complex(x)
        if abs(z.imag) > TRACE_INT_TOL or abs(z.real - round(z.real)) > TRACE_INT_TOL:
            raise NonCharacterError(f"class function value {x!r} is not an integer")
        ints.append(round(z.real))
    chi_sigma = character_table(group)[sigma_label]
    total = sum(c.size * a * b for c, a, b in zip(classes, ints, chi_sigma))
    value = Fraction(total, group.order)
    if value.denominator != 1 or value < 0:
        raise NonCharacterError(
            f"inner product {value} with {label_str(sigma_label)} is not a "
            "nonnegative integer; input is not a character"
        )
    return int(value)


@dataclass(frozen=True)
class IsotypicProjector:
    target: str
    matrix: np.ndarray
    multiplicity: int
    target_dim: int

    @property
    def rank(self) -> int:
        return self.multiplicity * self.target_dim


def isotypic_projector(rep: MatrixRep, sigma, eps: float = EPS) -> IsotypicProjector:
    """Projector onto the sigma-isotypic subspace of rep, by group averaging:
    (d_sigma/|G|) sum_g conj(chi_sigma(g)) rep(g).

    Validates idempotence, self-adjointness and the trace = multiplicity *
    d_sigma identity; failures raise RepresentationDefectError, which is how
    a non-representation input announces itself.
    """
    group = rep.group
    sigma_label = sigma.label if isinstance(sigma, Irrep) else sigma
    chi = character_table(group)[sigma_label]
    d_sigma = label_dim(sigma_label)
    # Characters here are real integers, so conjugation is a no-op.
    weights = np.asarray(chi, dtype=np.float64)[group.class_indices()]
    mat = (d_sigma / group.order) * np.einsum("g,gij->ij", weights, rep.stack)
    defect = np.max(np.abs(mat @ mat - mat))
    if defect > eps:
        raise RepresentationDefectError(
            f"isotypic projector for {label_str(sigma_label)} is not idempotent "
            f"(defect {defect:.3e}); input is not a representation"
        )
    herm = np.max(np.abs(mat - mat.conj().T))
    if herm > eps:
        raise RepresentationDefectError(
            f"isotypic projector for {label_str(sigma_label)} is not self-adjoint "
            f"(defect {herm:.3e})"
        )
    a = multiplicity(class_character(rep), sigma_label, group)
    tr = float(np.real(mat.trace()))
    if abs(tr - a * d_sigma) > TRACE_INT_TOL:
        raise RepresentationDefectError(
            f"projector trace {tr!r} != multiplicity*dim = {a * d_sigma}"
        )
    return IsotypicProjector(label_str(sigma_label), mat, a, d_sigma)


# ---------------------------------------------------------------------------
# Disk cache for matrix stacks (pure performance layer)

def resolve_cache_dir(cache_dir: str | None) -> str | None:
    if cache_dir is not None:
        return cache_dir or None
    return os.environ.get(CACHE_ENV) or None


def _cache_file(cache_dir: str, group: FiniteGroup, label) -> Path:
    name = f"{group.kind}{group.n}__{label_filename(label)}__v{CACHE_VERSION}.npz"
    return Path(cache_dir) / name


def _cache_load(cache_dir, group, label, shape) -> np.ndarray | None:
    cache_dir = resolve_cache_dir(cache_dir)
    if not cache_dir:
        return None
    path = _cache_file(cache_dir, group, label)
    if not path.exists():
        return None
    try:
        with np.load(path) as data:
            if int(data["version"]) != CACHE_VERSION:
                return None
            real, imag = data["real"], data["imag"]
    except (OSError, KeyError, ValueError):
        return None
    if real.shape != shape:
        return None
    return real if not imag.any() else real + 1j * imag


def _cache_store(cache_dir, group, label, stack) -> None:
    cache_dir = resolve_cache_dir(cache_dir)
    if not cache_dir:
        return
    path = _cache_file(cache_dir, group, label)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.parent / f"{path.stem}.tmp-{os.getpid()}.npz"
    # Row-major real/imag float64 pairs; little-endian on every platform numpy
    # supports.  Create-then-rename keeps concurrent readers safe.
    np.savez(
        tmp,
        version=np.int64(CACHE_VERSION),
        group=group.spec,
        label=label_str(label),
        real=np.ascontiguousarray(np.real(stack), dtype=np.float64),
        imag=np.ascontiguousarray(np.imag(stack), dtype=np.float64),
    )
    os.replace(tmp, path)
