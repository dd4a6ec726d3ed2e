"""Finite group arithmetic for S_n and the block-swap wreath product S_n wr Z2.

Composition convention, used everywhere in this package: (g*h) means "apply h
first, then g", so (g*h)(i) = g(h(i)).  The wreath product W(n) consists of
pairs of degree-n permutations together with a flip bit,

    ((a1,b1),t1) * ((a2,b2),t2) = ((a1*x, b1*y), t1 XOR t2),

with (x,y) = (a2,b2) when t1 = 0 and (x,y) = (b2,a2) when t1 = 1.  The flip
element s = ((e,e),1) swaps the two blocks; |W(n)| = 2*(n!)^2.

Element enumeration order is deterministic: permutations in lexicographic
order of their image tuples, wreath elements in lexicographic order of
(alpha.images, beta.images, flip).  Conjugacy classes are computed by
brute-force conjugation orbits; no cycle-type shortcuts are trusted, the
cycle-type descriptor is attached afterwards and checked for constancy.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    CapExceededError,
    GroupMismatchError,
    UnsupportedGroupError,
)

DEFAULT_ELEMENT_CAP = 50_000


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0,..,n-1}, stored as its image tuple.

    images[i] is the image of point i.  The canonical text form is the
    one-line image list, e.g. "[2,0,1]".
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..n-1: {self.images!r}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise GroupMismatchError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        img = self.images
        return Permutation(tuple(img[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles (fixed points included), each starting at its
        minimum, sorted by that minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"


def parse_permutation(text: str) -> Permutation:
    """Inverse of str(): "[2,0,1]" -> Permutation((2,0,1))."""
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"expected image list like [2,0,1], got {text!r}")
    inner = t[1:-1].strip()
    images = tuple(int(p) for p in inner.split(",")) if inner else ()
    return Permutation(images)


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation like "(01)" or "(0 2)(1 3)" into a permutation.

    Inside each parenthesized cycle, points may be separated by spaces or
    commas; a bare digit string like "(012)" is read one character at a time,
    which is unambiguous for n <= 10.
    """
    t = text.strip().replace(" ", " ")
    if t in ("", "()", "e"):
        return Permutation.identity(n)
    images = list(range(n))
    depth_chunks = []
    if not t.startswith("("):
        raise ValueError(f"expected cycle notation like (01), got {text!r}")
    for chunk in t.split(")"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not chunk.startswith("("):
            raise ValueError(f"unbalanced parentheses in {text!r}")
        body = chunk[1:].strip()
        if "," in body or " " in body:
            pts = [int(p) for p in body.replace(",", " ").split()]
        else:
            pts = [int(ch) for ch in body]
        depth_chunks.append(pts)
    for pts in depth_chunks:
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle {pts}")
        for p in pts:
            if not 0 <= p < n:
                raise ValueError(f"point {p} out of range for degree {n}")
        for i, p in enumerate(pts):
            images[p] = pts[(i + 1) % len(pts)]
    return Permutation(tuple(images))


@dataclass(frozen=True)
class WreathElement:
    """Element ((alpha, beta), flip) of the wreath product W(n).

    Canonical text form: "([..],[..],t)" with the two image lists followed by
    the flip bit, e.g. "([1,0],[0,1],1)".
    """

    alpha: Permutation
    beta: Permutation
    flip: int

    def __post_init__(self):
        if self.alpha.degree != self.beta.degree:
            raise GroupMismatchError("alpha and beta must have equal degree")
        if self.flip not in (0, 1):
            raise ValueError(f"flip must be 0 or 1, got {self.flip!r}")

    @property
    def degree(self) -> int:
        return self.alpha.degree

    @staticmethod
    def identity(n: int) -> "WreathElement":
        e = Permutation.identity(n)
        return WreathElement(e, e, 0)

    @staticmethod
    def swap(n: int) -> "WreathElement":
        """The block-swap involution s = ((e,e),1)."""
        e = Permutation.identity(n)
        return WreathElement(e, e, 1)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if self.degree != other.degree:
            raise GroupMismatchError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        if self.flip == 0:
            x, y = other.alpha, other.beta
        else:
            x, y = other.beta, other.alpha
        return WreathElement(self.alpha * x, self.beta * y, self.flip ^ other.flip)

    def inverse(self) -> "WreathElement":
        if self.flip == 0:
            return WreathElement(self.alpha.inverse(), self.beta.inverse(), 0)
        # ((a,b),1)^-1 = ((b^-1, a^-1), 1): check via the product rule.
        return WreathElement(self.beta.inverse(), self.alpha.inverse(), 1)

    def is_identity(self) -> bool:
        return self.flip == 0 and self.alpha.is_identity() and self.beta.is_identity()

    def order(self) -> int:
        k, acc = 1, self
        while not acc.is_identity():
            acc = acc * self
            k += 1
        return k

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta},{self.flip})"


def parse_wreath_element(text: str) -> WreathElement:
    """Inverse of str(): "([1,0],[0,1],1)" -> WreathElement."""
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ValueError(f"expected wreath element like ([..],[..],t), got {text!r}")
    body = t[1:-1]
    try:
        a_end = body.index("]")
        b_end = body.index("]", a_end + 1)
        alpha = parse_permutation(body[: a_end + 1])
        beta = parse_permutation(body[a_end + 1 : b_end + 1].lstrip(","))
        flip = int(body[b_end + 1 :].lstrip(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse wreath element {text!r}: {exc}") from exc
    return WreathElement(alpha, beta, flip)


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class with a deterministic member order.

    members are sorted by their position in the group's element enumeration;
    the representative is the first member.  label is a descriptive cycle-type
    tag (verified constant on the class, not relied upon for the partition).
    """

    group: "FiniteGroup"
    representative: object
    members: tuple
    label: tuple

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return g in set(self.members)


class FiniteGroup:
    """Shared brute-force machinery for the two supported families."""

    kind: str = "abstract"

    def __init__(self, n: int, element_cap: int = DEFAULT_ELEMENT_CAP):
        self.n = n
        self.element_cap = element_cap
        self._elements: tuple | None = None
        self._index: dict | None = None
        self._classes: tuple[ConjugacyClass, ...] | None = None
        self._class_of: dict | None = None
        self._mult_table: np.ndarray | None = None
        self._class_indices: np.ndarray | None = None

    # Subclasses fill these in.
    @property
    def order(self) -> int:
        raise NotImplementedError

    def _enumerate(self):
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def class_label(self, g) -> tuple:
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and (self.kind, self.n) == (
            other.kind,
            other.n,
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.n))

    def __repr__(self) -> str:
        return self.spec

    @property
    def spec(self) -> str:
        return f"{self.kind}:{self.n}"

    @property
    def elements(self) -> tuple:
        if self._elements is None:
            if self.order > self.element_cap:
                raise CapExceededError(
                    f"{self.spec} has {self.order} elements, cap is {self.element_cap}"
                )
            self._elements = tuple(self._enumerate())
            assert len(self._elements) == self.order
        return self._elements

    def index(self, g) -> int:
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        try:
            return self._index[g]
        except KeyError:
            raise GroupMismatchError(f"{g} is not an element of {self.spec}") from None

    def __contains__(self, g) -> bool:
        if self._index is None:
            self.index(self.identity())
        return g in self._index

    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        """Partition into classes by conjugation orbits, deterministic order.

        Classes are ordered by their earliest member; members sorted by
        enumeration index.  Cost is O(#classes * |G|) conjugations.
        """
        if self._classes is not None:
            return self._classes
        els = self.elements
        assigned = [False] * len(els)
        classes = []
        class_of = {}
        for i, g in enumerate(els):
            if assigned[i]:
                continue
            orbit_idx = set()
            for x in els:
                h = x.inverse() * g * x
                orbit_idx.add(self.index(h))
            members = tuple(els[j] for j in sorted(orbit_idx))
            label = self.class_label(members[0])
            for h in members[1:]:
                assert self.class_label(h) == label, "class label is not constant"
            cls = ConjugacyClass(self, members[0], members, label)
            for j in orbit_idx:
                assigned[j] = True
                class_of[els[j]] = cls
            classes.append(cls)
        assert sum(c.size for c in classes) == self.order
        self._classes = tuple(classes)
        self._class_of = class_of
        return self._classes

    def class_of(self, g) -> ConjugacyClass:
        if self._class_of is None:
            self.conjugacy_classes()
        try:
            return self._class_of[g]
        except KeyError:
            raise GroupMismatchError(f"{g} is not an element of {self.spec}") from None

    def multiplication_table(self) -> np.ndarray:
        """table[i, j] = index of elements[i] * elements[j].  O(|G|^2)."""
        if self._mult_table is None:
            els = self.elements
            self.index(self.identity())  # force the index map
            idx = self._index
            self._mult_table = np.array(
                [[idx[g * h] for h in els] for g in els], dtype=np.int32
            )
        return self._mult_table

    def class_indices(self) -> np.ndarray:
        """Per element (in enumeration order), the index of its class."""
        if self._class_indices is None:
            classes = self.conjugacy_classes()
            pos = {id(c): i for i, c in enumerate(classes)}
            self._class_indices = np.array(
                [pos[id(self.class_of(g))] for g in self.elements], dtype=np.int32
            )
        return self._class_indices


class SymmetricGroup(FiniteGroup):
    kind = "sym"

    @property
    def order(self) -> int:
        return math.factorial(self.n)

    def _enumerate(self):
        for images in itertools.permutations(range(self.n)):
            yield Permutation(images)

    def identity(self) -> Permutation:
        return Permutation.identity(self.n)

    def class_label(self, g: Permutation) -> tuple:
        return g.cycle_type()

    def parse(self, text: str) -> Permutation:
        g = parse_permutation(text)
        if g.degree != self.n:
            raise GroupMismatchError(f"degree {g.degree} element in {self.spec}")
        return g


class WreathGroup(FiniteGroup):
    """The wreath product W(n): pairs of S_n elements plus a block flip."""

    kind = "wreath"

    @property
    def order(self) -> int:
        f = math.factorial(self.n)
        return 2 * f * f

    def _enumerate(self):
        perms = [Permutation(p) for p in itertools.permutations(range(self.n))]
        for alpha in perms:
            for beta in perms:
                for flip in (0, 1):
                    yield WreathElement(alpha, beta, flip)

    def identity(self) -> WreathElement:
        return WreathElement.identity(self.n)

    def swap_element(self) -> WreathElement:
        return WreathElement.swap(self.n)

    def class_label(self, g: WreathElement) -> tuple:
        # Invariants under conjugation: the unordered pair of cycle types for
        # flip 0, the cycle type of alpha*beta for flip 1.
        if g.flip == 0:
            a, b = g.alpha.cycle_type(), g.beta.cycle_type()
            return (0,) + tuple(sorted((a, b)))
        return (1, (g.alpha * g.beta).cycle_type())

    def parse(self, text: str) -> WreathElement:
        g = parse_wreath_element(text)
        if g.degree != self.n:
            raise GroupMismatchError(f"degree {g.degree} element in {self.spec}")
        return g


def group_from_spec(spec: str, element_cap: int = DEFAULT_ELEMENT_CAP) -> FiniteGroup:
    """Build a group from a "sym:n" or "wreath:n" string."""
    try:
        kind, n_text = spec.split(":")
        n = int(n_text)
    except ValueError:
        raise ValueError(f"group spec must look like sym:3 or wreath:2, got {spec!r}")
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    if kind == "sym":
        return SymmetricGroup(n, element_cap)
    if kind == "wreath":
        return WreathGroup(n, element_cap)
    raise ValueError(f"unknown group kind {kind!r}")


def multiply(g, h):
    """Group product g*h (apply h first, then g)."""
    return g * h


def conjugate(g, x):
    """The conjugate x^-1 * g * x."""
    if isinstance(g, Permutation) != isinstance(x, Permutation):
        raise GroupMismatchError("cannot conjugate across group families")
    return x.inverse() * g * x


def involution_class(group: FiniteGroup) -> ConjugacyClass:
    """The conjugacy class of the block swap s in a wreath group.

    Every member has flip 1 and squares to the identity; there are n! of
    them, of the form ((c, c^-1), 1).
    """
    if not isinstance(group, WreathGroup):
        raise UnsupportedGroupError(
            "the distinguished involution class lives in wreath groups only"
        )
    cls = group.class_of(group.swap_element())
    for m in cls.members:
        assert m.flip == 1 and (m * m).is_identity()
    return cls


@lru_cache(maxsize=None)
def cached_group(spec: str) -> FiniteGroup:
    """Shared default-cap group instances, so element tables are built once."""
    return group_from_spec(spec)
