import itertools
import random

import pytest

from cosetlab.errors import (
    CapExceededError,
    GroupMismatchError,
    UnsupportedGroupError,
)
from cosetlab.groups import (
    ConjugacyClass,
    Permutation,
    SymmetricGroup,
    WreathElement,
    WreathGroup,
    conjugate,
    group_from_spec,
    involution_class,
    multiply,
    parse_cycles,
    parse_permutation,
    parse_wreath_element,
)


def test_identity_law_s3():
    g3 = SymmetricGroup(3)
    e = g3.identity()
    for g in g3.elements:
        assert multiply(e, g) == g
        assert multiply(g, e) == g


def test_swap_squares_to_identity():
    for n in (1, 2, 3):
        s = WreathElement.swap(n)
        assert (s * s).is_identity()


def test_swap_times_plain_pair_swaps_the_pair():
    # ((e,e),1) * ((a,b),0) = ((b,a),1)
    a = parse_cycles("(01)", 2)
    b = Permutation.identity(2)
    s = WreathElement.swap(2)
    prod = s * WreathElement(a, b, 0)
    assert prod == WreathElement(b, a, 1)


def test_conjugate_by_identity():
    g3 = SymmetricGroup(3)
    e = g3.identity()
    for g in g3.elements:
        assert conjugate(g, e) == g


def test_conjugate_transposition():
    g = parse_cycles("(01)", 3)
    x = parse_cycles("(12)", 3)
    assert conjugate(g, x) == parse_cycles("(02)", 3)


def test_conjugate_swap_by_plain_pair():
    tau = parse_cycles("(01)", 2)
    s = WreathElement.swap(2)
    x = WreathElement(tau, Permutation.identity(2), 0)
    assert conjugate(s, x) == WreathElement(tau, tau, 1)


def test_composition_is_apply_right_first():
    g = parse_cycles("(01)", 3)
    h = parse_cycles("(12)", 3)
    gh = g * h
    for i in range(3):
        assert gh(i) == g(h(i))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_symmetric_group_axioms_exhaustive(n):
    grp = SymmetricGroup(n)
    els = grp.elements
    assert len(els) == grp.order
    assert els[0] == grp.identity()
    for g in els:
        assert g * g.inverse() == grp.identity()
    if n <= 3:
        for g, h, k in itertools.product(els, repeat=3):
            assert (g * h) * k == g * (h * k)
    # Closure: products land back in the enumeration.
    for g, h in itertools.product(els, repeat=2):
        grp.index(g * h)


@pytest.mark.parametrize("n", [1, 2])
def test_wreath_group_axioms_exhaustive(n):
    grp = WreathGroup(n)
    els = grp.elements
    assert len(els) == grp.order == 2 * math_factorial(n) ** 2
    for g in els:
        assert g * g.inverse() == grp.identity()
        assert g.inverse() * g == grp.identity()
    for g, h, k in itertools.product(els, repeat=3):
        assert (g * h) * k == g * (h * k)


def math_factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_wreath3_sampled_axioms():
    grp = WreathGroup(3)
    els = grp.elements
    assert len(els) == 72
    rng = random.Random(7)
    for _ in range(200):
        g, h, k = (els[rng.randrange(72)] for _ in range(3))
        assert (g * h) * k == g * (h * k)
        grp.index(g * h)


def test_conjugacy_classes_s3():
    sizes = sorted(c.size for c in SymmetricGroup(3).conjugacy_classes())
    assert sizes == [1, 2, 3]


def test_conjugacy_classes_s4_count():
    assert len(SymmetricGroup(4).conjugacy_classes()) == 5


def test_conjugacy_classes_wreath2_count():
    # W(2) is the dihedral group of order 8: five classes.
    grp = WreathGroup(2)
    classes = grp.conjugacy_classes()
    assert len(classes) == 5
    assert sum(c.size for c in classes) == 8


@pytest.mark.parametrize("spec", ["sym:3", "sym:4", "wreath:2", "wreath:3"])
def test_class_equation(spec):
    grp = group_from_spec(spec)
    classes = grp.conjugacy_classes()
    assert sum(c.size for c in classes) == grp.order
    for cls in classes:
        assert isinstance(cls, ConjugacyClass)
        # Closure under conjugation by every group element.
        member_set = set(cls.members)
        for x in grp.elements:
            assert conjugate(cls.representative, x) in member_set


def test_involution_class_wreath2():
    grp = WreathGroup(2)
    cls = involution_class(grp)
    tau = parse_cycles("(01)", 2)
    e = Permutation.identity(2)
    assert set(cls.members) == {WreathElement(e, e, 1), WreathElement(tau, tau, 1)}


@pytest.mark.parametrize("n,size", [(1, 1), (2, 2), (3, 6)])
def test_involution_class_size_and_shape(n, size):
    cls = involution_class(WreathGroup(n))
    assert cls.size == size
    for m in cls.members:
        assert m.flip == 1
        assert m.order() == 1 if m.is_identity() else m.order() == 2
        assert m.beta == m.alpha.inverse()


def test_involution_class_rejects_symmetric():
    with pytest.raises(UnsupportedGroupError):
        involution_class(SymmetricGroup(3))


def test_centralizer_size_via_class_equation():
    for n in (2, 3):
        grp = WreathGroup(n)
        cls = involution_class(grp)
        assert grp.order // cls.size == 2 * math_factorial(n)


def test_enumeration_order_is_lexicographic():
    g3 = SymmetricGroup(3)
    assert [str(g) for g in g3.elements[:3]] == ["[0,1,2]", "[0,2,1]", "[1,0,2]"]
    w1 = WreathGroup(1)
    assert [str(g) for g in w1.elements] == ["([0],[0],0)", "([0],[0],1)"]


def test_serialization_roundtrip():
    rng = random.Random(3)
    g4 = SymmetricGroup(4)
    for _ in range(20):
        g = g4.elements[rng.randrange(g4.order)]
        assert parse_permutation(str(g)) == g
    w2 = WreathGroup(2)
    for g in w2.elements:
        assert parse_wreath_element(str(g)) == g


def test_parse_cycles_forms():
    assert parse_cycles("(01)", 3) == Permutation((1, 0, 2))
    assert parse_cycles("(0 2)(1 3)", 4) == Permutation((2, 3, 0, 1))
    assert parse_cycles("(0,1,2)", 3) == Permutation((1, 2, 0))
    assert parse_cycles("e", 3) == Permutation.identity(3)


def test_cycle_type_and_order():
    g = parse_cycles("(012)(34)", 5)
    assert g.cycle_type() == (3, 2)
    assert g.order() == 6


def test_degree_mismatch_raises():
    with pytest.raises(GroupMismatchError):
        Permutation((0, 1)) * Permutation((0, 1, 2))
    with pytest.raises(GroupMismatchError):
        SymmetricGroup(3).index(Permutation((0, 1)))


def test_enumeration_cap():
    grp = group_from_spec("wreath:6")
    with pytest.raises(CapExceededError):
        _ = grp.elements


def test_sym0_is_the_trivial_group():
    g0 = SymmetricGroup(0)
    assert g0.order == 1
    assert g0.elements == (Permutation(()),)
    assert len(g0.conjugacy_classes()) == 1
