import math
from fractions import Fraction

import pytest

from cosetlab.groups import SymmetricGroup
from cosetlab.tableaux import (
    character_sn,
    conjugate_partition,
    dimension,
    parse_partition,
    partition_str,
    partitions,
    standard_tableaux,
)


def test_partition_counts():
    assert len(partitions(0)) == 1 and partitions(0) == ((),)
    assert len(partitions(4)) == 5
    assert len(partitions(5)) == 7
    assert len(partitions(10)) == 42


def test_partitions_reverse_lex_order():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_partitions_range_check():
    with pytest.raises(ValueError):
        partitions(-1)
    with pytest.raises(ValueError):
        partitions(31)


def test_partition_serialization():
    assert partition_str((3, 1)) == "[3,1]"
    assert parse_partition("[3,1]") == (3, 1)
    assert parse_partition("[]") == ()
    with pytest.raises(ValueError):
        parse_partition("[1,3]")


def test_conjugate_partition():
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    assert conjugate_partition(()) == ()
    for n in range(7):
        for lam in partitions(n):
            assert conjugate_partition(conjugate_partition(lam)) == lam


@pytest.mark.parametrize("lam,d", [((3,), 1), ((1, 1, 1), 1), ((3, 2), 5), ((2, 1), 2)])
def test_dimension_known_values(lam, d):
    assert dimension(lam) == d


def test_dimension_equals_tableau_count():
    # Hook-length formula against the brute enumeration it summarizes.
    for n in range(8):
        for lam in partitions(n):
            assert dimension(lam) == len(standard_tableaux(lam))


def test_dimension_squares_sum_to_group_order():
    for n in range(9):
        assert sum(dimension(lam) ** 2 for lam in partitions(n)) == math.factorial(n)


def test_tableau_order_is_row_vector_lex():
    t = standard_tableaux((2, 1))
    assert t == (((0, 1), (2,)), ((0, 2), (1,)))


def test_character_trivial_and_identity():
    for n in range(1, 7):
        for lam in partitions(n):
            assert character_sn((n,), lam) == 1
            assert character_sn(lam, (1,) * n) == dimension(lam)


def test_character_sign_rep():
    for n in range(1, 7):
        sign = (1,) * n
        for mu in partitions(n):
            assert character_sn(sign, mu) == (-1) ** (n - len(mu))


def test_character_s3_table():
    classes = [(1, 1, 1), (2, 1), (3,)]
    table = {
        (3,): [1, 1, 1],
        (2, 1): [2, 0, -1],
        (1, 1, 1): [1, -1, 1],
    }
    for lam, vals in table.items():
        assert [character_sn(lam, mu) for mu in classes] == vals


def test_character_s4_table():
    classes = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    table = {
        (4,): [1, 1, 1, 1, 1],
        (3, 1): [3, 1, -1, 0, -1],
        (2, 2): [2, 0, 2, -1, 0],
        (2, 1, 1): [3, -1, -1, 0, 1],
        (1, 1, 1, 1): [1, -1, 1, 1, -1],
    }
    for lam, vals in table.items():
        assert [character_sn(lam, mu) for mu in classes] == vals


def test_character_conjugation_symmetry():
    # chi_{lam'}(mu) = sign(mu) * chi_lam(mu)
    for n in range(1, 8):
        for lam in partitions(n):
            for mu in partitions(n):
                sign = (-1) ** (n - len(mu))
                assert character_sn(conjugate_partition(lam), mu) == sign * character_sn(lam, mu)


def class_sizes(n):
    grp = SymmetricGroup(n)
    return {c.label: c.size for c in grp.conjugacy_classes()}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_character_orthogonality_exact(n):
    sizes = class_sizes(n)
    lams = partitions(n)
    for a in lams:
        for b in lams:
            inner = Fraction(
                sum(sz * character_sn(a, mu) * character_sn(b, mu) for mu, sz in sizes.items()),
                math.factorial(n),
            )
            assert inner == (1 if a == b else 0)


def test_character_degree_mismatch():
    with pytest.raises(ValueError):
        character_sn((2, 1), (2, 2))
