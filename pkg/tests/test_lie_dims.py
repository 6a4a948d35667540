import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from lkrep.lie_dims import (
    DynkinLabeling,
    cartan_matrix,
    e6_dimension_direct,
    enumerate_irreps_below,
    is_asymmetric,
    parse_diagram,
    positive_roots,
    weyl_dimension,
)


def A(n, *lab):
    return DynkinLabeling("A", n, tuple(lab) + (0,) * (n - len(lab)))


def D(n, *lab):
    return DynkinLabeling("D", n, tuple(lab) + (0,) * (n - len(lab)))


def E6(*lab):
    return DynkinLabeling("E6", 6, tuple(lab) + (0,) * (6 - len(lab)))


def test_positive_root_counts():
    assert len(positive_roots("A", 2).positive) == 3
    assert len(positive_roots("A", 5).positive) == 15
    assert len(positive_roots("D", 4).positive) == 12
    assert len(positive_roots("D", 5).positive) == 20
    assert len(positive_roots("E6", 6).positive) == 36


def test_inner_product_normalization():
    rs = positive_roots("A", 3)
    e1 = (1, 0, 0)
    e2 = (0, 1, 0)
    assert rs.inner(e1, e1) == Fraction(1)
    assert rs.inner(e1, e2) == Fraction(-1, 2)


def test_elementary_representation():
    for n in range(1, 7):
        assert weyl_dimension(A(n, 1)) == n + 1


def test_a5_reference_values():
    assert weyl_dimension(A(5, 0, 0, 1)) == 20
    assert weyl_dimension(A(5, 1, 0, 1)) == 105
    assert weyl_dimension(A(5, 0, 1, 1)) == 210


def test_a_series_closed_forms():
    for n in range(3, 8):
        assert weyl_dimension(A(n, 2)) == (n + 1) * (n + 2) // 2
        assert weyl_dimension(A(n, 3)) == comb(n + 3, 3)
        assert weyl_dimension(A(n, 0, 0, 1)) == comb(n + 1, 3)
    for n in range(3, 7):
        assert weyl_dimension(A(n, 0, 2)) == (n + 2) * (n + 1) ** 2 * n // 12
        assert weyl_dimension(A(n, 1, 1)) == (n + 2) * (n + 1) * n // 3
    for n in (5, 6):
        assert weyl_dimension(A(n, 0, 1, 1)) == (n + 1) * comb(n + 2, 4)
        assert weyl_dimension(A(n, 1, 0, 1)) == 3 * comb(n + 2, 4)


def test_basic_representations_are_binomial():
    for n in range(2, 7):
        for k in range(1, n + 1):
            lab = [0] * n
            lab[k - 1] = 1
            assert weyl_dimension(DynkinLabeling("A", n, tuple(lab))) == comb(n + 1, k)


def test_d5_reference_values():
    assert weyl_dimension(D(5, 0, 0, 0, 1, 0)) == 16
    assert weyl_dimension(D(5, 0, 0, 0, 0, 1)) == 16
    assert weyl_dimension(D(5, 1, 0, 0, 1, 0)) == 144
    assert weyl_dimension(D(5, 0, 0, 0, 2, 0)) == 126


def test_e6_reference_values():
    assert weyl_dimension(E6(1)) == 27
    assert weyl_dimension(E6(0, 0, 0, 0, 1)) == 27
    assert weyl_dimension(E6(2)) == 351
    assert weyl_dimension(E6(0, 0, 0, 0, 0, 1)) == 78
    assert e6_dimension_direct((1, 0, 0, 0, 0, 0)) == 27
    assert e6_dimension_direct((2, 0, 0, 0, 0, 0)) == 351


def test_e6_direct_agrees_with_weyl():
    for labels in itertools.product(range(4), repeat=6):
        if any(labels) and sum(labels) <= 3:
            assert e6_dimension_direct(labels) == weyl_dimension(E6(*labels))


def test_is_asymmetric():
    assert is_asymmetric(A(5, 1))
    assert not is_asymmetric(A(5, 0, 0, 1))
    assert is_asymmetric(D(5, 0, 0, 0, 1, 0))
    assert not is_asymmetric(D(5, 0, 0, 0, 1, 1))
    assert not is_asymmetric(D(4, 0, 0, 1, 0))  # even rank: never asymmetric here
    assert is_asymmetric(E6(1))
    assert not is_asymmetric(E6(0, 0, 1))
    assert not is_asymmetric(E6(1, 0, 0, 0, 1))


def test_enumerate_a5():
    rows = enumerate_irreps_below("A", 5, 21, asymmetric_only=True)
    found = {l.labels: d for l, d in rows}
    assert found[(1, 0, 0, 0, 0)] == 6
    assert found[(2, 0, 0, 0, 0)] == 21
    assert found[(0, 1, 0, 0, 0)] == 15
    assert (1, 0, 1, 0, 0) not in found
    assert (0, 0, 1, 0, 0) not in found  # symmetric, dimension 20


def test_enumerate_d5():
    rows = enumerate_irreps_below("D", 5, 21, asymmetric_only=True)
    assert sorted(l.labels for l, _ in rows) == [
        (0, 0, 0, 0, 1),
        (0, 0, 0, 1, 0),
    ]
    assert all(d == 16 for _, d in rows)


def test_enumerate_e6():
    rows = enumerate_irreps_below("E6", 6, 27, asymmetric_only=True)
    assert sorted(l.labels for l, _ in rows) == [
        (0, 0, 0, 0, 1, 0),
        (1, 0, 0, 0, 0, 0),
    ]
    assert all(d == 27 for _, d in rows)


def test_enumeration_without_filter_includes_symmetric():
    rows = enumerate_irreps_below("A", 5, 20, asymmetric_only=False)
    found = {l.labels: d for l, d in rows}
    assert found[(0, 0, 1, 0, 0)] == 20


def test_growth_factor_lower_bound():
    rng = random.Random(6)
    cases = [("A", 5), ("A", 3), ("D", 4), ("D", 5), ("E6", 6)]
    for _ in range(100):
        diagram, rank = rng.choice(cases)
        labels = [rng.randint(0, 2) for _ in range(rank)]
        if not any(labels):
            labels[rng.randrange(rank)] = 1
        base = weyl_dimension(DynkinLabeling(diagram, rank, tuple(labels)))
        pos = rng.randrange(rank)
        a = labels[pos]
        bumped = list(labels)
        bumped[pos] += 1
        new = weyl_dimension(DynkinLabeling(diagram, rank, tuple(bumped)))
        assert new * (a + 1) >= base * (a + 2)


def test_dual_labeling_has_equal_dimension():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(2, 6)
        lab = tuple(rng.randint(0, 2) for _ in range(n))
        if not any(lab):
            continue
        assert weyl_dimension(DynkinLabeling("A", n, lab)) == weyl_dimension(
            DynkinLabeling("A", n, lab[::-1])
        )
    for _ in range(10):
        lab = [rng.randint(0, 2) for _ in range(6)]
        if not any(lab):
            continue
        flipped = (lab[4], lab[3], lab[2], lab[1], lab[0], lab[5])
        assert weyl_dimension(E6(*lab)) == weyl_dimension(E6(*flipped))


def test_parse_diagram():
    assert parse_diagram("A5") == ("A", 5)
    assert parse_diagram("d4") == ("D", 4)
    assert parse_diagram("E6") == ("E6", 6)
    with pytest.raises(ValueError):
        parse_diagram("B3")


def test_cartan_matrix_shapes():
    c = cartan_matrix("E6", 6)
    assert c[2][5] == -1 and c[5][2] == -1
    assert sum(row.count(-1) for row in c) == 10  # 5 edges
    with pytest.raises(ValueError):
        cartan_matrix("Z", 3)


def test_labeling_validation():
    with pytest.raises(ValueError):
        DynkinLabeling("E6", 5, (0,) * 5)
    with pytest.raises(ValueError):
        DynkinLabeling("A", 3, (1, -1, 0))
    with pytest.raises(ValueError):
        DynkinLabeling("A", 3, (1, 0))
