import itertools

import pytest

from tools.algebra import (
    build_affine_plane,
    build_field,
    decompose_hamilton_paths,
    is_irreducible,
    is_prime_power,
    prime_power,
    smallest_irreducible,
)
from tools.errors import ParameterError, UnsupportedOrderError


@pytest.mark.parametrize("q, expected", [(2, (2, 1)), (4, (2, 2)), (9, (3, 2)), (27, (3, 3)), (7, (7, 1))])
def test_prime_power_factorisation(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize("q", [1, 6, 10, 12, 15])
def test_non_prime_powers_rejected(q):
    assert not is_prime_power(q)
    with pytest.raises(UnsupportedOrderError, match="not a prime power"):
        build_field(q)


def test_canonical_moduli():
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)
    assert smallest_irreducible(3, 2) == (1, 0, 1)
    assert not is_irreducible((1, 0, 1), 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms(q):
    F = build_field(q)
    elements = range(q)
    for a in elements:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a, b, c in itertools.product(elements, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        build_field(4).inv(0)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_affine_plane_incidence(q):
    plane = build_affine_plane(q)
    assert len(plane.classes) == q + 1
    for lines in plane.classes:
        assert sorted(p for line in lines for p in line) == list(range(q * q))
        assert all(len(line) == q for line in lines)
    for u, v in itertools.combinations(range(q * q), 2):
        through = [t for t, line in plane.lines() if u in line and v in line]
        assert through == [plane.class_joining(u, v)]


def test_class_joining_needs_two_points():
    with pytest.raises(ParameterError):
        build_affine_plane(3).class_joining(4, 4)


@pytest.mark.parametrize("r", range(1, 7))
def test_hamilton_paths_partition_k2r(r):
    decomposition = decompose_hamilton_paths(r)
    assert len(decomposition.paths) == r
    for path in decomposition.paths:
        assert sorted(path) == list(range(2 * r))
    owner = decomposition.path_of_edge()
    assert len(owner) == r * (2 * r - 1)
    ends = sorted(decomposition.path_ending_at(v) for v in range(2 * r))
    assert ends == sorted(list(range(r)) * 2)
