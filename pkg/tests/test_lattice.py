from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from crystalline.lattice import (
    Lattice,
    LatticeMismatchError,
    eigenlattice,
    hnf,
    invariant_sublattice,
    lattice_kernel,
)
from crystalline.rings import FracScalar, RingAut, RingSpec

small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def is_hnf(rows):
    last = -1
    for i, r in enumerate(rows):
        p = next(j for j, x in enumerate(r) if x)
        assert p > last and r[p] > 0
        for above in rows[:i]:
            assert 0 <= above[p] < r[p]
        last = p
    return True


@settings(max_examples=60, deadline=None)
@given(matrices(3, 4))
def test_hnf_shape_and_idempotence(rows):
    h = hnf(rows, 4)
    assert is_hnf(h) if h else True
    assert hnf(h, 4) == h
    assert Lattice.span(h, 4) == Lattice.span(rows, 4)


@settings(max_examples=40, deadline=None)
@given(matrices(2, 3))
def test_kernel_against_box_enumeration(mat):
    ker = lattice_kernel(mat, 3)
    for v in ker.basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in mat)
    # every small integer kernel vector lies in the computed lattice
    for v in product(range(-3, 4), repeat=3):
        if all(sum(a * b for a, b in zip(r, v)) == 0 for r in mat):
            assert ker.contains(v)


def test_kernel_is_saturated():
    ker = lattice_kernel([[2, 4]], 2)
    assert ker.basis == ((2, -1),)


@settings(max_examples=40, deadline=None)
@given(matrices(2, 3), matrices(2, 3))
def test_intersection_against_box(a, b):
    la, lb = Lattice.span(a, 3), Lattice.span(b, 3)
    meet = la & lb
    assert la.contains_lattice(meet) and lb.contains_lattice(meet)
    for v in product(range(-4, 5), repeat=3):
        if la.contains(v) and lb.contains(v):
            assert meet.contains(v)


def test_sum_and_equality():
    a = Lattice.span([[2, 0]], 2)
    b = Lattice.span([[0, 3]], 2)
    assert (a + b).basis == ((2, 0), (0, 3))
    assert Lattice.span([[4, 6], [2, 3]], 2) == Lattice.span([[2, 3]], 2)


def test_ambient_mismatch():
    with pytest.raises(LatticeMismatchError):
        Lattice.zero(2) + Lattice.zero(3)


def test_json_round_trip():
    lat = Lattice.span([[1, 2, 3], [0, 4, 5]], 3)
    assert Lattice.from_json(lat.to_json()) == lat


def test_gaussian_conj_fixed_ring():
    D = RingSpec.cyclotomic(4)
    assert invariant_sublattice([RingAut.from_name(D, "conj")]).basis == ((1, 0),)


def test_eigenlattices_of_conj():
    D = RingSpec.cyclotomic(4)
    conj = RingAut.from_name(D, "conj")
    assert eigenlattice(conj, -D.one()).basis == ((0, 1),)
    # conj(1-i) = 1+i = i(1-i)
    assert eigenlattice(conj, D.gen()).basis == ((1, -1),)
    assert eigenlattice(conj, FracScalar.make(D.one(), 2)).is_zero()


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12])
def test_eigenlattice_box_oracle(n):
    D = RingSpec.cyclotomic(n)
    conj = RingAut.from_name(D, "conj")
    for c in (D.gen(), -D.one(), D.one()):
        lat = eigenlattice(conj, c)
        for v in product(range(-1, 2), repeat=D.rank):
            d = D.element(v)
            assert lat.contains(v) == (conj.apply(d) == c * d)
