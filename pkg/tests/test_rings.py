from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from crystalline.rings import (
    SUPPORTED_CONDUCTORS,
    FracScalar,
    RingAut,
    RingSpec,
    RingValidationError,
    cyclotomic_polynomial,
    frac_div,
)

RINGS = [RingSpec.integers()] + [RingSpec.cyclotomic(n) for n in SUPPORTED_CONDUCTORS]


def elements(ring, bound=6):
    return st.lists(st.integers(-bound, bound), min_size=ring.rank, max_size=ring.rank).map(ring.element)


def nonzero(ring):
    return elements(ring).filter(lambda x: not x.is_zero())


@pytest.mark.parametrize("n,coeffs", [(3, [1, 1, 1]), (4, [1, 0, 1]), (8, [1, 0, 0, 0, 1]),
                                      (12, [1, 0, -1, 0, 1]), (5, [1, 1, 1, 1, 1])])
def test_cyclotomic_polynomials(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.label)
def test_structure_tables_validate(ring):
    ring.validate()


def test_gaussian_basics():
    D = RingSpec.cyclotomic(4)
    i = D.gen()
    assert i * i == -D.one()
    assert str(D.parse("(1+i)^2")) == "2*i"
    assert str(D.parse("1-i")) == "1-i"
    norm, cof = D.parse("1+i").norm_and_cofactor()
    assert norm == 2 and str(cof) == "1-i"


def test_eisenstein_basics():
    D = RingSpec.cyclotomic(3)
    w = D.gen()
    assert w ** 3 == D.one()
    assert 1 + w + w * w == D.zero()
    assert str(w * w) == "-1-w"


@pytest.mark.parametrize("ring", RINGS[1:], ids=lambda r: r.label)
def test_ring_axioms(ring):
    @settings(max_examples=30, deadline=None)
    @given(elements(ring), elements(ring), elements(ring))
    def check(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == ring.zero()
        assert a * ring.one() == a

    check()


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.label)
def test_norm_cofactor(ring):
    @settings(max_examples=30, deadline=None)
    @given(nonzero(ring))
    def check(a):
        norm, cof = a.norm_and_cofactor()
        assert norm > 0
        assert a * cof == ring.one() * norm

    check()


@pytest.mark.parametrize("ring", RINGS[1:], ids=lambda r: r.label)
def test_fraction_field(ring):
    @settings(max_examples=25, deadline=None)
    @given(elements(ring), nonzero(ring), nonzero(ring))
    def check(a, b, c):
        q = frac_div(a, b)
        assert q * b == FracScalar.lift(a)
        assert (q / c) * c == q
        assert q.den > 0
        assert FracScalar.lift(b).inverse() * b == FracScalar.lift(ring.one())

    check()


def test_frac_formatting():
    D = RingSpec.cyclotomic(4)
    i = D.gen()
    assert str(frac_div(D.one(), D.parse("1+i"))) == "(1-i)/2"
    assert str(frac_div(i, D.one() * 2)) == "i/2"
    assert str(frac_div(-i, D.one() * 2)) == "-i/2"
    assert frac_div(D.one() * 2, D.one() * 2).is_one()


def test_integer_division_matches_fraction():
    Z = RingSpec.integers()
    q = frac_div(Z.element(6), Z.element(-4))
    assert Fraction(q.num.coords[0], q.den) == Fraction(-3, 2)


@pytest.mark.parametrize("n", SUPPORTED_CONDUCTORS)
def test_galois_group_is_units_mod_n(n):
    D = RingSpec.cyclotomic(n)
    auts = {k: RingAut.galois(D, k) for k in range(1, n) if Fraction(k, n).denominator == n}
    for a in auts.values():
        a.validate()
    for j, a in auts.items():
        for k, b in auts.items():
            assert a.compose(b) == auts[(j * k) % n]


@pytest.mark.parametrize("ring", RINGS[1:], ids=lambda r: r.label)
def test_automorphisms_multiplicative(ring):
    conj = RingAut.from_name(ring, "conj")

    @settings(max_examples=20, deadline=None)
    @given(elements(ring), elements(ring))
    def check(a, b):
        assert conj.apply(a * b) == conj.apply(a) * conj.apply(b)
        assert conj.apply(conj.apply(a)) == a

    check()


def test_bad_automorphisms_rejected():
    D = RingSpec.cyclotomic(4)
    with pytest.raises(RingValidationError):
        RingAut.from_matrix(D, [[2, 0], [0, 1]]).validate()
    with pytest.raises(RingValidationError):
        RingAut.from_matrix(D, [[1, 0], [1, 1]]).validate()
    with pytest.raises(RingValidationError):
        RingAut.galois(RingSpec.cyclotomic(8), 2)
    with pytest.raises(RingValidationError):
        RingAut.from_name(D, "frobenius")


def test_unsupported_conductor():
    with pytest.raises(RingValidationError):
        RingSpec.cyclotomic(7)
