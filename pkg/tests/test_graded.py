import pytest
from hypothesis import given, settings, strategies as st

from crystalline.catalog import CATALOG, catalog_spec
from crystalline.expr import ExpressionError
from crystalline.graded import StructuralUnavailableError
from crystalline.rings import FracScalar

NAMES = list(CATALOG)


def graded_elements(A, max_terms=3):
    coeff = st.lists(st.integers(-3, 3), min_size=A.ring.rank, max_size=A.ring.rank).map(A.ring.element)
    term = st.tuples(st.sampled_from(list(A.group.elements)), coeff)
    return st.lists(term, max_size=max_terms).map(lambda ts: A.element(dict(ts)))


@pytest.mark.parametrize("name", NAMES)
def test_associativity_and_unit(name):
    A = catalog_spec(name).build()

    @settings(max_examples=15, deadline=None)
    @given(graded_elements(A), graded_elements(A), graded_elements(A))
    def check(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert A.one() * a == a == a * A.one()

    check()


@pytest.mark.parametrize("name", NAMES)
def test_base_element_inverses(name):
    A = catalog_spec(name).build()
    for x in A.group.elements:
        left = A.u_inverse(x)
        assert left * A.u(x) == A.one()
        assert A.u(x) * left == A.one()
        assert A.u_inverse_right(x) == left


@pytest.mark.parametrize("name", NAMES)
def test_conjugation_closed_form(name):
    A = catalog_spec(name).build()

    @settings(max_examples=10, deadline=None)
    @given(graded_elements(A), st.sampled_from(list(A.group.elements)))
    def check(z, x):
        A.conjugate(x, z)

    check()


def test_twist_rule_and_table():
    C2 = catalog_spec("gaussian_c2_conj").build()
    assert str(C2.parse("u[x]") * C2.parse("i*u[e]")) == "-i*u[x]"
    Q = catalog_spec("quaternion").build()
    assert str(Q.parse("u[a]") * Q.parse("u[b]")) == "u[c]"
    assert str(Q.parse("u[b]") * Q.parse("u[a]")) == "-u[c]"
    assert str(Q.parse("u[a]") * Q.parse("u[a]")) == "-u[e]"


def test_parse_format_round_trip():
    A = catalog_spec("gaussian_c4_twisted").build()
    for text in ["(1-i)*u[x] + 2*u[e]", "-u[x3]", "i*u[x2] - u[x]", "3", "i"]:
        z = A.parse(text)
        assert A.parse(A.format(z)) == z
    # (1+i) sigma_x(1-i) = (1+i)^2
    assert A.format(A.parse("(1+i)*u[x]*(1-i)")) == "2*i*u[x]"
    assert A.format(A.parse("0*u[x]")) == "0"


def test_parse_errors():
    A = catalog_spec("quaternion").build()
    with pytest.raises(KeyError):
        A.parse("u[zz]")
    with pytest.raises(ExpressionError):
        A.parse("u[a] +")
    with pytest.raises((ExpressionError, ValueError)):
        A.parse("q*u[a]")


@pytest.mark.parametrize("name", [n for n in NAMES if n != "z_s3_coboundary"])
def test_ray_class_sums_commute_with_w(name):
    A = catalog_spec(name).build()
    W = list(A.cocycle.W)
    for i, (cls, v) in enumerate(A.ray_class_sums()):
        for x in W:
            assert A.conjugate_class_sum(x, i) == v


def test_ray_class_sums_refuse_without_urc():
    A = catalog_spec("z_s3_coboundary").build()
    with pytest.raises(StructuralUnavailableError):
        A.ray_class_sums()


def test_vector_round_trip():
    A = catalog_spec("eisenstein_s3").build()
    z = A.parse("w*u[g] + (-1-w)*u[g2] + 3")
    assert A.from_vector(A.to_vector(z)) == z
    with pytest.raises(ValueError):
        A.to_vector(A.element({0: FracScalar.make(A.ring.one(), 2)}))
