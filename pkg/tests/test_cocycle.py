from itertools import product

import pytest

from crystalline.catalog import CATALOG, catalog_spec, coboundary
from crystalline.cocycle import CocycleTable, CocycleValidationError, Twist, find_violation, validate_cocycle
from crystalline.groups import GROUP_CATALOG
from crystalline.rings import RingAut, RingSpec


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_entries_validate(name):
    spec = catalog_spec(name)
    assert find_violation(spec.group, spec.ring, spec.twist, spec.table) is None


def test_quaternion_mutation_reports_triple():
    spec = catalog_spec("quaternion")
    G = spec.group
    bad = spec.table.replace(G.index("a"), G.index("b"), -spec.ring.one())
    with pytest.raises(CocycleValidationError) as exc:
        validate_cocycle(G, spec.ring, spec.twist, bad)
    v = exc.value.violation
    assert v.identity == "cocycle"
    assert len(v.witness) == 3
    # the reported triple really violates the identity
    g, h, t = (G.index(x) for x in v.witness)
    a = bad.alpha
    assert a[g][h] * a[G.mul(g, h)][t] != spec.twist[g].apply(a[h][t]) * a[g][G.mul(h, t)]


def test_normalization_violation():
    spec = catalog_spec("z_s3")
    G = spec.group
    bad = spec.table.replace(G.index("g"), G.identity, -spec.ring.one())
    v = find_violation(G, spec.ring, spec.twist, bad)
    assert v.identity == "normalization" and v.witness == ("g", "e")


def test_twist_must_be_homomorphism():
    G = GROUP_CATALOG["C4"]()
    D = RingSpec.cyclotomic(4)
    conj = RingAut.from_name(D, "conj")
    ident = RingAut.identity(D)
    tw = Twist((ident, conj, conj, conj))  # sigma_x2 should be the identity
    v = find_violation(G, D, tw, CocycleTable.trivial(G, D))
    assert v.identity == "twist-homomorphism"


def test_unfixed_square_on_c2_rejected():
    # alpha(x,x) must be fixed by sigma_x
    G = GROUP_CATALOG["C2"]()
    D = RingSpec.cyclotomic(4)
    tw = Twist((RingAut.identity(D), RingAut.from_name(D, "conj")))
    bad = CocycleTable.trivial(G, D).replace(1, 1, D.gen())
    v = find_violation(G, D, tw, bad)
    assert v is not None and v.identity in ("cocycle", "inverse-normalization")


def test_coboundaries_are_cocycles():
    G = GROUP_CATALOG["C4"]()
    D = RingSpec.cyclotomic(4)
    conj = RingAut.from_name(D, "conj")
    tw = Twist(tuple(RingAut.identity(D) if g in (0, 2) else conj for g in G.elements))
    for beta in ({"x2": D.gen()}, {"x": D.gen()}, {"x": D.parse("1+i")}):
        try:
            table = coboundary(G, tw, beta)
        except ValueError:
            continue  # beta not a unit: the rescaled table leaves D
        assert find_violation(G, D, tw, table) is None


def test_regularity_sets(algebras):
    def names(A, elems):
        return {A.group.names[g] for g in elems}

    q = algebras["quaternion"].cocycle.regularity()
    assert names(algebras["quaternion"], q.W) == {"e", "a", "b", "c"}
    assert names(algebras["quaternion"], q.W_reg) == {"e"}
    tw = algebras["gaussian_c4_twisted"].cocycle.regularity()
    assert names(algebras["gaussian_c4_twisted"], tw.W) == {"e", "x2"}
    assert names(algebras["gaussian_c4_twisted"], tw.G_reg_elements) == {"e"}
    cob = algebras["z_s3_coboundary"].cocycle.regularity()
    assert not cob.urc_holds
    assert names(algebras["z_s3_coboundary"], cob.W_reg) == {"e", "g", "g2"}


def test_abelian_f_is_commutator_ratio(algebras):
    A = algebras["gaussian_c4_twisted"]
    cc = A.cocycle
    G = A.group
    x2, x = G.index("x2"), G.index("x")
    assert str(cc.f(x2, x)) == "-1"
    for g, h in product(G.elements, repeat=2):
        assert cc.f(g, h) * cc.alpha(h, g) == cc.alpha(g, h)


@pytest.mark.parametrize("name", list(CATALOG))
def test_inverse_identities(name, algebras):
    cc = algebras[name].cocycle
    assert cc.inverse_identity_check("xg") is None


def test_gx_inverse_identity_has_counterexamples(algebras):
    assert algebras["gaussian_c4_twisted"].cocycle.inverse_identity_check("gx") is not None
    assert algebras["z_s3"].cocycle.inverse_identity_check("gx") is None


@pytest.mark.parametrize("name", list(CATALOG))
def test_coset_identity(name, algebras):
    assert algebras[name].cocycle.coset_identity_check() is None


def test_f_values_under_sign_coboundary(algebras):
    cc = algebras["z_s3_coboundary"].cocycle
    G = cc.group
    assert str(cc.f(G.index("g"), G.index("t"))) == "-1"
    assert cc.check_urc() == (False, (G.index("g"), G.index("t")))
