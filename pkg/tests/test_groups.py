import pytest

from crystalline.groups import GROUP_CATALOG, GroupValidationError, validate_group

ORDERS = {"C2": 2, "C4": 4, "V4": 4, "C2xC4": 8, "S3": 6, "D4": 8, "Q8": 8}
CLASS_COUNTS = {"C2": 2, "C4": 4, "V4": 4, "C2xC4": 8, "S3": 3, "D4": 5, "Q8": 5}


@pytest.mark.parametrize("name", sorted(GROUP_CATALOG))
def test_catalog_groups(name):
    G = GROUP_CATALOG[name]()
    assert G.order == ORDERS[name]
    assert len(G.conjugacy_classes()) == CLASS_COUNTS[name]
    # revalidate from the raw table
    validate_group(G.table, G.names)
    for g in G.elements:
        assert G.mul(g, G.inv(g)) == G.identity


def test_s3_queries():
    G = GROUP_CATALOG["S3"]()
    g, t = G.index("g"), G.index("t")
    assert not G.is_abelian
    assert G.fmt(G.centralizer(t)) == "{e, t}"
    assert G.fmt(G.conjugacy_class(g)) == "{g, g2}"
    A3 = G.subgroup([G.index(x) for x in ("e", "g", "g2")])
    assert G.is_normal(A3)
    assert len(G.cosets(A3)) == 2
    assert len(G.conjugacy_class(t, by=A3)) == 3
    assert G.conjugacy_classes(within=list(A3)) == [(0,), (g,), (G.index("g2"),)]
    assert len(G.normalizer_of_set([g])) == 3
    assert len(G.normalizer_of_set([g, G.index("g2")])) == 6
    assert len(G.normalizer_of_set([t])) == 2


def test_d4_normalizer_of_rotation_pair():
    G = GROUP_CATALOG["D4"]()
    r, r3 = G.index("r"), G.index("r3")
    assert len(G.normalizer_of_set([r, r3])) == 8
    assert len(G.normalizer_of_set([r])) == 4


def test_kernel_must_be_normal():
    G = GROUP_CATALOG["S3"]()
    keep = {G.index("e"), G.index("t")}
    with pytest.raises(AssertionError):
        G.kernel_of_map(lambda h: h in keep)


@pytest.mark.parametrize("table,kind", [
    ([[0, 1], [1, 1]], "latin"),
    ([[0, 1], [0]], "shape"),
    ([[0, 2, 1], [2, 1, 0], [1, 0, 2]], "identity"),
    ([[0, 1, 2], [1, 0, 2], [2, 2, 0]], "latin"),
])
def test_invalid_tables(table, kind):
    with pytest.raises(GroupValidationError) as exc:
        validate_group(table)
    assert exc.value.kind == kind


def test_nonassociative_latin_square():
    # a loop of order 5 whose identity is 0 but which is not associative
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupValidationError) as exc:
        validate_group(table)
    assert exc.value.kind == "associativity"
    assert len(exc.value.witness) == 3
