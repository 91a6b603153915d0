"""Shipped example rings."""

from __future__ import annotations

from typing import Callable, Mapping

from .cocycle import CocycleTable, Twist
from .fileformat import RingSpecFile
from .groups import GROUP_CATALOG, GroupTable
from .rings import FracScalar, RingAut, RingElement, RingSpec

__all__ = ["CATALOG", "catalog_names", "catalog_spec", "coboundary"]


def _twist(group: GroupTable, ring: RingSpec, auts: Mapping[str, str]) -> Twist:
    return Twist(tuple(RingAut.from_name(ring, auts.get(g, "identity")) for g in group.names))


def _table(group: GroupTable, ring: RingSpec, entries: Mapping[tuple[str, str], int | str]) -> CocycleTable:
    rows = []
    for g in group.names:
        row = []
        for h in group.names:
            v = entries.get((g, h), 1)
            row.append(ring.parse(v) if isinstance(v, str) else ring.one() * v)
        rows.append(tuple(row))
    return CocycleTable(tuple(rows))


def coboundary(group: GroupTable, twist: Twist, beta: Mapping[str, RingElement],
               base: CocycleTable | None = None) -> CocycleTable:
    """alpha'(g,h) = beta_g sigma_g(beta_h) beta_gh^-1 alpha(g,h); entries must stay in D."""
    ring = next(iter(beta.values())).ring
    base = base or CocycleTable.trivial(group, ring)
    b = [beta.get(name, ring.one()) for name in group.names]
    rows = []
    for g in group.elements:
        row = []
        for h in group.elements:
            val = FracScalar.lift(b[g] * twist[g].apply(b[h]) * base.alpha[g][h]) / b[group.mul(g, h)]
            row.append(val.to_ring())
        rows.append(tuple(row))
    return CocycleTable(tuple(rows))


def _quaternion() -> RingSpecFile:
    G = GROUP_CATALOG["V4"]()
    D = RingSpec.integers()
    alpha = _table(G, D, {("a", "a"): -1, ("b", "b"): -1, ("c", "c"): -1,
                          ("a", "b"): 1, ("b", "a"): -1, ("a", "c"): -1,
                          ("c", "a"): 1, ("b", "c"): 1, ("c", "b"): -1})
    return RingSpecFile("quaternion", "Lipschitz quaternion order Z<i,j,k> as Z <> V4 with u_a^2=u_b^2=u_c^2=-1",
                        G, D, Twist.trivial(G, D), alpha)


def _group_ring(group: str, name: str, description: str) -> Callable[[], RingSpecFile]:
    def build() -> RingSpecFile:
        G = GROUP_CATALOG[group]()
        D = RingSpec.integers()
        return RingSpecFile(name, description, G, D, Twist.trivial(G, D), CocycleTable.trivial(G, D))
    return build


def _skew(name: str, description: str, group: str, conductor: int,
          auts: Mapping[str, str], beta: Mapping[str, str] | None = None) -> Callable[[], RingSpecFile]:
    def build() -> RingSpecFile:
        G = GROUP_CATALOG[group]()
        D = RingSpec.cyclotomic(conductor)
        tw = _twist(G, D, auts)
        if beta:
            table = coboundary(G, tw, {k: D.parse(v) for k, v in beta.items()})
        else:
            table = CocycleTable.trivial(G, D)
        return RingSpecFile(name, description, G, D, tw, table)
    return build


def _z_s3_coboundary() -> RingSpecFile:
    G = GROUP_CATALOG["S3"]()
    D = RingSpec.integers()
    tw = Twist.trivial(G, D)
    return RingSpecFile(
        "z_s3_coboundary",
        "Z[S3] rescaled by u'_t = -u_t: a coboundary cocycle for which the URC fails on W = S3",
        G, D, tw, coboundary(G, tw, {"t": -D.one()}))


CATALOG: dict[str, Callable[[], RingSpecFile]] = {
    "quaternion": _quaternion,
    "z_s3": _group_ring("S3", "z_s3", "integral group ring Z[S3]"),
    "z_q8": _group_ring("Q8", "z_q8", "integral group ring Z[Q8]"),
    "gaussian_c2_conj": _skew("gaussian_c2_conj", "skew group ring Z[i] <> C2, sigma_x = conj",
                              "C2", 4, {"x": "conj"}),
    "gaussian_c4_conj": _skew("gaussian_c4_conj", "skew group ring Z[i] <> C4, sigma_x = conj",
                              "C4", 4, {"x": "conj", "x3": "conj"}),
    "gaussian_c4_twisted": _skew("gaussian_c4_twisted",
                                 "Z[i] <> C4, sigma_x = conj, alpha the coboundary of beta_{x2} = i",
                                 "C4", 4, {"x": "conj", "x3": "conj"}, {"x2": "i"}),
    "eisenstein_s3": _skew("eisenstein_s3", "Z[w] <> S3, transpositions act by conj, W = A3",
                           "S3", 3, {"t": "conj", "tg": "conj", "tg2": "conj"}),
    "zeta8_v4_galois": _skew("zeta8_v4_galois", "Z[zeta_8] <> V4 with V4 acting as the full Galois group",
                             "V4", 8, {"a": "galois(3)", "b": "galois(5)", "c": "galois(7)"}),
    "zeta8_v4_partial": _skew("zeta8_v4_partial", "Z[zeta_8] <> V4, sigma_a = id, sigma_b = sigma_c = galois(5)",
                              "V4", 8, {"b": "galois(5)", "c": "galois(5)"}),
    "zeta8_v4_twisted": _skew("zeta8_v4_twisted",
                              "Z[zeta_8] <> V4, sigma_b = sigma_c = galois(5), alpha the coboundary of beta_a = z",
                              "V4", 8, {"b": "galois(5)", "c": "galois(5)"}, {"a": "z"}),
    "gaussian_d4": _skew("gaussian_d4", "Z[i] <> D4, reflections act by conj, W = <r>",
                         "D4", 4, {"s": "conj", "sr": "conj", "sr2": "conj", "sr3": "conj"}),
    "gaussian_c2xc4": _skew("gaussian_c2xc4", "Z[i] <> (C2 x C4), sigma_a = conj, W = <x>",
                            "C2xC4", 4, {n: "conj" for n in ("a", "ax", "ax2", "ax3")}),
    "z_s3_coboundary": _z_s3_coboundary,
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def catalog_spec(name: str) -> RingSpecFile:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None
