"""The twist sigma and the 2-cocycle alpha of a crystalline graded ring.

Products in the ring obey ``u_g r = sigma_g(r) u_g`` and
``u_g u_h = alpha(g, h) u_{gh}``. Everything here is checked exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from .groups import GroupTable, SubgroupSet
from .rings import FracScalar, RingAut, RingElement, RingSpec, RingValidationError, frac_div

__all__ = [
    "Twist",
    "CocycleTable",
    "Cocycle",
    "Violation",
    "CocycleValidationError",
    "RegularitySets",
    "find_violation",
    "validate_cocycle",
]


@dataclass(frozen=True)
class Violation:
    identity: str
    witness: tuple[str, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.identity} fails at ({', '.join(self.witness)}): {self.detail}"


class CocycleValidationError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class Twist:
    auts: tuple[RingAut, ...]

    def __getitem__(self, g: int) -> RingAut:
        return self.auts[g]

    @classmethod
    def trivial(cls, group: GroupTable, ring: RingSpec) -> Twist:
        ident = RingAut.identity(ring)
        return cls(tuple(ident for _ in group.elements))


@dataclass(frozen=True)
class CocycleTable:
    alpha: tuple[tuple[RingElement, ...], ...]

    def __getitem__(self, gh: tuple[int, int]) -> RingElement:
        return self.alpha[gh[0]][gh[1]]

    @classmethod
    def trivial(cls, group: GroupTable, ring: RingSpec) -> CocycleTable:
        one = ring.one()
        return cls(tuple(tuple(one for _ in group.elements) for _ in group.elements))

    def replace(self, g: int, h: int, value: RingElement) -> CocycleTable:
        rows = [list(r) for r in self.alpha]
        rows[g][h] = value
        return CocycleTable(tuple(tuple(r) for r in rows))


def find_violation(group: GroupTable, ring: RingSpec, twist: Twist,
                   table: CocycleTable) -> Violation | None:
    """First failing identity, or None when (sigma, alpha) is valid."""
    n = group.order
    nm = group.names
    e = group.identity
    if len(twist.auts) != n:
        return Violation("shape", (), f"twist has {len(twist.auts)} entries for a group of order {n}")
    if len(table.alpha) != n or any(len(r) != n for r in table.alpha):
        return Violation("shape", (), f"cocycle table is not {n}x{n}")
    for g in group.elements:
        try:
            twist[g].validate()
        except RingValidationError as exc:
            return Violation("automorphism", (nm[g],), str(exc))
    if not twist[e].is_identity():
        return Violation("twist-identity", (nm[e],), "sigma_e is not the identity")
    for g, h in product(group.elements, repeat=2):
        if twist[g].compose(twist[h]) != twist[group.mul(g, h)]:
            return Violation("twist-homomorphism", (nm[g], nm[h]),
                             "sigma_g sigma_h != sigma_gh")
    alpha = table.alpha
    one = ring.one()
    for g, h in product(group.elements, repeat=2):
        if alpha[g][h].is_zero():
            return Violation("nonzero", (nm[g], nm[h]), "alpha(g,h) = 0")
    for g in group.elements:
        if alpha[g][e] != one:
            return Violation("normalization", (nm[g], nm[e]), f"alpha(g,e) = {alpha[g][e]} != 1")
        if alpha[e][g] != one:
            return Violation("normalization", (nm[e], nm[g]), f"alpha(e,g) = {alpha[e][g]} != 1")
    for g, h, t in product(group.elements, repeat=3):
        gh = group.mul(g, h)
        ht = group.mul(h, t)
        lhs = alpha[g][h] * alpha[gh][t]
        rhs = twist[g].apply(alpha[h][t]) * alpha[g][ht]
        if lhs != rhs:
            return Violation("cocycle", (nm[g], nm[h], nm[t]),
                             f"alpha(g,h)alpha(gh,t) = {lhs} but sigma_g(alpha(h,t))alpha(g,ht) = {rhs}")
    basis = ring.basis()
    for g, h in product(group.elements, repeat=2):
        gh = group.mul(g, h)
        for k, r in enumerate(basis):
            lhs = twist[g].apply(twist[h].apply(r)) * alpha[g][h]
            rhs = alpha[g][h] * twist[gh].apply(r)
            if lhs != rhs:
                return Violation("twisted-commutation", (nm[g], nm[h], ring.basis_names[k]),
                                 f"{lhs} != {rhs}")
    for g in group.elements:
        gi = group.inv(g)
        if alpha[g][gi] != twist[g].apply(alpha[gi][g]):
            return Violation("inverse-normalization", (nm[g], nm[gi]),
                             "alpha(g,g^-1) != sigma_g(alpha(g^-1,g))")
    return None


def validate_cocycle(group: GroupTable, ring: RingSpec, twist: Twist, table: CocycleTable) -> Cocycle:
    bad = find_violation(group, ring, twist, table)
    if bad is not None:
        raise CocycleValidationError(bad)
    return Cocycle(group, ring, twist, table)


@dataclass(frozen=True)
class RegularitySets:
    W: tuple[int, ...]
    W_reg: tuple[int, ...]
    G_reg_elements: tuple[int, ...]
    W_reg_commuting: tuple[int, ...]
    G_reg_commuting: tuple[int, ...]
    urc_holds: bool
    urc_witness: tuple[int, int] | None


class Cocycle:
    """A validated pair (sigma, alpha). Build through :func:`validate_cocycle`."""

    def __init__(self, group: GroupTable, ring: RingSpec, twist: Twist, table: CocycleTable):
        self.group = group
        self.ring = ring
        self.twist = twist
        self.table = table

    def alpha(self, g: int, h: int) -> RingElement:
        return self.table.alpha[g][h]

    def sigma(self, g: int) -> RingAut:
        return self.twist.auts[g]

    @cached_property
    def _f(self) -> tuple[tuple[FracScalar, ...], ...]:
        G = self.group
        return tuple(tuple(frac_div(self.alpha(x, s), self.alpha(G.conj(x, s), x))
                           for s in G.elements) for x in G.elements)

    def f(self, x: int, s: int) -> FracScalar:
        """alpha(x,s) / alpha(x s x^-1, x); u_x u_s = f(x,s) u_{xsx^-1} u_x."""
        return self._f[x][s]

    @cached_property
    def W(self) -> SubgroupSet:
        return self.group.kernel_of_map(lambda g: self.sigma(g).is_identity())

    @cached_property
    def fixed_ring(self):
        from .lattice import invariant_sublattice

        return invariant_sublattice(self.twist.auts)

    def commuting_regular(self, scope: Sequence[int]) -> tuple[int, ...]:
        """Elements g of scope with alpha(x,g) = alpha(g,x) for all x in C_scope(g)."""
        return tuple(g for g in scope
                     if all(self.alpha(x, g) == self.alpha(g, x)
                            for x in self.group.centralizer(g, within=scope)))

    def f_regular(self, scope: Sequence[int], candidates: Sequence[int] | None = None) -> tuple[int, ...]:
        """Elements g with f(x,g) = 1 for every x in scope."""
        cands = scope if candidates is None else candidates
        return tuple(g for g in cands if all(self.f(x, g).is_one() for x in scope))

    def check_urc(self) -> tuple[bool, tuple[int, int] | None]:
        """f(x,s) = 1 for every regular s of W and every x in W."""
        W = tuple(self.W)
        for s in self.commuting_regular(W):
            for x in W:
                if not self.f(x, s).is_one():
                    return False, (x, s)
        return True, None

    def regularity(self) -> RegularitySets:
        G = tuple(self.group.elements)
        W = tuple(self.W)
        ok, wit = self.check_urc()
        return RegularitySets(
            W=W,
            W_reg=self.f_regular(W),
            G_reg_elements=self.f_regular(G),
            W_reg_commuting=self.commuting_regular(W),
            G_reg_commuting=self.commuting_regular(G),
            urc_holds=ok,
            urc_witness=wit,
        )

    def crossed_hom_check(self, g: int) -> tuple[bool, tuple[int, int] | None]:
        """f(g,xy) = f(g,x) sigma_x(f(g,y)) for all x, y."""
        G = self.group
        for x, y in product(G.elements, repeat=2):
            lhs = self.f(g, G.mul(x, y))
            rhs = self.f(g, x) * self.sigma(x).apply(self.f(g, y))
            if lhs != rhs:
                return False, (x, y)
        return True, None

    def inverse_identity_check(self, variant: str) -> tuple[int, int] | None:
        """First (g, x) violating the base-element inverse identity, or None.

        ``gx``: alpha(gx, x) sigma_{xgx^-1}(alpha(x,x^-1)^-1) = alpha(xgx^-1, x)^-1.
        ``xg``: alpha(xg, x^-1) sigma_{xgx^-1}(alpha(x,x^-1)^-1) = alpha(xgx^-1, x)^-1,
        the form that follows from the cocycle relation at (xg, x^-1, x). Only
        this one holds for every cocycle.
        """
        G = self.group
        for g, x in product(G.elements, repeat=2):
            xi = G.inv(x)
            h = G.conj(x, g)
            if variant == "gx":
                first = self.alpha(G.mul(g, x), x)
            elif variant == "xg":
                first = self.alpha(G.mul(x, g), xi)
            else:
                raise ValueError(variant)
            inv_a = FracScalar.lift(self.alpha(x, xi)).inverse()
            lhs = FracScalar.lift(first) * self.sigma(h).apply(inv_a)
            rhs = FracScalar.lift(self.alpha(h, x)).inverse()
            if lhs != rhs:
                return g, x
        return None

    def coset_identity_check(self) -> tuple[int, int, int] | None:
        """f(kx,g) = f(x,g) f(k, xgx^-1) for k, g in W and x in G; first failing (k, x, g)."""
        G = self.group
        for k, g in product(self.W, repeat=2):
            for x in G.elements:
                if self.f(G.mul(k, x), g) != self.f(x, g) * self.f(k, G.conj(x, g)):
                    return k, x, g
        return None

    def conjugation_closure_check(self) -> tuple[int, int] | None:
        """x s x^-1 in W_reg for x in G, s in W_reg; first failing (x, s)."""
        W_reg = set(self.f_regular(tuple(self.W)))
        for x in self.group.elements:
            for s in W_reg:
                if self.group.conj(x, s) not in W_reg:
                    return x, s
        return None

    def coset_constancy_check(self) -> tuple[int, int, int] | None:
        """x -> f(x,g) is constant on cosets of W for g in W_reg; first failing (g, x, kx)."""
        G = self.group
        for g in self.f_regular(tuple(self.W)):
            for coset in G.cosets(self.W):
                ref = self.f(coset[0], g)
                for z in coset[1:]:
                    if self.f(z, g) != ref:
                        return g, coset[0], z
        return None
