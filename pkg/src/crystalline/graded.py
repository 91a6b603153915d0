"""Arithmetic in A = D <>_{sigma,alpha} G and its extension K <>_{sigma,alpha} G."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .cocycle import Cocycle
from .expr import parse_expression
from .rings import FracScalar, RingElement

__all__ = [
    "CrystallineRing",
    "GradedElement",
    "RayClass",
    "StructuralUnavailableError",
    "ConjugationMismatchError",
]

Coeff = Union[RingElement, FracScalar]


class StructuralUnavailableError(ValueError):
    """A structural formula's hypothesis (URC, group type) does not hold."""


class ConjugationMismatchError(AssertionError):
    """Generic and closed-form conjugation disagree."""


def _normalize(c: Coeff) -> Coeff | None:
    if isinstance(c, FracScalar):
        if c.is_zero():
            return None
        return c.num if c.den == 1 else c
    return None if c.is_zero() else c


@dataclass(frozen=True, eq=False)
class GradedElement:
    """Sparse sum of ``coeff * u_g``, stored in group input order.

    Coefficients are ring elements, or fraction-field scalars for elements
    of K <> G (those only arise through :meth:`CrystallineRing.u_inverse`).
    """

    algebra: CrystallineRing
    terms: tuple[tuple[int, Coeff], ...]

    @classmethod
    def make(cls, algebra: CrystallineRing, coeffs: Mapping[int, Coeff] | Iterable[tuple[int, Coeff]]) -> GradedElement:
        acc: dict[int, Coeff] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for g, c in items:
            acc[g] = acc[g] + c if g in acc else c
        terms = []
        for g in sorted(acc):
            c = _normalize(acc[g])
            if c is not None:
                terms.append((g, c))
        return cls(algebra, tuple(terms))

    def coeff(self, g: int) -> Coeff:
        for h, c in self.terms:
            if h == g:
                return c
        return self.algebra.ring.zero()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(g for g, _ in self.terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, RingElement) for _, c in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other: object) -> GradedElement | None:
        if isinstance(other, GradedElement):
            return other
        if isinstance(other, (int, RingElement, FracScalar)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other: object) -> GradedElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GradedElement.make(self.algebra, list(self.terms) + list(o.terms))

    __radd__ = __add__

    def __neg__(self) -> GradedElement:
        return GradedElement(self.algebra, tuple((g, -c) for g, c in self.terms))

    def __sub__(self, other: object) -> GradedElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> GradedElement:
        return (-self) + other

    def __mul__(self, other: object) -> GradedElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.algebra.multiply(self, o)

    def __rmul__(self, other: object) -> GradedElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.algebra.multiply(o, self)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.support == o.support and all(a == b for (_, a), (_, b) in zip(self.terms, o.terms))

    def __str__(self) -> str:
        return self.algebra.format(self)

    def __repr__(self) -> str:
        return f"GradedElement({self})"


@dataclass(frozen=True)
class RayClass:
    elements: tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.elements[0]


class CrystallineRing:
    """The crystalline graded ring built on a validated cocycle."""

    def __init__(self, cocycle: Cocycle, name: str = "A"):
        self.cocycle = cocycle
        self.group = cocycle.group
        self.ring = cocycle.ring
        self.name = name

    # construction -------------------------------------------------------

    def u(self, x: int | str) -> GradedElement:
        if isinstance(x, str):
            x = self.group.index(x)
        return GradedElement(self, ((x, self.ring.one()),))

    def scalar(self, r: Coeff | int) -> GradedElement:
        if isinstance(r, int):
            r = self.ring.one() * r
        return GradedElement.make(self, {self.group.identity: r})

    def one(self) -> GradedElement:
        return self.u(self.group.identity)

    def element(self, coeffs: Mapping[int, Coeff]) -> GradedElement:
        return GradedElement.make(self, coeffs)

    # arithmetic ----------------------------------------------------------

    def multiply(self, a: GradedElement, b: GradedElement) -> GradedElement:
        """(r u_g)(s u_h) = r sigma_g(s) alpha(g,h) u_{gh}, extended bilinearly."""
        G = self.group
        out: list[tuple[int, Coeff]] = []
        for g, r in a.terms:
            sig = self.cocycle.sigma(g)
            for h, s in b.terms:
                out.append((G.mul(g, h), r * sig.apply(s) * self.cocycle.alpha(g, h)))
        return GradedElement.make(self, out)

    def u_inverse(self, x: int) -> GradedElement:
        """alpha(x^-1, x)^-1 u_{x^-1}."""
        xi = self.group.inv(x)
        c = FracScalar.lift(self.cocycle.alpha(xi, x)).inverse()
        return GradedElement.make(self, {xi: c})

    def u_inverse_right(self, x: int) -> GradedElement:
        """u_{x^-1} alpha(x, x^-1)^-1, the other displayed form."""
        xi = self.group.inv(x)
        c = FracScalar.lift(self.cocycle.alpha(x, xi)).inverse()
        return self.multiply(self.u(xi), self.scalar(c))

    def conjugate_generic(self, x: int, z: GradedElement) -> GradedElement:
        return self.multiply(self.multiply(self.u(x), z), self.u_inverse(x))

    def conjugate_closed_form(self, x: int, z: GradedElement) -> GradedElement:
        """sum_s sigma_x(r_s) f(x,s) u_{xsx^-1}."""
        G = self.group
        cc = self.cocycle
        return GradedElement.make(self, [(G.conj(x, s), cc.sigma(x).apply(r) * cc.f(x, s))
                                         for s, r in z.terms])

    def conjugate(self, x: int, z: GradedElement) -> GradedElement:
        generic = self.conjugate_generic(x, z)
        closed = self.conjugate_closed_form(x, z)
        if generic != closed:
            raise ConjugationMismatchError(
                f"u_x z u_x^-1 for x={self.group.names[x]}: generic {generic} vs closed {closed}")
        return generic

    def commutes(self, a: GradedElement, b: GradedElement) -> bool:
        return a * b == b * a

    def is_central(self, z: GradedElement) -> bool:
        gens = [self.scalar(r) for r in self.ring.basis()] + [self.u(x) for x in self.group.elements]
        return all(self.commutes(z, g) for g in gens)

    # ray classes --------------------------------------------------------

    def ray_classes(self) -> list[RayClass]:
        """W-conjugacy classes of the alpha-regular elements of W."""
        W = tuple(self.cocycle.W)
        regular = set(self.cocycle.commuting_regular(W))
        return [RayClass(c) for c in self.group.conjugacy_classes(within=W) if c[0] in regular]

    def class_sum(self, cls: RayClass | Sequence[int]) -> GradedElement:
        elems = cls.elements if isinstance(cls, RayClass) else tuple(cls)
        one = self.ring.one()
        return GradedElement.make(self, {g: one for g in elems})

    def ray_class_sums(self) -> list[tuple[RayClass, GradedElement]]:
        ok, wit = self.cocycle.check_urc()
        if not ok:
            x, s = wit
            raise StructuralUnavailableError(
                f"URC fails on W: f({self.group.names[x]}, {self.group.names[s]}) = "
                f"{self.cocycle.f(x, s)}; use the oracle")
        return [(c, self.class_sum(c)) for c in self.ray_classes()]

    def conjugate_class_sum(self, x: int, i: int) -> GradedElement:
        """u_x v_i u_x^-1 = sum_{g in C_i} f(x,g) u_{xgx^-1}, checked against the generic product."""
        cls, v = self.ray_class_sums()[i]
        G = self.group
        closed = GradedElement.make(self, [(G.conj(x, g), self.cocycle.f(x, g)) for g in cls.elements])
        generic = self.conjugate_generic(x, v)
        if closed != generic:
            raise ConjugationMismatchError(f"class-sum conjugation mismatch at x={G.names[x]}, class {i}")
        return closed

    # coordinates ----------------------------------------------------------

    @property
    def ambient_rank(self) -> int:
        return self.group.order * self.ring.rank

    def to_vector(self, z: GradedElement) -> list[int]:
        if not z.is_integral():
            raise ValueError("only elements of A have integer coordinates")
        n = self.ring.rank
        v = [0] * self.ambient_rank
        for g, c in z.terms:
            v[g * n:(g + 1) * n] = c.coords
        return v

    def from_vector(self, v: Sequence[int]) -> GradedElement:
        n = self.ring.rank
        return GradedElement.make(self, {g: self.ring.element(v[g * n:(g + 1) * n])
                                         for g in self.group.elements})

    # text -----------------------------------------------------------------

    def format(self, z: GradedElement) -> str:
        parts = []
        for g, c in z.terms:
            u = f"u[{self.group.names[g]}]"
            if isinstance(c, RingElement) and c == self.ring.one():
                term = u
            elif isinstance(c, RingElement) and c == -self.ring.one():
                term = "-" + u
            elif isinstance(c, RingElement) and not c.is_monomial:
                term = f"({c})*{u}"
            else:
                term = f"{c}*{u}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(" - " + term[1:])
            else:
                parts.append(" + " + term)
        return "".join(parts) or "0"

    def parse(self, text: str) -> GradedElement:
        """Parse ``coeff*u[name] + ...``; bare ring literals are read as ``r*u[e]``."""
        return parse_expression(
            text,
            integer=lambda n: self.scalar(n),
            symbol=lambda s: self.scalar(self.ring.symbol(s)),
            unit=lambda name: self.u(name),
        )
