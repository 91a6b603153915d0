"""Exact arithmetic in Z and the cyclotomic integer rings Z[zeta_n].

A ring is a free Z-module with integer structure constants. Elements are
integer coordinate vectors, fraction-field scalars are ``num / den`` with
``den`` a positive integer (K = D (x) Q for every shipped kind).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence, Union

__all__ = [
    "RingSpec",
    "RingElement",
    "FracScalar",
    "RingAut",
    "SpecMismatchError",
    "RingValidationError",
    "frac_div",
    "ring_arith",
    "cyclotomic_polynomial",
    "SUPPORTED_CONDUCTORS",
]

SUPPORTED_CONDUCTORS = (3, 4, 5, 8, 12)


class SpecMismatchError(ValueError):
    """Operands live in different rings."""


class RingValidationError(ValueError):
    pass


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists, lowest degree first; den must be monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return q, num[: len(den) - 1]


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def _det_and_inverse(mat: Sequence[Sequence[int]]) -> tuple[int, list[list[Fraction]] | None]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0, None
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        p = a[c][c]
        det *= p
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                m = a[r][c]
                a[r] = [x - m * y for x, y in zip(a[r], a[c])]
    assert det.denominator == 1
    return int(det), [row[n:] for row in a]


@dataclass(frozen=True, eq=False)
class RingSpec:
    """A commutative domain given by structure constants over a Z-basis.

    ``mul_table[i][j]`` is the coordinate vector of ``e_i * e_j``.
    """

    rank: int
    mul_table: tuple[tuple[tuple[int, ...], ...], ...]
    basis_names: tuple[str, ...]
    one_coords: tuple[int, ...]
    kind: str = "custom"
    conductor: int | None = None
    generator: str | None = None

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise RingValidationError("rank must be positive")
        if len(self.mul_table) != self.rank or len(self.basis_names) != self.rank:
            raise RingValidationError("structure constants do not match rank")
        if len(self.one_coords) != self.rank:
            raise RingValidationError("ONE has the wrong length")

    @classmethod
    def integers(cls) -> RingSpec:
        return cls(1, (((1,),),), ("1",), (1,), kind="integers")

    @classmethod
    def cyclotomic(cls, n: int) -> RingSpec:
        """Power basis 1, z, ..., z^(phi(n)-1) of Z[zeta_n]."""
        if n not in SUPPORTED_CONDUCTORS:
            raise RingValidationError(
                f"unsupported conductor {n}; supported: {SUPPORTED_CONDUCTORS}")
        phi = cyclotomic_polynomial(n)
        rank = len(phi) - 1
        powers = []
        for k in range(2 * rank - 1):
            mono = [0] * k + [1]
            _, rem = _poly_divmod(mono, phi) if k >= rank else ([], mono + [0] * (rank - k - 1))
            powers.append(tuple(rem))
        table = tuple(tuple(powers[i + j] for j in range(rank)) for i in range(rank))
        sym = {3: "w", 4: "i"}.get(n, "z")
        names = ("1",) + tuple(sym if k == 1 else f"{sym}^{k}" for k in range(1, rank))
        return cls(rank, table, names, (1,) + (0,) * (rank - 1),
                   kind="cyclotomic", conductor=n, generator=sym)

    @classmethod
    def from_kind(cls, kind: str, conductor: int | None = None) -> RingSpec:
        if kind == "integers":
            return cls.integers()
        if kind == "cyclotomic":
            if conductor is None:
                raise RingValidationError("cyclotomic ring needs a conductor")
            return cls.cyclotomic(conductor)
        raise RingValidationError(f"unknown ring kind {kind!r}")

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, RingSpec):
            return NotImplemented
        return (self.mul_table, self.basis_names) == (other.mul_table, other.basis_names)

    def __hash__(self) -> int:
        return hash(self.basis_names)

    @property
    def label(self) -> str:
        if self.kind == "integers":
            return "Z"
        if self.kind == "cyclotomic":
            return f"Z[{self.generator}]" if self.conductor in (3, 4) else f"Z[zeta_{self.conductor}]"
        return "D"

    @cached_property
    def _terms(self) -> list[tuple[int, int, int, int]]:
        return [(i, j, k, c)
                for i in range(self.rank) for j in range(self.rank)
                for k, c in enumerate(self.mul_table[i][j]) if c]

    def zero(self) -> RingElement:
        return RingElement(self, (0,) * self.rank)

    def one(self) -> RingElement:
        return RingElement(self, self.one_coords)

    def basis(self) -> list[RingElement]:
        return [RingElement(self, tuple(int(i == j) for j in range(self.rank)))
                for i in range(self.rank)]

    def gen(self) -> RingElement:
        """The generator z (or the integer 1 for Z)."""
        return self.basis()[1] if self.rank > 1 else self.one()

    def element(self, coords: Sequence[int] | int) -> RingElement:
        if isinstance(coords, int):
            return self.one() * coords
        if len(coords) != self.rank:
            raise SpecMismatchError(f"expected {self.rank} coordinates, got {len(coords)}")
        return RingElement(self, tuple(int(c) for c in coords))

    def mul_coords(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.rank
        for i, j, k, c in self._terms:
            if a[i] and b[j]:
                out[k] += a[i] * b[j] * c
        return tuple(out)

    def validate(self) -> None:
        """Exhaustive commutativity/associativity/unit check on basis vectors."""
        basis = self.basis()
        one = self.one()
        for x in basis:
            if one * x != x:
                raise RingValidationError(f"ONE is not a unit for {x}")
            for y in basis:
                if x * y != y * x:
                    raise RingValidationError(f"{x} and {y} do not commute")
                for z in basis:
                    if (x * y) * z != x * (y * z):
                        raise RingValidationError(f"associativity fails at ({x}, {y}, {z})")

    def format_coords(self, coords: Sequence[int]) -> str:
        parts: list[str] = []
        for c, name in zip(coords, self.basis_names):
            if c == 0:
                continue
            if name == "1":
                mono = str(abs(c))
            elif abs(c) == 1:
                mono = name
            else:
                mono = f"{abs(c)}*{name}"
            if not parts:
                parts.append(mono if c > 0 else "-" + mono)
            else:
                parts.append(("+" if c > 0 else "-") + mono)
        return "".join(parts) or "0"

    def parse(self, text: str) -> RingElement:
        """Parse a literal such as ``1+i``, ``-3*z^2`` or ``(1-w)^2``."""
        from .expr import parse_expression

        return parse_expression(
            text,
            integer=lambda n: self.one() * n,
            symbol=self.symbol,
            unit=None,
        )

    def symbol(self, name: str) -> RingElement:
        if self.generator is not None and name == self.generator:
            return self.gen()
        raise ValueError(f"unknown ring symbol {name!r} in {self.label}")

    def multiplication_matrix(self, b: Sequence[int]) -> list[list[int]]:
        """Column-convention matrix of d -> b*d."""
        cols = [self.mul_coords(b, e) for e in
                (tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))]
        return [[cols[j][k] for j in range(self.rank)] for k in range(self.rank)]


@dataclass(frozen=True, eq=False)
class RingElement:
    ring: RingSpec
    coords: tuple[int, ...]

    def _check(self, other: RingElement) -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise SpecMismatchError(f"{self.ring.label} vs {other.ring.label}")

    def _lift(self, other: object) -> RingElement | None:
        if isinstance(other, RingElement):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.ring.one() * other if other != 1 else self.ring.one()
        return None

    def __add__(self, other: object) -> RingElement:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, tuple(-a for a in self.coords))

    def __sub__(self, other: object) -> RingElement:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> RingElement:
        return (-self) + other

    def __mul__(self, other: object) -> RingElement:
        if isinstance(other, int):
            return RingElement(self.ring, tuple(a * other for a in self.coords))
        if isinstance(other, RingElement):
            self._check(other)
            return RingElement(self.ring, self.ring.mul_coords(self.coords, other.coords))
        return NotImplemented

    def __rmul__(self, other: object) -> RingElement:
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> RingElement:
        if k < 0:
            raise ValueError("negative powers live in the fraction field")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.ring.one() * other
        if isinstance(other, FracScalar):
            return other == self
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.coords == other.coords and (self.ring is other.ring or self.ring == other.ring)

    def __hash__(self) -> int:
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return self.ring.format_coords(self.coords)

    def __repr__(self) -> str:
        return f"RingElement({self})"

    @property
    def is_monomial(self) -> bool:
        return sum(1 for c in self.coords if c) <= 1

    def content(self) -> int:
        g = 0
        for c in self.coords:
            g = gcd(g, c)
        return g

    def norm_and_cofactor(self) -> tuple[int, RingElement]:
        """Return (N, c) with self * c = N, N the field norm (sign normalized to N > 0)."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        mat = self.ring.multiplication_matrix(self.coords)
        det, inv = _det_and_inverse(mat)
        assert inv is not None
        one = self.ring.one_coords
        cof = [sum(inv[k][j] * one[j] for j in range(self.ring.rank)) * det
               for k in range(self.ring.rank)]
        assert all(c.denominator == 1 for c in cof)
        cofactor = RingElement(self.ring, tuple(int(c) for c in cof))
        if det < 0:
            det, cofactor = -det, -cofactor
        return det, cofactor

    def to_frac(self) -> FracScalar:
        return FracScalar(self, 1)


def ring_arith(op: str, a: RingElement, b: RingElement | None = None) -> RingElement:
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"{op} needs two operands")
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


Scalar = Union[RingElement, "FracScalar"]


@dataclass(frozen=True, eq=False)
class FracScalar:
    """``num / den`` in the fraction field; always reduced, ``den > 0``."""

    num: RingElement
    den: int = 1

    @classmethod
    def make(cls, num: RingElement, den: int) -> FracScalar:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num.content(), den)
        if g > 1:
            num = RingElement(num.ring, tuple(c // g for c in num.coords))
            den //= g
        return cls(num, den)

    @staticmethod
    def lift(x: Scalar | int, ring: RingSpec | None = None) -> FracScalar:
        if isinstance(x, FracScalar):
            return x
        if isinstance(x, RingElement):
            return FracScalar(x, 1)
        if isinstance(x, int) and ring is not None:
            return FracScalar(ring.one() * x, 1)
        raise TypeError(f"cannot lift {x!r} into the fraction field")

    @property
    def ring(self) -> RingSpec:
        return self.num.ring

    def __add__(self, other: object) -> FracScalar:
        if isinstance(other, (int, RingElement)):
            other = FracScalar.lift(other, self.ring)
        if not isinstance(other, FracScalar):
            return NotImplemented
        return FracScalar.make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> FracScalar:
        return FracScalar(-self.num, self.den)

    def __sub__(self, other: object) -> FracScalar:
        if isinstance(other, (int, RingElement)):
            other = FracScalar.lift(other, self.ring)
        if not isinstance(other, FracScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> FracScalar:
        if isinstance(other, (int, RingElement)):
            other = FracScalar.lift(other, self.ring)
        if not isinstance(other, FracScalar):
            return NotImplemented
        return FracScalar.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> FracScalar:
        norm, cof = self.num.norm_and_cofactor()
        return FracScalar.make(cof * self.den, norm)

    def __truediv__(self, other: object) -> FracScalar:
        if isinstance(other, (int, RingElement)):
            other = FracScalar.lift(other, self.ring)
        if not isinstance(other, FracScalar):
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = FracScalar.lift(other, self.ring)
        if isinstance(other, RingElement):
            other = FracScalar(other, 1)
        if not isinstance(other, FracScalar):
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self) -> int:
        return hash((self.num.coords, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den == 1 and self.num == self.ring.one()

    def is_integral(self) -> bool:
        return self.den == 1

    def to_ring(self) -> RingElement:
        if self.den != 1:
            raise ValueError(f"{self} is not integral")
        return self.num

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        s = str(self.num)
        if not self.num.is_monomial:
            s = f"({s})"
        return f"{s}/{self.den}"

    def __repr__(self) -> str:
        return f"FracScalar({self})"


def frac_div(a: RingElement, b: RingElement) -> FracScalar:
    """a / b with the denominator cleared through the norm of b."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero ring element")
    norm, cof = b.norm_and_cofactor()
    return FracScalar.make(a * cof, norm)


@dataclass(frozen=True, eq=False)
class RingAut:
    """A ring automorphism; ``matrix[i]`` holds the coordinates of the image of ``e_i``."""

    ring: RingSpec
    matrix: tuple[tuple[int, ...], ...]
    name: str | None = None

    @classmethod
    def identity(cls, ring: RingSpec) -> RingAut:
        return cls(ring, tuple(e.coords for e in ring.basis()), "identity")

    @classmethod
    def galois(cls, ring: RingSpec, k: int) -> RingAut:
        """z -> z^k on Z[zeta_n]."""
        if ring.kind == "integers":
            return cls.identity(ring)
        if ring.kind != "cyclotomic" or ring.conductor is None:
            raise RingValidationError("galois(k) needs a cyclotomic ring")
        n = ring.conductor
        if gcd(k, n) != 1:
            raise RingValidationError(f"galois({k}) is not invertible mod {n}")
        k %= n
        z = ring.gen()
        img = z ** k
        rows = tuple((img ** j).coords for j in range(ring.rank))
        name = "identity" if k == 1 else ("conj" if k == n - 1 else f"galois({k})")
        return cls(ring, rows, name)

    @classmethod
    def from_name(cls, ring: RingSpec, name: str) -> RingAut:
        key = name.strip()
        if key in ("identity", "id"):
            return cls.identity(ring)
        if key == "conj":
            if ring.kind == "integers":
                return cls.identity(ring)
            return cls.galois(ring, -1)
        m = re.fullmatch(r"galois\(\s*(-?\d+)\s*\)", key)
        if m:
            return cls.galois(ring, int(m.group(1)))
        raise RingValidationError(f"unknown automorphism {name!r}")

    @classmethod
    def from_matrix(cls, ring: RingSpec, rows: Sequence[Sequence[int]]) -> RingAut:
        if len(rows) != ring.rank or any(len(r) != ring.rank for r in rows):
            raise RingValidationError("automorphism matrix has the wrong shape")
        return cls(ring, tuple(tuple(int(x) for x in r) for r in rows))

    def __call__(self, x: Scalar) -> Scalar:
        return self.apply(x)

    def apply(self, x):
        if isinstance(x, FracScalar):
            return FracScalar(self.apply(x.num), x.den)
        if isinstance(x, int):
            return x
        out = [0] * self.ring.rank
        for c, row in zip(x.coords, self.matrix):
            if c:
                for k, v in enumerate(row):
                    out[k] += c * v
        return RingElement(self.ring, tuple(out))

    def compose(self, other: RingAut) -> RingAut:
        """self o other."""
        rows = tuple(self.apply(RingElement(self.ring, r)).coords for r in other.matrix)
        return RingAut(self.ring, rows)

    def column_matrix(self) -> list[list[int]]:
        n = self.ring.rank
        return [[self.matrix[i][k] for i in range(n)] for k in range(n)]

    def is_identity(self) -> bool:
        return self == RingAut.identity(self.ring)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingAut):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def validate(self) -> None:
        det, _ = _det_and_inverse(self.matrix)
        if det not in (1, -1):
            raise RingValidationError(f"automorphism has determinant {det}, not +-1")
        one = self.ring.one()
        if self.apply(one) != one:
            raise RingValidationError("automorphism does not fix ONE")
        basis = self.ring.basis()
        for a in basis:
            for b in basis:
                if self.apply(a * b) != self.apply(a) * self.apply(b):
                    raise RingValidationError(f"automorphism is not multiplicative on ({a}, {b})")

    def describe(self) -> str:
        if self.name:
            return self.name
        if self.is_identity():
            return "identity"
        return str([list(r) for r in self.matrix])
