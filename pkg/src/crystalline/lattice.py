"""Integer lattices in Hermite normal form.

All answers of the library are sublattices of some Z^n and are stored as
canonical HNF row bases, so lattice equality is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rings import FracScalar, RingAut, RingElement, RingSpec

__all__ = [
    "Lattice",
    "LatticeMismatchError",
    "hnf",
    "lattice_kernel",
    "lattice_ops",
    "invariant_sublattice",
    "eigenlattice",
    "mat_vec",
]


class LatticeMismatchError(ValueError):
    pass


def hnf(rows: Iterable[Sequence[int]], ncols: int) -> list[list[int]]:
    """Row Hermite normal form; zero rows are dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    a = [list(r) for r in rows if any(r)]
    for r in a:
        if len(r) != ncols:
            raise LatticeMismatchError(f"row of length {len(r)} in an ambient of rank {ncols}")
    top = 0
    for c in range(ncols):
        if top == len(a):
            break
        while True:
            nz = [i for i in range(top, len(a)) if a[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[top], a[piv] = a[piv], a[top]
            p = a[top][c]
            clean = True
            for i in range(top + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if top < len(a) and a[top][c] != 0:
            if a[top][c] < 0:
                a[top] = [-x for x in a[top]]
            p = a[top][c]
            for i in range(top):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
            top += 1
        a = a[:top] + [r for r in a[top:] if any(r)]
    return a[:top]


def mat_vec(mat: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(m * x for m, x in zip(row, v)) for row in mat]


@dataclass(frozen=True)
class Lattice:
    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient_rank: int) -> Lattice:
        return cls(ambient_rank, tuple(tuple(r) for r in hnf(vectors, ambient_rank)))

    @classmethod
    def zero(cls, ambient_rank: int) -> Lattice:
        return cls(ambient_rank, ())

    @classmethod
    def full(cls, ambient_rank: int) -> Lattice:
        return cls.span(([int(i == j) for j in range(ambient_rank)] for i in range(ambient_rank)),
                        ambient_rank)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def _same_ambient(self, other: Lattice) -> None:
        if self.ambient_rank != other.ambient_rank:
            raise LatticeMismatchError(
                f"ambient ranks differ: {self.ambient_rank} vs {other.ambient_rank}")

    def __add__(self, other: Lattice) -> Lattice:
        self._same_ambient(other)
        return Lattice.span(self.basis + other.basis, self.ambient_rank)

    def intersect(self, other: Lattice) -> Lattice:
        """Solve a.B1 = b.B2 over Z; the intersection is spanned by a.B1."""
        self._same_ambient(other)
        if self.is_zero() or other.is_zero():
            return Lattice.zero(self.ambient_rank)
        k1 = self.rank
        cols = [list(v) for v in self.basis] + [[-x for x in v] for v in other.basis]
        system = [[cols[j][i] for j in range(len(cols))] for i in range(self.ambient_rank)]
        ker = lattice_kernel(system, len(cols))
        vecs = []
        for w in ker.basis:
            vecs.append([sum(w[j] * self.basis[j][i] for j in range(k1))
                         for i in range(self.ambient_rank)])
        return Lattice.span(vecs, self.ambient_rank)

    def __and__(self, other: Lattice) -> Lattice:
        return self.intersect(other)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_rank:
            raise LatticeMismatchError("vector length does not match ambient rank")
        if not any(v):
            return True
        return Lattice.span(self.basis + (tuple(v),), self.ambient_rank) == self

    def contains_lattice(self, other: Lattice) -> bool:
        self._same_ambient(other)
        return (self + other) == self

    def project(self, start: int, stop: int) -> Lattice:
        return Lattice.span((v[start:stop] for v in self.basis), stop - start)

    def to_json(self) -> dict:
        return {"ambient_rank": self.ambient_rank, "basis": [list(v) for v in self.basis]}

    @classmethod
    def from_json(cls, data: dict) -> Lattice:
        return cls.span(data["basis"], int(data["ambient_rank"]))


def lattice_kernel(mat: Sequence[Sequence[int]], ncols: int | None = None) -> Lattice:
    """HNF basis of {v in Z^n : M v = 0}.

    Row-reduces ``[M^T | I]``: the unimodular transform rows whose left
    block vanishes form a basis of the (saturated) kernel.
    """
    m = len(mat)
    if ncols is None:
        if not mat:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(mat[0])
    if any(len(r) != ncols for r in mat):
        raise LatticeMismatchError("ragged matrix")
    aug = [[mat[i][j] for i in range(m)] + [int(j == k) for k in range(ncols)]
           for j in range(ncols)]
    red = hnf(aug, m + ncols)
    kern = [r[m:] for r in red if not any(r[:m])]
    return Lattice.span(kern, ncols)


def lattice_ops(op: str, a: Lattice, b: Lattice):
    if op == "intersect":
        return a.intersect(b)
    if op == "equal":
        a._same_ambient(b)
        return a == b
    if op == "rank":
        return a.rank
    raise ValueError(f"unknown lattice operation {op!r}")


def _stack(blocks: Iterable[list[list[int]]]) -> list[list[int]]:
    out: list[list[int]] = []
    for b in blocks:
        out.extend(b)
    return out


def invariant_sublattice(auts: Sequence[RingAut]) -> Lattice:
    """Simultaneous fixed lattice of the given automorphisms."""
    if not auts:
        raise ValueError("need at least one automorphism")
    n = auts[0].ring.rank
    rows = _stack([[c - int(i == j) for j, c in enumerate(row)]
                   for i, row in enumerate(a.column_matrix())] for a in auts)
    return lattice_kernel(rows, n)


def eigenlattice(aut: RingAut, c: FracScalar | RingElement) -> Lattice:
    """{d in D : aut(d) = c*d}, with the denominator of c cleared."""
    c = FracScalar.lift(c)
    if c.is_zero():
        raise ValueError("eigenvalue must be nonzero")
    ring: RingSpec = aut.ring
    a = aut.column_matrix()
    m = ring.multiplication_matrix(c.num.coords)
    rows = [[c.den * a[i][j] - m[i][j] for j in range(ring.rank)] for i in range(ring.rank)]
    return lattice_kernel(rows, ring.rank)
