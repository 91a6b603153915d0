"""Finite groups as validated Cayley tables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Callable, Hashable, Iterable, Sequence

__all__ = [
    "GroupTable",
    "GroupValidationError",
    "SubgroupSet",
    "validate_group",
    "group_from_function",
    "GROUP_CATALOG",
]


class GroupValidationError(ValueError):
    def __init__(self, kind: str, message: str, witness: tuple = ()):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


@dataclass(frozen=True)
class SubgroupSet:
    elements: tuple[int, ...]

    def __contains__(self, g: int) -> bool:
        return g in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.elements)


def validate_group(table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> GroupTable:
    n = len(table)
    if n == 0:
        raise GroupValidationError("shape", "empty table")
    if names is None:
        names = [str(i) for i in range(n)]
    if len(names) != n or len(set(names)) != n:
        raise GroupValidationError("shape", "element names must be distinct and match the order")
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupValidationError("shape", f"row {names[i]} has {len(row)} entries, expected {n}")
        if any(not (0 <= x < n) for x in row):
            raise GroupValidationError("shape", f"row {names[i]} has an out-of-range entry")
        if len(set(row)) != n:
            raise GroupValidationError("latin", f"row {names[i]} is not a permutation", (names[i],))
    for j in range(n):
        if len({table[i][j] for i in range(n)}) != n:
            raise GroupValidationError("latin", f"column {names[j]} is not a permutation", (names[j],))
    ident = next((e for e in range(n)
                  if all(table[e][g] == g and table[g][e] == g for g in range(n))), None)
    if ident is None:
        raise GroupValidationError("identity", "no two-sided identity element")
    for g, h, k in product(range(n), repeat=3):
        if table[table[g][h]][k] != table[g][table[h][k]]:
            raise GroupValidationError(
                "associativity",
                f"({names[g]}*{names[h]})*{names[k]} != {names[g]}*({names[h]}*{names[k]})",
                (names[g], names[h], names[k]))
    return GroupTable(tuple(tuple(r) for r in table), tuple(names), ident)


@dataclass(frozen=True)
class GroupTable:
    """A validated group. Use :func:`validate_group` to build one."""

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    identity: int

    @classmethod
    def from_names(cls, names: Sequence[str], name_table: Sequence[Sequence[str]]) -> GroupTable:
        index = {name: i for i, name in enumerate(names)}
        try:
            table = [[index[x] for x in row] for row in name_table]
        except KeyError as exc:
            raise GroupValidationError("shape", f"unknown element name {exc.args[0]!r} in table")
        return validate_group(table, names)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown group element {name!r}") from None

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        return tuple(next(h for h in self.elements if self.table[g][h] == self.identity)
                     for g in self.elements)

    def inv(self, g: int) -> int:
        return self._inverses[g]

    def conj(self, x: int, g: int) -> int:
        """x g x^-1."""
        return self.mul(self.mul(x, g), self.inv(x))

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.table[g][h] == self.table[h][g] for g in self.elements for h in self.elements)

    def centralizer(self, x: int, within: Iterable[int] | None = None) -> SubgroupSet:
        scope = self.elements if within is None else within
        return SubgroupSet(tuple(sorted(g for g in scope if self.mul(g, x) == self.mul(x, g))))

    def conjugacy_class(self, x: int, by: Iterable[int] | None = None) -> tuple[int, ...]:
        scope = self.elements if by is None else by
        return tuple(sorted({self.conj(g, x) for g in scope}))

    def conjugacy_classes(self, within: Iterable[int] | None = None) -> list[tuple[int, ...]]:
        """Classes of ``within`` under conjugation by ``within``; input order."""
        scope = list(self.elements if within is None else within)
        seen: set[int] = set()
        out = []
        for x in scope:
            if x not in seen:
                cls = self.conjugacy_class(x, by=scope)
                seen.update(cls)
                out.append(cls)
        return out

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        return (self.identity in s
                and all(self.mul(a, b) in s for a in s for b in s)
                and all(self.inv(a) in s for a in s))

    def subgroup(self, elems: Iterable[int]) -> SubgroupSet:
        s = sorted(set(elems))
        if not self.is_subgroup(s):
            raise GroupValidationError("subgroup", f"{[self.names[g] for g in s]} is not a subgroup")
        return SubgroupSet(tuple(s))

    def is_normal(self, sub: Iterable[int]) -> bool:
        s = set(sub)
        return all(self.conj(x, g) in s for x in self.elements for g in s)

    def kernel_of_map(self, is_trivial: Callable[[int], bool]) -> SubgroupSet:
        """Kernel of a homomorphism given by its triviality predicate; normality asserted."""
        ker = self.subgroup(g for g in self.elements if is_trivial(g))
        assert self.is_normal(ker), "kernel of a homomorphism must be normal"
        return ker

    def cosets(self, sub: SubgroupSet) -> list[tuple[int, ...]]:
        """Left cosets gW in order of first appearance."""
        seen: set[int] = set()
        out = []
        for g in self.elements:
            if g not in seen:
                coset = tuple(sorted(self.mul(g, w) for w in sub))
                seen.update(coset)
                out.append(coset)
        return out

    def normalizer_of_set(self, elems: Iterable[int]) -> SubgroupSet:
        c = frozenset(elems)
        return SubgroupSet(tuple(x for x in self.elements
                                 if frozenset(self.conj(x, g) for g in c) == c))

    def name_table(self) -> list[list[str]]:
        return [[self.names[x] for x in row] for row in self.table]

    def fmt(self, elems: Iterable[int]) -> str:
        return "{" + ", ".join(self.names[g] for g in elems) + "}"


def group_from_function(elements: Sequence[Hashable], mul: Callable, names: Sequence[str]) -> GroupTable:
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return validate_group(table, names)


def _cyclic(n: int, gen: str = "x") -> GroupTable:
    names = ["e", gen] + [f"{gen}{k}" for k in range(2, n)]
    return group_from_function(list(range(n)), lambda a, b: (a + b) % n, names)


def _klein() -> GroupTable:
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return group_from_function(elems, lambda p, q: ((p[0] + q[0]) % 2, (p[1] + q[1]) % 2),
                               ["e", "a", "b", "c"])


def _c2_x_c4() -> GroupTable:
    elems = [(i, j) for i in range(2) for j in range(4)]

    def name(p):
        a = "a" if p[0] else ""
        x = {0: "", 1: "x", 2: "x2", 3: "x3"}[p[1]]
        return (a + x) or "e"

    return group_from_function(elems, lambda p, q: ((p[0] + q[0]) % 2, (p[1] + q[1]) % 4),
                               [name(p) for p in elems])


def _compose(p, q):
    # (p*q)(i) = p(q(i))
    return tuple(p[i] for i in q)


def _s3() -> GroupTable:
    g = (1, 2, 0)
    t = (1, 0, 2)
    e = (0, 1, 2)
    g2 = _compose(g, g)
    elems = [e, g, g2, t, _compose(t, g), _compose(t, g2)]
    assert sorted(elems) == sorted(permutations(range(3)))
    return group_from_function(elems, _compose, ["e", "g", "g2", "t", "tg", "tg2"])


def _d4() -> GroupTable:
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    e = (0, 1, 2, 3)
    rs = [e]
    for _ in range(3):
        rs.append(_compose(r, rs[-1]))
    elems = rs + [_compose(s, x) for x in rs]
    return group_from_function(elems, _compose, ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"])


def _q8() -> GroupTable:
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    basis = ["1", "i", "j", "k"]
    prod_table = {
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    for b in basis:
        prod_table[("1", b)] = (1, b)
        prod_table[(b, "1")] = (1, b)
        if b != "1":
            prod_table[(b, b)] = (-1, "1")

    def mul(p, q):
        s, ax = prod_table[(p[1], q[1])]
        return (p[0] * q[0] * s, ax)

    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return group_from_function(elems, mul, names)


GROUP_CATALOG: dict[str, Callable[[], GroupTable]] = {
    "C2": lambda: _cyclic(2),
    "C4": lambda: _cyclic(4),
    "V4": _klein,
    "C2xC4": _c2_x_c4,
    "S3": _s3,
    "D4": _d4,
    "Q8": _q8,
}
