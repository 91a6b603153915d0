"""The center Z(A) of a crystalline graded ring.

Three independent routes:

* :func:`center_oracle` solves "z commutes with every generator" as one
  integer kernel, with no structural input;
* :func:`center_abelian` assembles Z(A) degree by degree from D^G and the
  eigen-modules I_s (G Abelian);
* :func:`center_nonabelian` solves the conjugation system on each saturation
  class of ray classes, plus the single-class diagnostic layer
  (Delta, N_G(C), I_C).

Every center is a sublattice of Z^(|G| * rank D); coordinates of
``sum r_s u_s`` are the blocks of ``r_s`` in group input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .graded import CrystallineRing, GradedElement, RayClass, StructuralUnavailableError
from .groups import SubgroupSet
from .lattice import Lattice, eigenlattice, lattice_kernel
from .rings import FracScalar, RingAut, RingElement

__all__ = [
    "CenterLattice",
    "Component",
    "AbelianCenterReport",
    "NonAbelianCenterReport",
    "ClassData",
    "SaturationBlock",
    "TrivialVerdict",
    "CrossCheck",
    "RankOneResult",
    "WrongMethodError",
    "center_oracle",
    "center_abelian",
    "center_nonabelian",
    "trivial_center_diagnostics",
    "cross_check",
    "rank_one_check",
    "embed_component",
    "homogeneous_component",
]


class WrongMethodError(ValueError):
    pass


# ---------------------------------------------------------------------------
# helpers


def _mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def embed_component(algebra: CrystallineRing, module: Lattice, degrees: Sequence[int]) -> Lattice:
    """{sum_{g in degrees} d u_g : d in module} inside the ambient lattice."""
    n = algebra.ring.rank
    vecs = []
    for d in module.basis:
        v = [0] * algebra.ambient_rank
        for g in degrees:
            v[g * n:(g + 1) * n] = d
        vecs.append(v)
    return Lattice.span(vecs, algebra.ambient_rank)


def homogeneous_component(algebra: CrystallineRing, center: Lattice, degrees: Sequence[int]) -> Lattice:
    """{d in D : sum_{g in degrees} d u_g lies in ``center``}, in D-coordinates."""
    full = embed_component(algebra, Lattice.full(algebra.ring.rank), degrees)
    n = algebra.ring.rank
    g0 = degrees[0]
    return (full & center).project(g0 * n, (g0 + 1) * n)


def _scaled_aut(aut: RingAut, c: FracScalar) -> tuple[list[list[int]], int]:
    """Integer matrix N with N d = num(c) * aut(d), and den(c)."""
    ring = aut.ring
    return _mat_mul(ring.multiplication_matrix(c.num.coords), aut.column_matrix()), c.den


def _ring_elem(algebra: CrystallineRing, coords: Sequence[int]) -> RingElement:
    return algebra.ring.element(coords)


@dataclass(frozen=True)
class CenterLattice:
    algebra: CrystallineRing
    lattice: Lattice

    @property
    def ambient(self) -> int:
        return self.lattice.ambient_rank

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def elements(self) -> list[GradedElement]:
        return [self.algebra.from_vector(v) for v in self.lattice.basis]

    def support(self) -> tuple[int, ...]:
        n = self.algebra.ring.rank
        return tuple(g for g in self.algebra.group.elements
                     if any(any(v[g * n:(g + 1) * n]) for v in self.lattice.basis))

    def component(self, g: int) -> Lattice:
        return homogeneous_component(self.algebra, self.lattice, [g])


def center_oracle(algebra: CrystallineRing, over: Sequence[int] | None = None) -> CenterLattice:
    """Brute-force lattice of central elements.

    With ``over`` (a subgroup), computes the center of the subring graded by
    it instead: support restricted to ``over`` and commutation with u_x for
    x in ``over`` only.
    """
    G = algebra.group
    D = algebra.ring
    cc = algebra.cocycle
    n = D.rank
    N = algebra.ambient_rank
    scope = list(G.elements) if over is None else list(over)
    rows: list[list[int]] = []

    def block_rows(blocks: dict[int, list[list[int]]]) -> None:
        for k in range(n):
            row = [0] * N
            for g, mat in blocks.items():
                for j in range(n):
                    row[g * n + j] += mat[k][j]
            if any(row):
                rows.append(row)

    for g in G.elements:
        if g not in scope:
            for k in range(n):
                row = [0] * N
                row[g * n + k] = 1
                rows.append(row)
    for b in D.basis():
        for s in G.elements:
            diff = cc.sigma(s).apply(b) - b
            if diff:
                block_rows({s: D.multiplication_matrix(diff.coords)})
    for x in scope:
        xi = G.inv(x)
        a_x = cc.sigma(x).column_matrix()
        for h in G.elements:
            left = G.mul(h, xi)    # r_left u_left * u_x
            right = G.mul(xi, h)   # u_x * r_right u_right
            blocks: dict[int, list[list[int]]] = {}
            m_left = D.multiplication_matrix(cc.alpha(left, x).coords)
            m_right = _mat_mul(D.multiplication_matrix(cc.alpha(x, right).coords), a_x)
            blocks[left] = m_left
            if right in blocks:
                blocks[right] = [[p - q for p, q in zip(r1, r2)] for r1, r2 in zip(blocks[right], m_right)]
            else:
                blocks[right] = [[-q for q in r2] for r2 in m_right]
            block_rows(blocks)
    return CenterLattice(algebra, lattice_kernel(rows, N))


# ---------------------------------------------------------------------------
# shared report pieces


@dataclass(frozen=True)
class RankOneResult:
    checked: bool
    rank: int
    fixed_rank: int
    product_witness: tuple[RingElement, RingElement, RingElement] | None

    @property
    def rank_matches(self) -> bool:
        return not self.checked or self.rank == self.fixed_rank

    @property
    def ok(self) -> bool:
        return self.rank_matches and (not self.checked or self.product_witness is not None)


def rank_one_check(algebra: CrystallineRing, module: Lattice, needs_product: bool = True) -> RankOneResult:
    """Q-rank of I equals that of D^G, and some product uv of elements of I leaves I."""
    fixed = algebra.cocycle.fixed_ring
    if module.is_zero():
        return RankOneResult(False, 0, fixed.rank, None)
    witness = None
    if needs_product:
        basis = [_ring_elem(algebra, v) for v in module.basis]
        for u, v in product(basis, repeat=2):
            uv = u * v
            if not module.contains(uv.coords):
                witness = (u, v, uv)
                break
    return RankOneResult(True, module.rank, fixed.rank, witness)


@dataclass(frozen=True)
class Component:
    """One graded piece of the structural center: ``module * u_s`` (or ``* v_C``)."""

    degrees: tuple[int, ...]
    kind: str               # "fixed": D^G, "eigen": I_s or I_C
    module: Lattice
    conditions: tuple[tuple[int, FracScalar], ...] = ()
    generator: RingElement | None = None


@dataclass(frozen=True)
class TrivialVerdict:
    reasons: tuple[str, ...]
    oracle_trivial: bool | None

    @property
    def claims_trivial(self) -> bool:
        return bool(self.reasons)

    @property
    def consistent(self) -> bool | None:
        if self.oracle_trivial is None:
            return None
        return self.claims_trivial == self.oracle_trivial or not self.claims_trivial

    @property
    def label(self) -> str:
        return self.reasons[0] if self.reasons else "nontrivial"


@dataclass(frozen=True)
class CrossCheck:
    equal: bool
    structural: Lattice
    oracle: Lattice
    first_difference: tuple[str, tuple[int, ...]] | None


def cross_check(structural: Lattice, oracle: Lattice | CenterLattice) -> CrossCheck:
    if isinstance(oracle, CenterLattice):
        oracle = oracle.lattice
    if structural == oracle:
        return CrossCheck(True, structural, oracle, None)
    diff = None
    for v in structural.basis:
        if not oracle.contains(v):
            diff = ("structural-only", v)
            break
    if diff is None:
        for v in oracle.basis:
            if not structural.contains(v):
                diff = ("oracle-only", v)
                break
    return CrossCheck(False, structural, oracle, diff)


def _trivial_lattice(algebra: CrystallineRing) -> Lattice:
    return embed_component(algebra, algebra.cocycle.fixed_ring, [algebra.group.identity])


def _pid_generators(algebra: CrystallineRing, components: list[Component]) -> list[Component]:
    if algebra.cocycle.fixed_ring.rank != 1:
        return components
    out = []
    for c in components:
        gen = None
        if c.module.rank == 1:
            gen = _ring_elem(algebra, c.module.basis[0])
        out.append(Component(c.degrees, c.kind, c.module, c.conditions, gen))
    return out


# ---------------------------------------------------------------------------
# Abelian


@dataclass
class AbelianCenterReport:
    algebra: CrystallineRing
    W: tuple[int, ...]
    W_reg: tuple[int, ...]
    G_reg: tuple[int, ...]
    components: list[Component]
    lattice: Lattice
    all_x_agrees: bool
    trivial: TrivialVerdict | None = None

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(c.degrees[0] for c in self.components if not c.module.is_zero())

    @property
    def fixed_ring_is_integers(self) -> bool:
        return self.algebra.cocycle.fixed_ring.rank == 1

    def crystalline_graded_basis(self) -> list[GradedElement] | None:
        """v_s = d_s u_s when D^G = Z and every component has one generator."""
        if not self.fixed_ring_is_integers:
            return None
        A = self.algebra
        out = []
        for c in self.components:
            if c.module.is_zero():
                continue
            if c.generator is None:
                return None
            out.append(A.element({c.degrees[0]: c.generator}))
        return out


def center_abelian(algebra: CrystallineRing) -> AbelianCenterReport:
    G = algebra.group
    if not G.is_abelian:
        raise WrongMethodError("center_abelian needs an Abelian grading group")
    cc = algebra.cocycle
    W = tuple(cc.W)
    elems = tuple(G.elements)
    W_reg = tuple(s for s in W if all(cc.alpha(s, x) == cc.alpha(x, s) for x in W))
    G_reg = tuple(s for s in elems if all(cc.alpha(s, x) == cc.alpha(x, s) for x in elems))
    fixed = cc.fixed_ring
    components: list[Component] = []
    agrees = True
    for s in W_reg:
        if s in G_reg:
            components.append(Component((s,), "fixed", fixed))
            continue
        conds = tuple((x, cc.f(s, x)) for x in elems if not cc.f(s, x).is_one())
        module = Lattice.full(algebra.ring.rank)
        for x, c in conds:
            module = module & eigenlattice(cc.sigma(x), c)
        every = Lattice.full(algebra.ring.rank)
        for x in elems:
            every = every & eigenlattice(cc.sigma(x), cc.f(s, x))
        agrees = agrees and every == module
        components.append(Component((s,), "eigen", module, conds))
    components = _pid_generators(algebra, components)
    lat = Lattice.zero(algebra.ambient_rank)
    for c in components:
        lat = lat + embed_component(algebra, c.module, c.degrees)
    return AbelianCenterReport(algebra, W, W_reg, G_reg, components, lat, agrees)


# ---------------------------------------------------------------------------
# non-Abelian


@dataclass(frozen=True)
class ClassData:
    ray_class: RayClass
    normalizer: SubgroupSet
    is_normal: bool
    constant: bool
    g_regular: bool | None
    component: Component | None
    alt_module: Lattice | None
    oracle_module: Lattice | None = None

    @property
    def orientation(self) -> str | None:
        """Which eigenvalue orientation reproduces the oracle's coefficient module."""
        if self.component is None or self.oracle_module is None or not self.is_normal:
            return None
        inv_ok = self.component.module == self.oracle_module
        dir_ok = self.alt_module == self.oracle_module
        return {(True, True): "both", (True, False): "f^-1", (False, True): "f", (False, False): "neither"}[
            (inv_ok, dir_ok)]


@dataclass(frozen=True)
class SaturationBlock:
    classes: tuple[int, ...]
    solution: Lattice


@dataclass
class NonAbelianCenterReport:
    algebra: CrystallineRing
    W: tuple[int, ...]
    W_reg: tuple[int, ...]
    G_reg: tuple[int, ...]
    ray_classes: list[RayClass]
    blocks: list[SaturationBlock]
    class_data: list[ClassData]
    lattice: Lattice
    single_class_lattice: Lattice
    trivial: TrivialVerdict | None = None
    single_class_check: CrossCheck | None = None

    @property
    def delta(self) -> list[int]:
        return [i for i, d in enumerate(self.class_data) if d.constant]

    @property
    def fixed_ring_is_integers(self) -> bool:
        return self.algebra.cocycle.fixed_ring.rank == 1

    @property
    def components(self) -> list[Component]:
        return [d.component for d in self.class_data
                if d.component is not None and d.is_normal and d.constant]

    @property
    def single_class_under_reports(self) -> bool:
        chk = self.single_class_check
        return chk is not None and not chk.equal and chk.oracle.contains_lattice(chk.structural)

    def crystalline_graded_basis(self) -> list[GradedElement] | None:
        if not self.fixed_ring_is_integers:
            return None
        A = self.algebra
        out = []
        for c in self.components:
            if c.module.is_zero():
                continue
            if c.generator is None:
                return None
            out.append(A.element({g: c.generator for g in c.degrees}))
        return out


def _saturation_classes(algebra: CrystallineRing, classes: list[RayClass]) -> list[tuple[int, ...]]:
    G = algebra.group
    where = {g: i for i, c in enumerate(classes) for g in c.elements}
    parent = list(range(len(classes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, c in enumerate(classes):
        for x in G.elements:
            for g in c.elements:
                h = G.conj(x, g)
                if h not in where:
                    raise StructuralUnavailableError(
                        f"{G.names[x]} {G.names[g]} {G.names[x]}^-1 = {G.names[h]} is not W-regular")
                a, b = find(i), find(where[h])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for i in range(len(classes)):
        blocks.setdefault(find(i), []).append(i)
    return [tuple(v) for _, v in sorted(blocks.items())]


def _solve_block(algebra: CrystallineRing, classes: list[RayClass], block: tuple[int, ...]) -> Lattice:
    """Kernel of sigma_x(d_C) f(x,g) = d_C' over the unknowns d_C, C in the block."""
    G = algebra.group
    cc = algebra.cocycle
    n = algebra.ring.rank
    pos = {c: k for k, c in enumerate(block)}
    where = {g: i for i, c in enumerate(classes) for g in c.elements}
    nvar = n * len(block)
    rows: list[list[int]] = []
    for ci in block:
        for x in G.elements:
            for g in classes[ci].elements:
                cj = where[G.conj(x, g)]
                mat, den = _scaled_aut(cc.sigma(x), cc.f(x, g))
                for k in range(n):
                    row = [0] * nvar
                    for j in range(n):
                        row[pos[ci] * n + j] += mat[k][j]
                    row[pos[cj] * n + k] -= den
                    if any(row):
                        rows.append(row)
    ker = lattice_kernel(rows, nvar) if rows else Lattice.full(nvar)
    vecs = []
    for w in ker.basis:
        v = [0] * algebra.ambient_rank
        for ci in block:
            d = w[pos[ci] * n:(pos[ci] + 1) * n]
            for g in classes[ci].elements:
                v[g * n:(g + 1) * n] = d
        vecs.append(v)
    return Lattice.span(vecs, algebra.ambient_rank)


def _class_eigen(algebra: CrystallineRing, conds: Sequence[tuple[int, FracScalar]], invert: bool) -> Lattice:
    cc = algebra.cocycle
    module = Lattice.full(algebra.ring.rank)
    for x, f in conds:
        module = module & eigenlattice(cc.sigma(x), f.inverse() if invert else f)
    return module


def center_nonabelian(algebra: CrystallineRing) -> NonAbelianCenterReport:
    G = algebra.group
    if G.is_abelian:
        raise WrongMethodError("center_nonabelian needs a non-Abelian grading group")
    cc = algebra.cocycle
    ok, wit = cc.check_urc()
    if not ok:
        x, s = wit
        raise StructuralUnavailableError(
            f"URC fails on W: f({G.names[x]}, {G.names[s]}) = {cc.f(x, s)} != 1; "
            "structural formulas do not apply, use the oracle")
    W = tuple(cc.W)
    elems = tuple(G.elements)
    classes = algebra.ray_classes()
    blocks = []
    lat = Lattice.zero(algebra.ambient_rank)
    for block in _saturation_classes(algebra, classes):
        sol = _solve_block(algebra, classes, block)
        blocks.append(SaturationBlock(block, sol))
        lat = lat + sol

    fixed = cc.fixed_ring
    class_data = []
    single = Lattice.zero(algebra.ambient_rank)
    for c in classes:
        norm = G.normalizer_of_set(c.elements)
        is_normal = len(norm) == G.order
        constant = all(cc.f(x, g) == cc.f(x, c.representative) for x in elems for g in c.elements)
        comp = alt = None
        g_regular = None
        if constant:
            conds = tuple((x, cc.f(x, c.representative)) for x in elems
                          if not cc.f(x, c.representative).is_one())
            g_regular = not conds
            if g_regular:
                comp = Component(c.elements, "fixed", fixed)
                alt = fixed
            else:
                comp = Component(c.elements, "eigen", _class_eigen(algebra, conds, True), conds)
                alt = _class_eigen(algebra, conds, False)
            if fixed.rank == 1 and comp.module.rank == 1:
                comp = Component(comp.degrees, comp.kind, comp.module, comp.conditions,
                                 _ring_elem(algebra, comp.module.basis[0]))
            if is_normal:
                single = single + embed_component(algebra, comp.module, c.elements)
        class_data.append(ClassData(c, norm, is_normal, constant, g_regular, comp, alt))
    W_reg = cc.f_regular(W)
    G_reg = cc.f_regular(elems)
    return NonAbelianCenterReport(algebra, W, W_reg, G_reg, classes, blocks, class_data, lat, single)


def attach_oracle_modules(report: NonAbelianCenterReport, oracle: CenterLattice) -> None:
    """Fill each class's oracle coefficient module {d : d v_C in Z(A)}."""
    A = report.algebra
    report.class_data = [
        ClassData(d.ray_class, d.normalizer, d.is_normal, d.constant, d.g_regular, d.component,
                  d.alt_module, homogeneous_component(A, oracle.lattice, d.ray_class.elements))
        for d in report.class_data
    ]
    report.single_class_check = cross_check(report.single_class_lattice, oracle)


# ---------------------------------------------------------------------------
# trivial-center criteria


def trivial_center_diagnostics(report: AbelianCenterReport | NonAbelianCenterReport,
                               oracle: CenterLattice | None = None) -> TrivialVerdict:
    A = report.algebra
    e = A.group.identity
    reasons = []
    if report.W == (e,):
        reasons.append("W = {e}")
    if isinstance(report, AbelianCenterReport):
        if report.W_reg == (e,):
            reasons.append("W_reg = {e}")
        both = [s for s in report.W_reg if s in report.G_reg]
        eigen_zero = all(c.module.is_zero() for c in report.components if c.kind == "eigen")
        if both == [e] and eigen_zero:
            reasons.append("W_reg & G_reg = {e} and I_s = 0 for all s in W_reg \\ G_reg")
    else:
        data = report.class_data
        is_e = [d.ray_class.elements == (e,) for d in data]
        if all(d.is_normal == flag for d, flag in zip(data, is_e)):
            reasons.append("N_G(C) = G only for C = {e}")
        delta = [i for i, d in enumerate(data) if d.constant]
        if all(is_e[i] for i in delta):
            reasons.append("Delta = {C_e}")
        reg = [i for i in delta if data[i].g_regular]
        nonreg_zero = all(data[i].component.module.is_zero() for i in delta if not data[i].g_regular)
        if all(is_e[i] for i in reg) and nonreg_zero:
            reasons.append("G_reg & Delta = {C_e} and I_C = 0 for all C in Delta \\ G_reg")
    oracle_trivial = None
    if oracle is not None:
        oracle_trivial = oracle.lattice == _trivial_lattice(A)
    verdict = TrivialVerdict(tuple(reasons), oracle_trivial)
    report.trivial = verdict
    return verdict
