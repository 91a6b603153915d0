"""Center report documents: a JSON-ready dict plus a text rendering.

Every lattice in a document is stored as ``{"ambient_rank": n, "basis": [...]}``
with an HNF basis, so :func:`report_lattices` recovers them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .center import (
    AbelianCenterReport,
    CenterLattice,
    Component,
    NonAbelianCenterReport,
    attach_oracle_modules,
    center_abelian,
    center_nonabelian,
    center_oracle,
    cross_check,
    rank_one_check,
    trivial_center_diagnostics,
)
from .graded import CrystallineRing, StructuralUnavailableError
from .lattice import Lattice

__all__ = ["CenterRun", "run_center", "report_lattices", "render_text", "METHODS",
           "EXIT_OK", "EXIT_FAILURE", "EXIT_PARSE", "EXIT_INAPPLICABLE"]

METHODS = ("structural", "oracle", "both")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_INAPPLICABLE = 3

DOCUMENTED_FINDING = (
    "single-class diagnostic under-reports the center: classes that are not normal in G "
    "combine into saturation classes whose solutions the single-class form cannot express; "
    "the saturation-class system matches the oracle")


@dataclass
class CenterRun:
    document: dict
    exit_code: int
    oracle: CenterLattice | None
    structural: AbelianCenterReport | NonAbelianCenterReport | None


def _lat(lat: Lattice) -> dict:
    return lat.to_json()


def _names(A: CrystallineRing, elems) -> list[str]:
    return [A.group.names[g] for g in elems]


def _component_doc(A: CrystallineRing, c: Component) -> dict:
    out: dict[str, Any] = {
        "degrees": _names(A, c.degrees),
        "kind": c.kind,
        "module": _lat(c.module),
        "generator": str(c.generator) if c.generator is not None else None,
    }
    if c.kind == "eigen":
        out["conditions"] = [[A.group.names[x], str(f)] for x, f in c.conditions]
        chk = rank_one_check(A, c.module)
        out["rank_one"] = {
            "checked": chk.checked,
            "rank": chk.rank,
            "fixed_rank": chk.fixed_rank,
            "product_witness": [str(w) for w in chk.product_witness] if chk.product_witness else None,
            "ok": chk.ok,
        }
    return out


def _graded_doc(A: CrystallineRing, report, lattice: Lattice) -> dict:
    basis = report.crystalline_graded_basis()
    out: dict[str, Any] = {"fixed_ring_is_integers": report.fixed_ring_is_integers}
    if basis is None:
        out["holds"] = None
        out["basis"] = None
    else:
        spanned = Lattice.span([A.to_vector(v) for v in basis], A.ambient_rank)
        out["holds"] = spanned == lattice
        out["basis"] = [str(v) for v in basis]
    return out


def _abelian_doc(A: CrystallineRing, r: AbelianCenterReport) -> dict:
    return {
        "kind": "abelian",
        "support": _names(A, r.support),
        "components": [_component_doc(A, c) for c in r.components],
        "lattice": _lat(r.lattice),
        "all_x_intersection_agrees": r.all_x_agrees,
    }


def _nonabelian_doc(A: CrystallineRing, r: NonAbelianCenterReport) -> dict:
    classes = []
    for d in r.class_data:
        classes.append({
            "elements": _names(A, d.ray_class.elements),
            "normalizer": _names(A, d.normalizer),
            "normal": d.is_normal,
            "in_delta": d.constant,
            "g_regular": d.g_regular,
            "component": _component_doc(A, d.component) if d.component is not None else None,
            "module_f_orientation": _lat(d.alt_module) if d.alt_module is not None else None,
            "oracle_module": _lat(d.oracle_module) if d.oracle_module is not None else None,
            "orientation": d.orientation,
        })
    chk = r.single_class_check
    return {
        "kind": "nonabelian",
        "ray_classes": [_names(A, c.elements) for c in r.ray_classes],
        "saturation_classes": [
            {"classes": list(b.classes), "solution": _lat(b.solution)} for b in r.blocks],
        "delta": r.delta,
        "classes": classes,
        "lattice": _lat(r.lattice),
        "single_class": {
            "lattice": _lat(r.single_class_lattice),
            "equals_oracle": chk.equal if chk is not None else None,
            "under_reports": r.single_class_under_reports if chk is not None else None,
        },
    }


def _verdict_doc(v) -> dict:
    return {
        "verdict": v.label,
        "reasons": list(v.reasons),
        "oracle_trivial": v.oracle_trivial,
        "consistent": v.consistent,
    }


def run_center(A: CrystallineRing, method: str = "both") -> CenterRun:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    G = A.group
    cc = A.cocycle
    reg = cc.regularity()
    doc: dict[str, Any] = {
        "name": A.name,
        "method": method,
        "group": list(G.names),
        "ring": A.ring.label,
        "ambient_rank": A.ambient_rank,
        "W": _names(A, reg.W),
        "W_reg": _names(A, reg.W_reg),
        "G_reg": _names(A, reg.G_reg_elements),
        "urc": {"holds": reg.urc_holds,
                "witness": _names(A, reg.urc_witness) if reg.urc_witness else None},
        "fixed_ring": _lat(cc.fixed_ring),
    }
    oracle = center_oracle(A) if method in ("oracle", "both") else None
    if oracle is not None:
        doc["oracle"] = {
            "lattice": _lat(oracle.lattice),
            "rank": oracle.rank,
            "support": _names(A, oracle.support()),
            "elements": [str(z) for z in oracle.elements()],
        }
    structural = None
    exit_code = EXIT_OK
    findings: list[str] = []
    if method in ("structural", "both"):
        try:
            if G.is_abelian:
                structural = center_abelian(A)
            else:
                structural = center_nonabelian(A)
        except StructuralUnavailableError as exc:
            doc["structural"] = {"available": False, "reason": str(exc)}
            if method == "structural":
                exit_code = EXIT_INAPPLICABLE
        if structural is not None:
            if isinstance(structural, NonAbelianCenterReport) and oracle is not None:
                attach_oracle_modules(structural, oracle)
            body = (_abelian_doc(A, structural) if isinstance(structural, AbelianCenterReport)
                    else _nonabelian_doc(A, structural))
            body["available"] = True
            body["rank"] = structural.lattice.rank
            verdict = trivial_center_diagnostics(structural, oracle)
            body["trivial"] = _verdict_doc(verdict)
            body["crystalline_graded"] = _graded_doc(A, structural, structural.lattice)
            doc["structural"] = body
            if oracle is not None:
                chk = cross_check(structural.lattice, oracle)
                doc["cross_check"] = {
                    "equal": chk.equal,
                    "first_difference": ({"side": chk.first_difference[0],
                                          "vector": list(chk.first_difference[1])}
                                         if chk.first_difference else None),
                }
                if not chk.equal:
                    exit_code = EXIT_FAILURE
                if isinstance(structural, NonAbelianCenterReport) and structural.single_class_under_reports:
                    findings.append(DOCUMENTED_FINDING)
                if verdict.consistent is False:
                    if isinstance(structural, NonAbelianCenterReport) and structural.single_class_under_reports:
                        findings.append(f"trivial-center criterion {verdict.label!r} holds "
                                        "but the oracle center is larger than D^G")
                    else:
                        exit_code = EXIT_FAILURE
    doc["documented_findings"] = findings
    doc["exit_code"] = exit_code
    return CenterRun(doc, exit_code, oracle, structural)


def report_lattices(doc: Any, path: str = "") -> dict[str, Lattice]:
    """Every lattice in a (re-parsed) document, keyed by its JSON path."""
    out: dict[str, Lattice] = {}
    if isinstance(doc, dict):
        if set(doc) == {"ambient_rank", "basis"}:
            return {path: Lattice.from_json(doc)}
        for k, v in doc.items():
            out.update(report_lattices(v, f"{path}.{k}" if path else k))
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            out.update(report_lattices(v, f"{path}[{i}]"))
    return out


def _fmt_lattice(lat: dict) -> str:
    return f"rank {len(lat['basis'])} in Z^{lat['ambient_rank']}"


def render_text(doc: dict) -> str:
    lines = [
        f"ring {doc['name']}: {doc['ring']} graded by {{{', '.join(doc['group'])}}}",
        f"  W = {{{', '.join(doc['W'])}}}   W_reg = {{{', '.join(doc['W_reg'])}}}   "
        f"G_reg = {{{', '.join(doc['G_reg'])}}}",
        f"  URC: {'holds' if doc['urc']['holds'] else 'fails at ' + str(tuple(doc['urc']['witness']))}",
        f"  D^G: {_fmt_lattice(doc['fixed_ring'])}",
    ]
    if "oracle" in doc:
        o = doc["oracle"]
        lines.append(f"oracle center: rank {o['rank']}, support {{{', '.join(o['support'])}}}")
        lines.extend(f"  {z}" for z in o["elements"])
    s = doc.get("structural")
    if s is not None:
        if not s["available"]:
            lines.append(f"structural: unavailable ({s['reason']})")
        else:
            lines.append(f"structural center ({s['kind']}): rank {s['rank']}")
            if s["kind"] == "abelian":
                for c in s["components"]:
                    gen = f", generator {c['generator']}" if c["generator"] else ""
                    lines.append(f"  degree {c['degrees'][0]}: {c['kind']} module "
                                 f"{_fmt_lattice(c['module'])}{gen}")
            else:
                for i, b in enumerate(s["saturation_classes"]):
                    members = " ".join("{" + ",".join(s["ray_classes"][k]) + "}" for k in b["classes"])
                    lines.append(f"  Gamma_{i}: {members} -> {_fmt_lattice(b['solution'])}")
                sc = s["single_class"]
                lines.append(f"  single-class layer: {_fmt_lattice(sc['lattice'])}, "
                             f"equals oracle: {sc['equals_oracle']}")
            t = s["trivial"]
            lines.append(f"  trivial-center verdict: {t['verdict']}")
            g = s["crystalline_graded"]
            if g["holds"] is not None:
                lines.append(f"  crystalline graded over D^G: {g['holds']} with basis "
                             f"{', '.join(g['basis'])}")
    if "cross_check" in doc:
        lines.append(f"cross-check: {'equal' if doc['cross_check']['equal'] else 'DISCREPANCY'}")
    for f in doc["documented_findings"]:
        lines.append(f"documented finding: {f}")
    return "\n".join(lines) + "\n"
