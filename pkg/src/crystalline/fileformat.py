"""JSON ring-specification files.

A file fixes the group (element names and Cayley table), the base ring, the
twist (one automorphism per element) and the cocycle table. See
``docs/file_format.md`` for the schema and a commented example.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .cocycle import Cocycle, CocycleTable, Twist, validate_cocycle
from .expr import ExpressionError
from .graded import CrystallineRing
from .groups import GroupTable
from .rings import RingAut, RingElement, RingSpec, RingValidationError

__all__ = ["SpecFileError", "RingSpecFile", "parse_spec", "load_spec", "spec_to_json", "dump_json"]


class SpecFileError(ValueError):
    """Malformed specification file; ``field`` locates the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


@dataclass(frozen=True)
class RingSpecFile:
    name: str
    description: str
    group: GroupTable
    ring: RingSpec
    twist: Twist
    table: CocycleTable

    def cocycle(self) -> Cocycle:
        return validate_cocycle(self.group, self.ring, self.twist, self.table)

    def build(self) -> CrystallineRing:
        return CrystallineRing(self.cocycle(), name=self.name)


def _require(data: dict, key: str, where: str, kind: type) -> Any:
    if key not in data:
        raise SpecFileError(f"{where}{key}", "missing field")
    value = data[key]
    if not isinstance(value, kind):
        raise SpecFileError(f"{where}{key}", f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _parse_ring_literal(ring: RingSpec, value: Any, field: str) -> RingElement:
    if isinstance(value, bool):
        raise SpecFileError(field, "booleans are not ring elements")
    if isinstance(value, int):
        return ring.one() * value
    if isinstance(value, list):
        if len(value) != ring.rank or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
            raise SpecFileError(field, f"coordinate array must hold {ring.rank} integers")
        return ring.element(value)
    if isinstance(value, str):
        try:
            return ring.parse(value)
        except (ExpressionError, ValueError) as exc:
            raise SpecFileError(field, f"cannot parse {value!r}: {exc}") from None
    raise SpecFileError(field, f"unsupported ring literal {value!r}")


def _parse_aut(ring: RingSpec, value: Any, field: str) -> RingAut:
    try:
        if isinstance(value, str):
            return RingAut.from_name(ring, value)
        if isinstance(value, list):
            return RingAut.from_matrix(ring, value)
    except (RingValidationError, TypeError, ValueError) as exc:
        raise SpecFileError(field, str(exc)) from None
    raise SpecFileError(field, f"automorphism must be a name or a matrix, got {value!r}")


def parse_spec(data: Any) -> RingSpecFile:
    """Parse a decoded JSON document.

    Raises :class:`SpecFileError` on malformed input and
    :class:`~crystalline.groups.GroupValidationError` when the Cayley table
    is not a group. Cocycle identities are checked later by :meth:`RingSpecFile.cocycle`.
    """
    if not isinstance(data, dict):
        raise SpecFileError("", "top level must be an object")
    name = data.get("name", "unnamed")
    description = data.get("description", "")
    gdata = _require(data, "group", "", dict)
    names = _require(gdata, "elements", "group.", list)
    if not all(isinstance(x, str) for x in names):
        raise SpecFileError("group.elements", "element names must be strings")
    name_table = _require(gdata, "table", "group.", list)
    for i, row in enumerate(name_table):
        if not isinstance(row, list) or not all(isinstance(x, str) for x in row):
            raise SpecFileError(f"group.table[{i}]", "rows must be arrays of element names")
        unknown = [x for x in row if x not in names]
        if unknown:
            raise SpecFileError(f"group.table[{i}]", f"unknown element {unknown[0]!r}")
    group = GroupTable.from_names(names, name_table)

    rdata = _require(data, "ring", "", dict)
    kind = _require(rdata, "kind", "ring.", str)
    conductor = rdata.get("conductor")
    try:
        ring = RingSpec.from_kind(kind, conductor)
    except RingValidationError as exc:
        raise SpecFileError("ring", str(exc)) from None

    tdata = data.get("twist", {})
    if not isinstance(tdata, dict):
        raise SpecFileError("twist", "expected an object keyed by element name")
    for key in tdata:
        if key not in names:
            raise SpecFileError(f"twist.{key}", "unknown group element")
    ident = RingAut.identity(ring)
    auts = tuple(_parse_aut(ring, tdata[g], f"twist.{g}") if g in tdata else ident for g in names)

    cdata = data.get("cocycle", "trivial")
    if cdata == "trivial":
        table = CocycleTable.trivial(group, ring)
    else:
        if not isinstance(cdata, list) or len(cdata) != group.order:
            raise SpecFileError("cocycle", f"expected 'trivial' or a {group.order}x{group.order} table")
        rows = []
        for i, row in enumerate(cdata):
            if not isinstance(row, list) or len(row) != group.order:
                raise SpecFileError(f"cocycle[{i}]", f"expected {group.order} entries")
            rows.append(tuple(_parse_ring_literal(ring, v, f"cocycle[{i}][{j}]")
                              for j, v in enumerate(row)))
        table = CocycleTable(tuple(rows))
    return RingSpecFile(str(name), str(description), group, ring, Twist(auts), table)


def load_spec(path: str | Path) -> RingSpecFile:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from None
    return parse_spec(data)


def spec_to_json(spec: RingSpecFile) -> dict:
    G = spec.group
    ring: dict[str, Any] = {"kind": spec.ring.kind}
    if spec.ring.conductor is not None:
        ring["conductor"] = spec.ring.conductor
    twist = {}
    for g in G.elements:
        aut = spec.twist[g]
        twist[G.names[g]] = aut.name if aut.name else [list(r) for r in aut.matrix]
    return {
        "name": spec.name,
        "description": spec.description,
        "group": {"elements": list(G.names), "table": G.name_table()},
        "ring": ring,
        "twist": twist,
        "cocycle": [[str(a) for a in row] for row in spec.table.alpha],
    }


def _is_flat(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (list, dict)) for v in value)


def dump_json(obj: Any, indent: int = 0) -> str:
    """Deterministic JSON with innermost arrays kept on one line."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {dump_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list):
        if _is_flat(obj):
            return json.dumps(obj, ensure_ascii=False)
        items = [f"{pad}{dump_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return json.dumps(obj, ensure_ascii=False)
