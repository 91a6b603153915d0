import json

import pytest

from crystalline.catalog import CATALOG, catalog_spec
from crystalline.fileformat import SpecFileError, dump_json, load_spec, parse_spec, spec_to_json
from crystalline.groups import GroupValidationError


def base_doc():
    return {
        "name": "c2",
        "group": {"elements": ["e", "x"], "table": [["e", "x"], ["x", "e"]]},
        "ring": {"kind": "cyclotomic", "conductor": 4},
        "twist": {"x": "conj"},
        "cocycle": "trivial",
    }


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_round_trip(name):
    spec = catalog_spec(name)
    again = parse_spec(json.loads(dump_json(spec_to_json(spec))))
    assert again.group.table == spec.group.table
    assert again.table == spec.table
    assert all(a == b for a, b in zip(again.twist.auts, spec.twist.auts))


def test_literal_forms():
    doc = base_doc()
    doc["twist"] = {"x": [[1, 0], [0, -1]]}
    doc["cocycle"] = [[1, [1, 0]], ["1", "-1"]]
    spec = parse_spec(doc)
    assert str(spec.table.alpha[1][1]) == "-1"
    assert spec.twist[1].is_identity() is False
    spec.cocycle()


@pytest.mark.parametrize("mutate,field", [
    (lambda d: d.pop("group"), "group"),
    (lambda d: d["group"].update(table=[["e", "y"], ["x", "e"]]), "group.table[0]"),
    (lambda d: d["ring"].update(conductor=7), "ring"),
    (lambda d: d["twist"].update(y="conj"), "twist.y"),
    (lambda d: d["twist"].update(x="frobenius"), "twist.x"),
    (lambda d: d.update(cocycle=[[1, 1]]), "cocycle"),
    (lambda d: d.update(cocycle=[[1, 1], [1, "1+q"]]), "cocycle[1][1]"),
    (lambda d: d.update(cocycle=[[1, 1], [1, [1, 2, 3]]]), "cocycle[1][1]"),
    (lambda d: d.update(cocycle=[[1, 1], [1, True]]), "cocycle[1][1]"),
])
def test_located_errors(mutate, field):
    doc = base_doc()
    mutate(doc)
    with pytest.raises(SpecFileError) as exc:
        parse_spec(doc)
    assert exc.value.field == field


def test_non_group_table():
    doc = base_doc()
    doc["group"]["table"] = [["e", "x"], ["x", "x"]]
    with pytest.raises(GroupValidationError):
        parse_spec(doc)


def test_json_error_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"name": "x",\n  "group": }')
    with pytest.raises(SpecFileError) as exc:
        load_spec(p)
    assert exc.value.field.startswith("line 2")


def test_dump_json_deterministic():
    doc = spec_to_json(catalog_spec("eisenstein_s3"))
    assert dump_json(doc) == dump_json(json.loads(dump_json(doc)))
