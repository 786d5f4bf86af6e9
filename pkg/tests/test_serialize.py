import json
import random

import pytest

from affinoid.catalog import entries, get_entry, make_abelian
from affinoid.groupoid import AlgebroidSection, validate_axioms
from affinoid.poly import Poly
from affinoid.serialize import (InputError, REPORT_SCHEMA, check_record,
                                dumps_report, field_from_json, field_to_json,
                                groupoid_from_json, groupoid_to_json,
                                report_payload, section_from_json,
                                section_to_json)

from conftest import rand_form, rand_mv


def test_field_round_trips():
    rng = random.Random(41)
    for _ in range(20):
        F = rand_mv(rng, 3, rng.randint(0, 2))
        assert field_from_json(field_to_json(F)) == F
        w = rand_form(rng, 3, rng.randint(0, 2))
        assert field_from_json(field_to_json(w)) == w


def test_field_json_is_canonical():
    rng = random.Random(42)
    F = rand_mv(rng, 3, 2)
    a = json.dumps(field_to_json(F), sort_keys=True)
    b = json.dumps(field_to_json(field_from_json(field_to_json(F))),
                   sort_keys=True)
    assert a == b


def test_field_diagnostics_name_the_offender():
    with pytest.raises(InputError, match="kind"):
        field_from_json({"dim": 1, "degree": [1, 0], "coeffs": []})
    with pytest.raises(InputError, match="degree"):
        field_from_json({"kind": "mv", "dim": 1, "degree": [1], "coeffs": []})
    with pytest.raises(InputError, match="coeffs\\[0\\]"):
        field_from_json({"kind": "mv", "dim": 1, "degree": [1, 0],
                         "coeffs": [{"idx": [0], "cov_idx": []}]})
    with pytest.raises(InputError, match="poly"):
        field_from_json({"kind": "mv", "dim": 1, "degree": [1, 0],
                         "coeffs": [{"idx": [0], "cov_idx": [],
                                     "poly": "x1 +"}]})
    with pytest.raises(InputError, match="'mv'"):
        field_from_json({"kind": "mv", "dim": 1, "degree": [1, 1],
                         "coeffs": []})


def test_section_round_trip():
    G = get_entry("pair2").groupoid
    sec = AlgebroidSection(G, 1, 1, {((0,), (1,)): Poly.variable(2, 0)})
    assert section_from_json(section_to_json(sec), G) == sec
    bad = section_to_json(sec)
    bad["rank"] = 7
    with pytest.raises(InputError, match="rank"):
        section_from_json(bad, G)


def test_groupoid_round_trips():
    for entry in entries():
        G = entry.groupoid
        G2 = groupoid_from_json(groupoid_to_json(G))
        assert G2.dim_G == G.dim_G and G2.dim_M == G.dim_M
        assert G2.src == G.src and G2.tgt == G.tgt
        assert G2.mult == G.mult and G2.inv == G.inv
        assert validate_axioms(G2).ok


def test_groupoid_import_validates_axioms():
    d = groupoid_to_json(make_abelian(1))
    d["inv"] = ["x1"]  # identity is not an inverse for addition
    with pytest.raises(InputError, match="axiom"):
        groupoid_from_json(d)


def test_groupoid_extension_keys_rule():
    d = groupoid_to_json(make_abelian(1))
    # the abelian group has identity comp_param, so the extension keys
    # may be dropped
    d.pop("comp_section")
    d.pop("chain3")
    assert validate_axioms(groupoid_from_json(d)).ok
    d2 = groupoid_to_json(get_entry("pair1").groupoid)
    d2.pop("comp_section")
    with pytest.raises(InputError, match="comp_section"):
        groupoid_from_json(d2)


def test_report_shape_and_determinism():
    recs = [check_record("b.check", "inst2", "exact", 3, True),
            check_record("a.check", "inst1", "sampled", 3, False,
                         {"value": "2/3"}),
            check_record("a.check", "inst2", "exact", 3, True)]
    payload = report_payload(recs, 3, "sampled")
    assert payload["schema"] == REPORT_SCHEMA
    assert payload["seed"] == 3 and payload["mode"] == "sampled"
    assert payload["pass"] is False
    assert [(r["instance"], r["check"]) for r in payload["checks"]] == \
        [("inst1", "a.check"), ("inst2", "a.check"), ("inst2", "b.check")]
    text = dumps_report(payload)
    assert text == dumps_report(report_payload(list(reversed(recs)), 3,
                                               "sampled"))
    assert text.endswith("\n")
    parsed = json.loads(text)
    assert parsed["checks"][0]["witness"] == {"value": "2/3"}
    # no witness key on passing records
    assert "witness" not in parsed["checks"][1]
