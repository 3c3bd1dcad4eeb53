from __future__ import annotations

import json

import pytest

from poscasimir.verify import (AUDIT_ONLY_TYPES, BUILTIN_TYPES, SCHEMA_VERSION, to_json,
                               verify_many, verify_type)


def _checks(section):
    return {c["check"]: c for c in section["hard"]}


def _findings(section):
    return {f["finding"]: f for f in section["report_only"]}


def test_schema_and_summary():
    report = verify_many(["A2", "B2"])
    assert report["schema"] == SCHEMA_VERSION
    assert set(report["types"]) == {"A2", "B2"}
    summary = report["summary"]
    assert summary["passed"] and summary["hard_failures"] == []
    assert summary["hard_checks"] == sum(len(s["hard"]) for s in report["types"].values())
    assert json.loads(to_json(report)) == json.loads(json.dumps(report, default=str))


def test_a2_cubic_discriminant():
    section = verify_type("A2")
    disc = _checks(section)["discriminant_exact"]
    assert disc["passed"] and disc["terms"] == 5
    assert disc["discriminant"] == "X^2*Y^2 - 4*X^3 - 4*Y^3 + 18*X*Y - 27"
    chars = _findings(section)["printed_characters"]
    assert not chars["matches_computed"] and chars["matches_sigma_image"]


def test_b2_findings():
    found = _findings(verify_type("B2"))
    assert set(found) == {"C1_monomial_misprint", "D_l_correction", "boundary_face_labels"}
    assert not found["D_l_correction"]["printed_vanishes"]
    assert found["D_l_correction"]["corrected_vanishes"]


def test_seed_determinism():
    a = to_json(verify_many(["G2"], seed=3))
    b = to_json(verify_many(["G2"], seed=3))
    assert a == b


@pytest.mark.parametrize("name", BUILTIN_TYPES)
def test_builtin_types_pass(name):
    section = verify_type(name, oracle_points=5, invariance_points=1, bound_points=10)
    failed = [c["check"] for c in section["hard"] if not c["passed"]]
    assert failed == []


def test_audit_only_types():
    report = verify_many(list(AUDIT_ONLY_TYPES))
    assert report["summary"]["passed"]
    for name in AUDIT_ONLY_TYPES:
        assert "positive_roots" in _checks(report["types"][name])
