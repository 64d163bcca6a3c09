import json
import os
from pathlib import Path

import pytest

import brumer

FIXTURES = Path(os.environ.get("BRUMER_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def checks(rep):
    return {c["name"]: c for c in rep["checks"]}


def test_fixture_passes():
    rep = brumer.report(FIXTURES / "q_zeta3_T5.case")
    assert rep["exit_code"] == 0
    assert checks(rep)["brumer_stark"]["verdict"] == "pass"
    assert checks(rep)["annihilation"]["verdict"] == "pass"


def test_zeroed_fixture_fails():
    rep = brumer.report(FIXTURES / "q_zeta3_T5_zeroed.case")
    assert rep["exit_code"] == 2
    assert checks(rep)["brumer_stark"]["error"] == "CharacterIdentityFails"


def test_theta_f3():
    t = brumer.theta(3, smooth=[5])
    assert t["coefficients"] == ["1", "-1"]
    assert t["routes_agree"] and t["deligne_ribet"] and t["integral"]


def test_theta_not_integral_without_condition():
    t = brumer.theta(3, smooth=[2])
    assert t["coefficients"] == ["1/2", "-1/2"]
    assert not t["deligne_ribet"]


def test_tate_cyclic():
    assert brumer.tate([4], degree=2) == ["4"]
    assert brumer.tate([2], multipliers=[-1], degree=1) == ["2"]


def test_errors_are_translated():
    with pytest.raises(brumer.BrumerError, match="SchemaError"):
        brumer.verify_text("[]")
    with pytest.raises(ValueError):
        brumer.theta(0)


def test_strict_provenance():
    case = json.loads((FIXTURES / "q_zeta3_T5.case").read_text())
    del case["class_group"]["provenance"]
    with pytest.raises(brumer.BrumerError):
        brumer.verify_text(json.dumps(case), strict_provenance=True)
    rep = json.loads(brumer.verify_text(json.dumps(case)))
    assert "/class_group" in rep["unprovenanced"]


def test_selftest():
    outcomes = brumer.selftest(seed=3, rounds=2)
    assert outcomes and all(o["passed"] for o in outcomes)
