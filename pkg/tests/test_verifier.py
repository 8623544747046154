import json

import pytest

from rumin_poisson.kernels import set_kappa_mutation
from rumin_poisson.lie_model import ConfigurationError
from rumin_poisson.verifier import (
    ANCHORS,
    PLUMBING,
    REQUIRED_ANCHORS,
    STATUSES,
    SUITES,
    Report,
    exportReport,
    load_report,
    missing_anchors,
    registry,
    runSuite,
)


def test_every_required_anchor_has_a_check():
    assert missing_anchors() == []
    assert set(REQUIRED_ANCHORS) <= set(ANCHORS)


def test_registry_well_formed():
    reg = registry()
    assert len(reg) == len(set(reg))
    for cid, chk in reg.items():
        assert chk.id == cid
        assert chk.suite in SUITES
        assert chk.anchor == PLUMBING or chk.anchor in ANCHORS
        assert chk.kind in ("identity", "printed")


def test_every_suite_nonempty():
    suites = {c.suite for c in registry().values()}
    assert suites == set(SUITES)


def test_unknown_suite():
    with pytest.raises(ConfigurationError):
        runSuite(1, "no-such-suite")


def test_summary_and_order():
    rep = runSuite(1, "kappa", 0)
    ids = [c.id for c in rep.checks]
    assert ids == sorted(ids)
    assert sum(rep.summary.values()) == len(rep.checks)
    assert rep.summary["pass"] == len(rep.checks)


def test_empty_report_summary():
    rep = Report(1, "none", "0", [])
    assert rep.summary == {s: 0 for s in STATUSES}
    data = json.loads(exportReport(rep))
    assert data["summary"] == {s: 0 for s in STATUSES}
    assert data["checks"] == []


def test_mutated_kappa_is_caught():
    set_kappa_mutation(lambda p, q, k, j, v: v + 1 if j == 0 else v)
    try:
        rep = runSuite(2, "kappa", 0)
    finally:
        set_kappa_mutation(None)
    by_id = {c.id: c for c in rep.checks}
    hit = by_id["kappa.relation_omega"]
    assert hit.status == "fail"
    assert hit.witness and hit.witness["examples"]
    assert hit.witness["examples"][0]["difference"]
    # the clean run passes again afterwards
    assert runSuite(2, "kappa", 0).summary["fail"] == 0


def test_failures_carry_witness():
    rep = runSuite(1, "basic-forms", 0)
    bad = [c for c in rep.checks if c.status in ("fail", "discrepancy")]
    assert bad
    for c in bad:
        assert c.witness


def test_json_roundtrip(tmp_path):
    rep = runSuite(1, "structure", 0)
    path = tmp_path / "r.json"
    text = exportReport(rep, "json", str(path))
    assert path.read_text() == text
    back = load_report(text)
    assert back.to_dict() == rep.to_dict()
    data = json.loads(text)
    assert set(data) == {"n", "suite", "version", "checks", "summary"}
    for c in data["checks"]:
        assert {"id", "paper_ref", "status", "elapsed_ms"} <= set(c)


def test_text_table_fixed_width():
    rep = runSuite(1, "homology", 0)
    lines = exportReport(rep, "text").splitlines()
    assert "homology.ranks" in lines[3]
    assert lines[-1].startswith("pass=")


def test_timings_opt_in():
    rep = runSuite(1, "homology", 0)
    assert json.loads(exportReport(rep))["checks"][0]["elapsed_ms"] is None
    assert json.loads(exportReport(rep, timings=True))["checks"][0]["elapsed_ms"] is not None


def test_unwritable_path():
    rep = runSuite(1, "homology", 0)
    with pytest.raises(OSError, match="/no/such/dir"):
        exportReport(rep, "json", "/no/such/dir/r.json")


def test_unknown_format():
    with pytest.raises(ConfigurationError):
        exportReport(runSuite(1, "homology", 0), "xml")


def test_seed_changes_random_checks_only():
    a = runSuite(1, "basic-forms", 0).to_dict()
    b = runSuite(1, "basic-forms", 1).to_dict()
    assert [c["status"] for c in a["checks"]] == [c["status"] for c in b["checks"]]
    assert a != b
