import json

from tracelab.finalg import algebra_from_presentation
from tracelab.numsgp import (
    is_translate,
    parse_ideal_text,
    semigroup_new,
    trace,
)
from tracelab.verify import (
    CheckResult,
    VerificationReport,
    build_artinian_catalog,
    build_semigroup_catalog,
    catalog_product_algebra,
    default_caps,
    emit_report,
    emit_reports,
    run_artinian_lp_suite,
    run_catalog,
    run_identity_suite,
    run_semigroup_lp_suite,
)


def _status(report, name):
    return next(c.status for c in report.checks if c.name == name)


# --- artinian lp suite -----------------------------------------------------------

def test_artinian_suite_gorenstein_ring():
    report = run_artinian_lp_suite(algebra_from_presentation(2, ("x",), ("x^2",)))
    assert report.verdict == "holds"
    assert all(c.status == "pass" for c in report.checks)
    assert len(report.checks) == 6


def test_artinian_suite_field():
    report = run_artinian_lp_suite(algebra_from_presentation(2, (), ()))
    assert report.verdict == "holds"
    assert not report.has_failures


def test_artinian_suite_non_gorenstein_witness(fat_point):
    report = run_artinian_lp_suite(fat_point)
    assert report.verdict == "fails"
    assert _status(report, "ring-is-artinian-gorenstein") == "fail"
    assert _status(report, "five-way-equivalence") == "pass"
    witness = next(c.witness for c in report.checks if c.name == "every-ideal-equals-its-trace")
    assert witness == {"ideal": "x", "trace": "x, y"}


def test_artinian_suite_cap_produces_skips(chain_algebra):
    report = run_artinian_lp_suite(chain_algebra, {"dim": 2, "gaps": 24, "hom": 22})
    assert report.verdict == "undecided"
    assert all(c.status == "skipped" for c in report.checks)
    assert report.summary == {"pass": 0, "fail": 0, "skipped": len(report.checks)}


def test_artinian_suite_decides_without_search(fat_point):
    # trace containment forces a dimension gap whenever I != tr(I), so the
    # lp conditions resolve through the fast paths even with a zero budget
    report = run_artinian_lp_suite(fat_point, {"dim": None, "gaps": 24, "hom": 0})
    assert report.verdict == "fails"
    assert _status(report, "every-ideal-equals-its-trace") == "fail"
    assert _status(report, "every-ideal-isomorphic-to-its-trace") == "fail"


def test_identity_suite_hom_budget_skips(fat_point):
    report = run_identity_suite(fat_point, {"dim": None, "gaps": 24, "hom": 0})
    skipped = {c.name for c in report.checks if c.status == "skipped"}
    assert skipped == {
        "trace-isomorphism-invariance",
        "hom-dimension-isomorphism-invariance",
    }
    assert not report.has_failures


# --- semigroup lp suite -----------------------------------------------------------

def test_semigroup_suite_multiplicity_two_passes():
    report = run_semigroup_lp_suite(semigroup_new((2, 3)))
    assert report.verdict == "monomial ideals pass"
    assert not report.has_failures


def test_semigroup_suite_trivial_semigroup():
    report = run_semigroup_lp_suite(semigroup_new((1,)))
    assert report.verdict == "monomial ideals pass"
    translate_checks = [c for c in report.checks if c.name.startswith("trace-is-translate")]
    assert len(translate_checks) == 1


def test_semigroup_suite_counterexample_witness():
    report = run_semigroup_lp_suite(semigroup_new((3, 4)))
    assert report.verdict == "counterexample found"
    failing = [c for c in report.checks if c.status == "fail"]
    assert failing[0].witness == {"E": "0 | 3", "trace": "3,4 | 6", "offset": None}
    assert _status(report, "verdict-matches-multiplicity-classification") == "pass"


def test_semigroup_suite_cap_skips():
    report = run_semigroup_lp_suite(semigroup_new((3, 4)), {"dim": None, "gaps": 1, "hom": 22})
    assert report.verdict == "undecided"
    assert all(c.status == "skipped" for c in report.checks)


def test_semigroup_witness_replays():
    sgp = semigroup_new((3, 4))
    report = run_semigroup_lp_suite(sgp)
    witness = next(c.witness for c in report.checks if c.status == "fail")
    replayed = parse_ideal_text(sgp, witness["E"])
    recomputed = trace(replayed)
    assert recomputed.format() == witness["trace"]
    assert is_translate(replayed, recomputed).offset is None


# --- identity suites ---------------------------------------------------------------

def test_identity_suite_semigroup_example():
    report = run_identity_suite(semigroup_new((3, 4)))
    assert not report.has_failures
    check = next(c for c in report.checks if c.name == "maximal-ideal-endomorphism-trace")
    assert check.witness["I"] == "3,4 | 6"
    assert check.witness["endomorphism_ideal"] == "0 | 3"
    assert check.witness["endomorphism_generators"] == [3, 4, 5]
    assert check.witness["trace_of_endomorphism_ideal"] == "3,4 | 6"


def test_identity_suite_artinian(chain_algebra):
    report = run_identity_suite(chain_algebra)
    assert not report.has_failures
    names = {c.name for c in report.checks}
    assert "principal-trace-equals-double-annihilator" in names
    assert "trace-containment" in names


def test_identity_suite_product_includes_factorization():
    report = run_identity_suite(catalog_product_algebra())
    assert not report.has_failures
    assert any(c.name == "product-trace-factorization" for c in report.checks)


# --- reports and emission -------------------------------------------------------------

def test_empty_report_summary():
    report = VerificationReport(ring="r", suite="s")
    assert report.summary == {"pass": 0, "fail": 0, "skipped": 0}
    text = emit_report(report, "text")
    assert "summary: pass=0 fail=0 skipped=0" in text


def test_json_report_schema_and_witness():
    report = run_semigroup_lp_suite(semigroup_new((3, 4)))
    payload = json.loads(emit_report(report, "json"))
    assert set(payload) >= {"ring", "suite", "checks", "summary"}
    for check in payload["checks"]:
        assert set(check) == {"name", "status", "witness", "anchor"}
        assert check["status"] in ("pass", "fail", "skipped")
    blob = json.dumps(payload)
    assert '"0 | 3"' in blob and '"3,4 | 6"' in blob
    assert payload["summary"] == {"pass": 5, "fail": 1, "skipped": 0}


def test_text_report_gorenstein_pass_lines():
    report = run_artinian_lp_suite(algebra_from_presentation(2, ("x",), ("x^2",)))
    text = emit_report(report, "text")
    assert text.count("[PASS]") == 6
    assert "[FAIL]" not in text


def test_skipped_checks_are_visible_and_not_passes():
    report = run_semigroup_lp_suite(semigroup_new((3, 4)), {"dim": None, "gaps": 1, "hom": 22})
    payload = json.loads(emit_report(report, "json"))
    assert payload["summary"]["pass"] == 0
    assert payload["summary"]["skipped"] >= 1
    assert all(c["witness"]["reason"] for c in payload["checks"] if c["status"] == "skipped")


def test_check_result_serialization_round_trip():
    check = CheckResult("name", "fail", "anchor", {"k": 1})
    assert check.to_dict() == {
        "name": "name",
        "status": "fail",
        "witness": {"k": 1},
        "anchor": "anchor",
    }


# --- catalog ---------------------------------------------------------------------------

def test_catalog_classifications():
    expected_gorenstein = {
        "F_2": True,
        "F_2[x]/(x^2)": True,
        "F_2[x]/(x^3)": True,
        "F_2[x]/(x^4)": True,
        "F_2[x]/(x^5)": True,
        "F_3[x]/(x^3)": True,
        "F_2[x,y]/(x^2, y^2)": True,
        "F_2[x,y]/(x^2, x*y, y^2)": False,
        "F_2[x,y]/(x^2, y^3)": True,
        "F_2[x,y,z]/(x, y, z)^2": False,
    }
    catalog = build_artinian_catalog()
    assert {label: expected for label, _, expected in catalog} == expected_gorenstein
    for label, algebra, expected in catalog:
        assert algebra.is_gorenstein() == expected, label


def test_catalog_semigroup_expectations():
    catalog = build_semigroup_catalog()
    assert [
        (label, expected) for label, _, expected in catalog
    ] == [
        ("<1>", True),
        ("<2,3>", True),
        ("<2,5>", True),
        ("<2,7>", True),
        ("<2,9>", True),
        ("<3,4>", False),
        ("<3,5>", False),
        ("<4,5>", False),
        ("<3,4,5>", False),
    ]


def test_catalog_run_is_green_and_deterministic():
    reports = run_catalog("all")
    assert not any(r.has_failures for r in reports)
    first = emit_reports(reports, "json")
    second = emit_reports(run_catalog("all"), "json")
    assert first == second


def test_catalog_lp_only():
    reports = run_catalog("lp")
    assert all(r.suite == "catalog-lp" for r in reports)
    assert len(reports) == 19  # 10 artinian + 9 semigroups
    for report in reports:
        assert {c.name for c in report.checks} <= {
            "five-way-equivalence",
            "verdict-matches-expected",
            "verdict-matches-multiplicity-classification",
        }
