import pytest

from cambrian.sortable import coxeter_elements
from cambrian.verify import sortable_all_choices, verify_suite

from conftest import ctx_of, group


@pytest.mark.parametrize("name", ["A1", "B2", "I2(5)", "A3"])
def test_suite_passes(name):
    report = verify_suite(group(name), name=name)
    assert report.passed, [r.line() for r in report.results if not r.passed]
    assert len(report.contexts) == len(coxeter_elements(group(name)))


def test_report_json_shape():
    doc = verify_suite(group("B2"), name="B2").to_json()
    assert doc["passed"] and doc["order"] == 8
    assert {r["name"] for r in doc["results"]} >= {
        "theorem: Theta_c equals the Cambrian congruence",
        "c-sortable count equals W-Catalan number (6)",
    }


def test_failures_are_reported():
    # a wrong name makes the formula checks fail with the observed values
    report = verify_suite(group("B2"), [ctx_of("B2", (0, 1))], name="A2")
    failed = {r.name for r in report.results if not r.passed}
    assert failed == {"group order equals product of degrees (6)", "c-sortable count equals W-Catalan number (5)"}
    assert "FAIL" in "\n".join(report.lines())


def test_recursive_choices_b2():
    c = ctx_of("B2", (0, 1))
    memo = {}
    outcomes = [sortable_all_choices(c, w, memo) for w in range(8)]
    assert all(len(o) == 1 for o in outcomes)
    assert sum(True in o for o in outcomes) == 6
