import pytest

from perlab import config
from perlab.errors import WorkbenchError
from perlab.workbench import exit_code, parse_workbench, registry, run_checks

HEADER = """
(universe (terms 1))
(fuel 2000)
(per E (classes))
(per A (carrier 0) (classes (0)))
(per B (carrier 0 1) (classes (0) (1)))
(functor ConstA (const A))
(functor Id id)
"""


def run(text):
    return run_checks(parse_workbench(HEADER + text))


def statuses(reports):
    return [report.status for report in reports]


def test_registry_holds_every_kind():
    assert sorted(registry.asserts) == [
        "fixpoint",
        "identity-realizer",
        "initial",
        "iso",
        "monotone",
        "morphism",
        "pca-laws",
        "psi-repair",
        "realizable",
        "related",
        "subper",
    ]
    assert sorted(registry.runs) == ["check-all", "fixpoint", "initial-algebra", "monotonize"]


def test_empty_document_passes():
    reports = run_checks(parse_workbench(""))
    assert reports == []
    assert exit_code(reports) == 0


def test_assertions():
    reports = run(
        """
        (assert (subper E A))
        (assert (subper B A))
        (assert (not (subper B A)))
        (assert (not (subper A B)))
        (assert (morphism I A B))
        (assert (related B 1 1))
        (assert (not (related B 0 1)))
        """
    )
    assert statuses(reports) == ["pass", "fail", "pass", "fail", "pass", "pass", "pass"]
    assert reports[1].verdict.witness == "1 is in B but not in A"
    assert reports[3].verdict.witness == "(subper A B) holds"
    assert exit_code(reports) == 1


def test_iso_reports_its_inverse():
    (report,) = run("(assert (iso I A A))")
    assert report.status == "pass"
    assert report.verdict.details == ("inverse tracked by 2",)


def test_fixpoints():
    reports = run(
        """
        (assert (fixpoint ConstA A))
        (assert (fixpoint Id A))
        (run fixpoint ConstA)
        """
    )
    assert statuses(reports) == ["pass", "fail", "pass"]
    assert reports[1].verdict.witness == "the least fixpoint of Id is {}, not A"
    assert reports[2].name == "run fixpoint ConstA"


def test_errors_become_failures():
    config.session.set_max_iter(1)
    try:
        (report,) = run("(run fixpoint ConstA)")
    finally:
        config.session.set_max_iter(config.DEFAULT_MAX_ITER)
    assert report.status == "fail"
    assert report.verdict.witness.startswith("No fixpoint at this budget")


def test_errors_stay_failures_under_not():
    config.session.set_max_iter(1)
    try:
        reports = run(
            """
            (assert (fixpoint ConstA A))
            (assert (not (fixpoint ConstA A)))
            (assert (not (fixpoint ConstA B)))
            """
        )
    finally:
        config.session.set_max_iter(config.DEFAULT_MAX_ITER)
    assert statuses(reports) == ["fail", "fail", "fail"]
    assert all(report.verdict.error for report in reports)
    assert reports[1].verdict.witness.startswith("No fixpoint at this budget")
    assert exit_code(reports) == 1


def test_undecided_is_not_a_pass():
    # the code of S I I, which diverges when applied to itself
    reports = run(
        """
        (per X (classes (96)))
        (assert (morphism 96 X X))
        (assert (not (morphism 96 X X)))
        """
    )
    assert statuses(reports) == ["undecided", "undecided"]
    assert reports[0].verdict.excluded_by_fuel == 1
    assert exit_code(reports) == 1


def test_functor_checks():
    reports = run(
        """
        (family chain E A B)
        (assert (monotone Id chain))
        (assert (monotone ConstA))
        (assert (realizable ConstA chain))
        (assert (identity-realizer Id chain))
        (assert (psi-repair ConstA chain))
        (assert (pca-laws 50))
        """
    )
    assert statuses(reports) == ["pass"] * 6
    assert exit_code(reports) == 0


def test_initial_algebra_run():
    reports = run(
        """
        (algebra alpha (functor ConstA) (carrier A) (structure I))
        (algebra beta (functor ConstA) (carrier B) (structure I))
        (family algs alpha beta)
        (assert (initial ConstA algs))
        (run initial-algebra ConstA algs din-experiment)
        """
    )
    assert [report.name for report in reports[1:4]] == [
        "run initial-algebra ConstA algs din-experiment: cone",
        "run initial-algebra ConstA algs din-experiment: structure map",
        "run initial-algebra ConstA algs din-experiment: initiality",
    ]
    assert reports[4].name.startswith("run initial-algebra ConstA algs din-experiment: din-experiment: ")
    assert statuses(reports) == ["pass"] * 5


def test_monotonize_run():
    reports = run(
        """
        (family chain E A B)
        (run monotonize Id chain)
        """
    )
    assert [report.name for report in reports] == [
        "run monotonize Id chain: monotone Id",
        "run monotonize Id chain: monotone Id*",
        "run monotonize Id chain: realizable Id*",
        "run monotonize Id chain: yoneda iso",
    ]
    assert statuses(reports) == ["pass"] * 4


def test_check_all():
    reports = run("(run check-all)")
    names = [report.name for report in reports]
    assert names[0] == "run check-all: pca-laws"
    assert "run check-all: fixpoint ConstA" in names
    assert "run check-all: realizable Id" in names
    assert "run check-all: psi-repair ConstA" in names
    assert exit_code(reports) == 0


def test_reports_carry_the_budget():
    (report,) = run("(assert (subper E A))")
    assert report.budget.info() == {"universe": "terms:1", "fuel": 2000}


def test_run_file(tmp_path):
    import perlab

    source = tmp_path / "lab.wb"
    source.write_text(HEADER + "(assert (subper B A))\n", encoding="utf8")
    config.session.set_redirect("capture")
    try:
        reports = perlab.run_file(source, "text")
        output = config.session.get_captured()
    finally:
        config.session.set_redirect(None)
    assert exit_code(reports) == 1
    assert "0 passed, 1 failed, 0 undecided" in output


def test_per_expressions():
    reports = run(
        """
        (assert (related (exp A A) I (K K)))
        (assert (morphism I (prod A B) (prod B B)))
        (assert (subper (meet A B) A))
        (assert (subper (exp A A) (exp E A)))
        (assert (not (subper (exp E A) (exp A A))))
        """
    )
    assert statuses(reports) == ["pass"] * 5


def test_malformed_per_expression():
    with pytest.raises(WorkbenchError):
        parse_workbench(HEADER + "(assert (subper (exp A) A))")
    with pytest.raises(WorkbenchError):
        parse_workbench(HEADER + "(assert (subper (pow A A) A))")


def test_check_all_with_a_family():
    reports = run(
        """
        (family chain E A B)
        (run check-all chain)
        """
    )
    names = [report.name for report in reports]
    assert "run check-all chain: psi-repair Id" in names
    assert "run check-all chain: realizable Id*" in names
    assert "run check-all chain: yoneda iso Id" in names
    assert exit_code(reports) == 0
