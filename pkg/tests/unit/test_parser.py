import pytest

from perlab.errors import WorkbenchError
from perlab.functors import Const, Id, Prod
from perlab.token_utils import read_sexprs, tokenize
from perlab.workbench import parse_run, parse_workbench

DOC = """
; a comment
(universe (terms 2))
(fuel 500)
(per R (carrier 0) (classes (0)))
(per Q (classes (0) (1)))
(family small R Q)
(functor F (prod id (const R)))
(functor G F)
(algebra alg (functor F) (carrier R) (structure I))
(assert (subper R Q))
(assert (not (subper Q R)))
(run fixpoint F)
"""


def test_tokens_know_where_they_are():
    tokens = tokenize("(per\n  R)")
    assert [token.string for token in tokens] == ["(", "per", "R", ")"]
    assert tokens[2].start == (2, 3)
    assert tokens[2] == "R"


def test_unbalanced_parentheses():
    with pytest.raises(WorkbenchError) as info:
        read_sexprs("(per R")
    assert (info.value.row, info.value.col) == (1, 1)
    with pytest.raises(WorkbenchError) as info:
        read_sexprs("\n  )")
    assert (info.value.row, info.value.col) == (2, 3)


def test_declarations():
    doc = parse_workbench(DOC)
    assert doc.universe == "terms:2"
    assert doc.fuel == 500
    assert str(doc.pers["R"]) == "R"
    assert doc.pers["Q"].related(1, 1)
    assert doc.families["small"] == ["R", "Q"]
    assert doc.functors["F"] == Prod(Id(), Const(doc.pers["R"]))
    assert doc.functors["G"] is doc.functors["F"]
    assert doc.algebras["alg"].structure == 2
    assert [check.label for check in doc.checks] == [
        "(subper R Q)",
        "(not (subper Q R))",
        "run fixpoint F",
    ]
    assert doc.checks[1].negated
    assert doc.checks[2].is_run


def test_empty_document():
    doc = parse_workbench("; nothing here\n")
    assert doc.checks == []
    assert doc.universe is None


def error_for(text):
    with pytest.raises(WorkbenchError) as info:
        parse_workbench(text)
    return info.value


def test_duplicate_name_points_at_second_declaration():
    error = error_for("(per R (classes (0)))\n(per R (classes (1)))")
    assert (error.row, error.col) == (2, 6)
    assert "already declared" in error.message


def test_classes_must_partition_the_carrier():
    error = error_for("(per R (carrier 0 1) (classes (0)))")
    assert error.row == 1
    assert "partition" in error.message


def test_unknown_names_are_suggested():
    error = error_for("(per Rel (classes (0)))\n(assert (subper Rel Rle))")
    assert error.suggestions == ["Rel"]
    assert str(error).startswith("line 2, column 21:")
    assert str(error).endswith("(did you mean: Rel?)")


def test_unknown_form_and_check():
    assert error_for("(pre R (classes (0)))").suggestions == ["per"]
    assert error_for("(per R (classes (0)))\n(assert (subpr R R))").suggestions == ["subper"]


def test_wrong_argument_kinds():
    text = "(per R (classes (0)))\n(family rs R)\n"
    error_for(text + "(assert (subper R))")
    error_for(text + "(assert (monotone R))")
    error_for("(per R (classes (0)))\n(functor F id)\n(algebra a (functor F) (carrier R) (structure I))\n"
              "(family as a)\n(run monotonize F as)")


def test_universe_and_fuel_only_once():
    error_for("(fuel 10)\n(fuel 20)")
    error_for("(universe (terms 1))\n(universe (codes 5))")
    error_for("(fuel 0)")
    error_for("(universe (terms 9))")


def test_term_literals_in_structures():
    doc = parse_workbench(
        "(per R (classes (0)))\n(functor F id)\n(algebra a (functor F) (carrier R) (structure (K K)))"
    )
    assert doc.algebras["a"].structure == 3


def test_run_given_on_the_command_line():
    doc = parse_workbench(DOC)
    form = parse_run(doc, "fixpoint G")
    assert form.is_run and form.label == "run fixpoint G"
    with pytest.raises(WorkbenchError):
        parse_run(doc, "fixpoint H")
