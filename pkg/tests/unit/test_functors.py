from perlab.functors import (
    Const,
    ExpFrom,
    Id,
    Prod,
    RealizableFunctor,
    check_identity_realizer,
    check_monotone,
    check_psi_repair,
    check_realizable,
    contravariant_map,
    eval_object,
    from_expr,
    psi_repair,
    reference_action_key,
    search_nonmonotone,
    synthesize_tracker,
)
from perlab.kernel.combinators import first, pair_of, second
from perlab.kernel.reduction import Converged, run_tracker, value_of
from perlab.pers import exponential, same_relation, standard_lattice

from tests.fixtures import A, B, CHAIN, EMPTY, TINY, suite


def test_expressions_print_as_written():
    assert str(Prod(Id(), ExpFrom(A, Const(B)))) == "(prod id (exp A (const B)))"


def test_object_map():
    assert eval_object(Const(A), B, TINY) is A
    assert eval_object(Id(), B, TINY) is B
    assert same_relation(eval_object(ExpFrom(A, Id()), B, TINY), exponential(A, B, TINY))


def test_synthesized_trackers():
    assert synthesize_tracker(Id()) == 2
    # λx. I, that is K I
    assert synthesize_tracker(Const(A)) == 8


def test_reference_action():
    # K S sends 0 to 1, which is its own class in B
    assert reference_action_key(Id(), 5, A, B, 0, TINY) == 1
    assert reference_action_key(Const(B), 5, A, B, 1, TINY) == 1


def test_realizable():
    for expr in [Id(), Const(A), ExpFrom(A, Id())]:
        functor = from_expr(expr, TINY)
        verdict = check_realizable(functor, CHAIN, TINY)
        assert verdict.ok, (expr, verdict.witness)
        assert verdict.checked > 0


def test_wrong_tracker_is_caught():
    # K x is constant: it cannot act as the identity functor
    functor = from_expr(Id(), TINY, phi=0)
    verdict = check_realizable(functor, CHAIN, TINY)
    assert verdict.status == "fail"
    assert verdict.witness is not None


def test_monotone():
    for expr in suite():
        functor = from_expr(expr, TINY)
        assert check_monotone(functor.obj, CHAIN).ok, expr


def test_contravariant_map_is_not_monotone():
    contravariant = contravariant_map(A, TINY)
    verdict = check_monotone(contravariant, [EMPTY, A])
    assert verdict.status == "fail"
    assert verdict.witness == "({}, A)"
    found = search_nonmonotone(
        [("id", from_expr(Id(), TINY).obj), ("contravariant", contravariant)], [EMPTY, A]
    )
    assert found == ("contravariant", "({}, A)")


def test_identity_realizer():
    verdict = check_identity_realizer(from_expr(Id(), TINY), CHAIN, TINY)
    assert verdict.ok
    assert verdict.details == ("phi·i = i as codes",)
    verdict = check_identity_realizer(from_expr(ExpFrom(A, Id()), TINY), CHAIN, TINY)
    assert verdict.ok
    assert "not i as a code" in verdict.details[0]


def test_psi_repair():
    psi = psi_repair(8)
    assert psi(2, 100) == Converged(2, 0)
    assert value_of(psi(5, 100)) == 2
    for expr in [Id(), Const(A), ExpFrom(A, Id())]:
        assert check_psi_repair(from_expr(expr, TINY), CHAIN, TINY).ok, expr


def test_products_are_realizable():
    for expr in [Prod(Id(), Id()), Prod(Id(), ExpFrom(A, Id()))]:
        functor = from_expr(expr, TINY)
        for check in (check_realizable, check_psi_repair, check_identity_realizer):
            verdict = check(functor, CHAIN, TINY)
            assert verdict.ok, (expr, check.__name__, verdict.witness)


def test_product_tracker_acts_on_components():
    functor = from_expr(Prod(Id(), Const(A)), TINY)
    # K K sends everything to K
    lifted = value_of(run_tracker(functor.phi, 3, TINY.fuel))
    image = value_of(run_tracker(lifted, pair_of(1, 0, TINY.fuel), TINY.fuel))
    assert first(image, TINY.fuel) == 0
    assert second(image, TINY.fuel) == 0
    assert image == pair_of(0, 0, TINY.fuel)


def test_suite_over_the_standard_lattice():
    lattice = standard_lattice()
    expressions = [
        Id(),
        Const(A),
        Prod(Id(), Id()),
        ExpFrom(A, Id()),
        Prod(Id(), Const(B)),
        ExpFrom(B, Const(A)),
        Prod(Const(B), ExpFrom(A, Id())),
        ExpFrom(A, Prod(Id(), Id())),
    ]
    for expr in expressions:
        functor = from_expr(expr, TINY)
        assert check_monotone(functor.obj, lattice).ok, expr
        verdict = check_realizable(functor, lattice, TINY)
        assert verdict.ok, (expr, verdict.witness)
        assert verdict.excluded_by_fuel == 0


def test_psi_repair_fails_on_a_non_monotone_map():
    contravariant = RealizableFunctor("contravariant", contravariant_map(A, TINY), 2)
    verdict = check_psi_repair(contravariant, [EMPTY, A], TINY)
    assert verdict.status == "fail"
    assert verdict.witness.startswith("x = 2, {} -> A")
