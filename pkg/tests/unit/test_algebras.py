import pytest

from perlab.algebras import (
    check_cone,
    check_initiality,
    check_structure_map,
    din_experiment,
    enumerate_algebra_morphisms,
    enumerate_algebras,
    is_algebra_morphism,
    limit_algebra,
    make_algebra,
    projection,
    r0_approx,
    structure_map_c,
)
from perlab.errors import CategoryError
from perlab.functors import Const, Id, Prod, from_expr, psi_repair
from perlab.kernel.reduction import run_chain, value_of

from tests.fixtures import A, B, EMPTY, TINY

CONST_A = from_expr(Const(A), TINY, name="ConstA")


def algebras():
    return [
        make_algebra(CONST_A, A, 2, TINY, "alpha"),
        make_algebra(CONST_A, B, 2, TINY, "beta"),
    ]


def test_make_algebra():
    alpha, beta = algebras()
    assert str(alpha) == "alpha"
    with pytest.raises(CategoryError):
        make_algebra(CONST_A, EMPTY, 2, TINY)
    assert len(enumerate_algebras(CONST_A, A, TINY)) == 1


def test_algebra_morphisms():
    alpha, beta = algebras()
    assert is_algebra_morphism(CONST_A, alpha, beta, 2, TINY)
    # K S sends 0 to 1, which breaks the square
    assert not is_algebra_morphism(CONST_A, alpha, beta, 5, TINY)


def test_limit_carrier():
    family = algebras()
    r0 = r0_approx(CONST_A, family, TINY)
    # K K evaluates every structure to K
    assert 3 in r0.carrier()
    assert r0.class_key(3) == (0, 0)
    assert r0.class_key(2) is None
    alpha = family[0]
    assert value_of(run_chain(1000, projection(alpha), 3)) == 0


def test_initial_algebra():
    family = algebras()
    assert check_cone(CONST_A, family, TINY).ok
    assert check_structure_map(CONST_A, family, TINY).ok
    assert check_initiality(CONST_A, family, TINY).ok
    assert str(limit_algebra(CONST_A, family, TINY).carrier) == "R0"


def test_single_algebra_family():
    family = algebras()[:1]
    assert check_initiality(CONST_A, family, TINY).ok


def test_structure_map_needs_a_code():
    repaired = CONST_A.with_tracker(psi_repair(CONST_A.phi))
    with pytest.raises(CategoryError):
        structure_map_c(repaired)
    assert structure_map_c(CONST_A) == structure_map_c(from_expr(Const(B), TINY))


def test_empty_family():
    with pytest.raises(CategoryError):
        r0_approx(CONST_A, [], TINY)


def test_din_experiment_is_reported():
    report = din_experiment(CONST_A, algebras(), TINY)
    assert report.equal in (True, False)
    assert report.equal or report.witness is not None


def test_algebra_morphisms_are_enumerated():
    alpha, beta = algebras()
    (forward,) = enumerate_algebra_morphisms(CONST_A, alpha, beta, TINY)
    assert forward.map.tracker == 2
    (backward,) = enumerate_algebra_morphisms(CONST_A, beta, alpha, TINY)
    # K K: the only map from B to A
    assert backward.map.tracker == 3


def test_identity_functor_algebra():
    identity = from_expr(Id(), TINY, name="Id")
    family = [make_algebra(identity, A, 2, TINY, "gamma")]
    assert check_cone(identity, family, TINY).ok
    assert check_structure_map(identity, family, TINY).ok
    assert check_initiality(identity, family, TINY).ok


def test_product_functor_algebra():
    square = from_expr(Prod(Id(), Id()), TINY, name="Square")
    # K K sends the only pair of A x A to K
    family = [make_algebra(square, A, 3, TINY)]
    verdict = check_initiality(square, family, TINY)
    assert verdict.ok, verdict.witness
