import pytest

import perlab.yoneda
from perlab.errors import CategoryError
from perlab.functors import Const, ExpFrom, Id, check_realizable, from_expr, psi_repair
from perlab.pers import UNDECIDED, exponential, same_relation
from perlab.yoneda import (
    BACK_TRACKER,
    check_hom_antimonotone,
    forward_tracker,
    hom_functor,
    monotonize,
    nat_per,
    star_functor,
    yoneda_iso,
)

from tests.fixtures import A, B, CHAIN, EMPTY, TINY

ID = from_expr(Id(), TINY, name="Id")


def test_hom_functor():
    hom = hom_functor(A, TINY)
    assert str(hom) == "hom(A, -)"
    assert same_relation(hom.obj(B), exponential(A, B, TINY))
    assert hom_functor(A, TINY) is hom


def test_hom_reverses_inclusions():
    assert check_hom_antimonotone(CHAIN, TINY).ok


def test_nat_pers_are_cached_per_family():
    hom = hom_functor(A, TINY)
    assert nat_per(hom, ID, CHAIN, TINY) is nat_per(hom, ID, tuple(CHAIN), TINY)
    assert nat_per(hom, ID, CHAIN, TINY).family == tuple(CHAIN)


def test_star_of_empty_per_is_empty():
    star = star_functor(ID, CHAIN, TINY)
    assert star.obj(EMPTY).is_empty()
    assert str(star) == "Id*"


def test_yoneda_iso():
    for per in CHAIN:
        iso = yoneda_iso(ID, per, CHAIN, TINY)
        assert iso.verdict.ok, (per, iso.verdict.witness)
        assert iso.back == BACK_TRACKER


def test_yoneda_iso_needs_a_family_member():
    outside = from_expr(Const(A), TINY)
    with pytest.raises(CategoryError):
        yoneda_iso(outside, B, [EMPTY, A], TINY)


def test_forward_tracker_needs_a_code():
    repaired = ID.with_tracker(psi_repair(ID.phi))
    with pytest.raises(CategoryError):
        forward_tracker(repaired)


def test_monotonize():
    report = monotonize(ID, CHAIN, TINY)
    assert report.functor.ok
    assert report.star.ok
    assert report.star_realizable.ok, report.star_realizable.witness
    assert report.iso.ok, report.iso.witness


def test_naturality_filters_constant_maps():
    nat = nat_per(ID, ID, [A, B], TINY).per
    # K K sends every code to K: a map A -> A and a map B -> B ...
    assert 3 in exponential(A, A, TINY).carrier()
    assert 3 in exponential(B, B, TINY).carrier()
    # ... which does not commute with K S: A -> B
    assert nat.class_key(3) is None
    assert nat.class_key(2) not in (None, UNDECIDED)
    assert 2 in nat.carrier()


def test_star_has_the_classes_of_the_functor():
    for expr in [Id(), Const(A), ExpFrom(A, Id())]:
        functor = from_expr(expr, TINY)
        star = star_functor(functor, CHAIN, TINY)
        for per in CHAIN:
            found = len(star.obj(per).blocks())
            assert found == len(functor.obj(per).blocks()), (expr, per)
        assert not star.obj(A).is_empty()
        assert len(star.obj(B).carrier()) >= len(star.obj(B).blocks())


def test_star_is_realizable():
    star = star_functor(from_expr(ExpFrom(A, Id()), TINY), CHAIN, TINY)
    verdict = check_realizable(star, CHAIN, TINY)
    assert verdict.ok, verdict.witness
    assert verdict.checked > 0


def test_an_empty_star_is_no_iso(monkeypatch):
    monkeypatch.setattr(perlab.yoneda, "forward_images", lambda functor, per, budget: [])
    star = star_functor(ID, CHAIN, TINY)
    assert star.obj(A).is_empty()
    iso = yoneda_iso(ID, A, CHAIN, TINY, star)
    assert iso.verdict.status == "fail"
    assert "is not in" in iso.verdict.witness
