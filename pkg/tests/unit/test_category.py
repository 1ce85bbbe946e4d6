import pytest

from perlab.category import (
    Morphism,
    check_equal,
    check_tracker,
    compose,
    enumerate_homs,
    equal_morphisms,
    hom_count,
    identity,
    is_iso,
    make_morphism,
)
from perlab.errors import CategoryError
from perlab.kernel.combinators import comp
from perlab.pers import DeclaredPer

from tests.fixtures import A, B, D, SMALL, TINY


def test_identity_and_constants():
    assert check_tracker(A, A, identity(A, TINY).tracker, TINY).ok
    # K S sends everything to S
    assert check_tracker(D, B, 5, TINY).ok
    verdict = check_tracker(B, A, 2, TINY)
    assert verdict.status == "fail"
    assert verdict.witness == "2·1 = 1 is not in A"


def test_make_morphism_refuses_non_trackers():
    with pytest.raises(CategoryError):
        make_morphism(B, A, 2, TINY)


def test_compose():
    f = make_morphism(A, B, 2, SMALL)
    g = make_morphism(B, B, 5, SMALL)
    composite = compose(g, f)
    assert composite.source is A and composite.target is B
    assert equal_morphisms(composite, make_morphism(A, B, 5, SMALL))
    assert not equal_morphisms(composite, f)


def test_compose_needs_matching_endpoints():
    f = make_morphism(A, A, 2, SMALL)
    g = make_morphism(B, B, 2, SMALL)
    with pytest.raises(CategoryError):
        compose(g, f)


def test_extensional_equality():
    # I and B I I differ as codes, not as morphisms
    assert check_equal(identity(D, SMALL), Morphism(D, D, comp(2, 2), SMALL)).ok


def test_homs():
    assert hom_count(A, B, SMALL) == 2
    assert [hom.tracker for hom in enumerate_homs(A, A, TINY)] == [2]


def test_isomorphisms():
    three = DeclaredPer([[3]])
    # K (K K) sends everything to K K, and K K sends everything to K
    inverse = is_iso(Morphism(A, three, 12, SMALL), SMALL)
    assert inverse is not None
    assert inverse.tracker == 3
    assert is_iso(Morphism(A, B, 2, SMALL), SMALL) is None


def test_equality_needs_matching_endpoints():
    with pytest.raises(CategoryError):
        check_equal(identity(A, SMALL), identity(B, SMALL))
    with pytest.raises(CategoryError):
        check_equal(make_morphism(A, B, 2, SMALL), make_morphism(A, A, 2, SMALL))
