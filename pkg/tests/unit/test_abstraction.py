import pytest

from perlab.errors import UnboundVariableError
from perlab.kernel.abstraction import abstract, free_variables, lam
from perlab.kernel.combinators import (
    B_TERM,
    FST,
    PAIR,
    SND,
    comp,
    first,
    pair_of,
    second,
    stdlib,
)
from perlab.kernel.laws import check_pca_laws
from perlab.kernel.reduction import Fuel, normalize, run_chain, value_of
from perlab.kernel.terms import App, I, K, S, Var, encode

x, y, z = Var("x"), Var("y"), Var("z")


def test_bracket_rules():
    assert abstract("x", x) == I
    assert abstract("x", K) == App(K, K)
    assert abstract("x", K(x)) == S(K(K), I)


def test_lam_behaves():
    first_of_two = lam("xy", x)
    assert value_of(normalize(first_of_two(S, I), 100)) == 1
    swap = lam("xyz", x(z, y))
    assert value_of(normalize(swap(K, S, I), 100)) == 2


def test_free_variables():
    assert free_variables(S(x, K(y), x)) == ["x", "y"]
    with pytest.raises(UnboundVariableError):
        lam("x", y)


def test_composition():
    assert value_of(normalize(B_TERM(K, I, S), 100)) == encode(K(S))
    assert value_of(run_chain(100, comp(2, 2), 7)) == 7
    assert value_of(run_chain(100, comp(5, 2), 0)) == 1


def test_pairs():
    pair = pair_of(1, 2, 1000)
    assert pair is not None
    assert first(pair, 1000) == 1
    assert second(pair, 1000) == 2
    assert value_of(run_chain(1000, PAIR, 0, 2)) == pair_of(0, 2, 1000)


def test_stdlib_names():
    names = stdlib().as_dict()
    assert names["I"] == 2 and names["K"] == 0 and names["S"] == 1
    assert names["FST"] == FST and names["SND"] == SND
    assert stdlib().COMP(2, 2) == comp(2, 2)


def test_pca_laws():
    verdict = check_pca_laws(100, Fuel(10_000), seed=3, samples=50)
    assert verdict.ok
    assert verdict.checked > 100
    assert "50 seeded samples (seed 3)" in verdict.details[0]


def test_two_argument_laws_run_for_every_pair():
    verdict = check_pca_laws(40, Fuel(10_000), samples=10)
    assert verdict.ok
    # I x = x, then three laws over 41 * 41 pairs, then 2 * 10 samples
    assert verdict.checked > 3 * 40 * 40
    assert "S f g x = f x (g x)" in verdict.details[0]
