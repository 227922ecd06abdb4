"""Linear combinations, tensors, pairings, and convolution plumbing."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopftrees.algebra import (
    LinComb,
    PairingError,
    ParseError,
    Tensor,
    functional_convolve,
    kronecker,
    lincomb_tensor,
    pair_eval,
    splice_at,
)
from hopftrees.words import word

rationals = st.fractions(max_denominator=6)
lincombs = st.lists(
    st.tuples(st.sampled_from("abcd"), rationals), max_size=6
).map(LinComb)


def test_term_addition_merges_bases():
    assert (LinComb.term(word(1)) + LinComb.term(word(2))).sorted_items() == [
        (word(1), Fraction(1)),
        (word(2), Fraction(1)),
    ]


def test_rational_coefficients_accumulate():
    x = LinComb.term("x", Fraction(1, 2))
    y = LinComb.term("x", 3).scale(Fraction(1, 3))
    assert (x + y) == LinComb.term("x", Fraction(3, 2))


def test_zero_coefficients_are_dropped():
    x = LinComb.term("x", 2)
    diff = x - x
    assert not diff
    assert diff == LinComb.zero()
    assert len(diff) == 0
    assert str(diff) == "0"


def test_coeff_and_support():
    x = LinComb.term(word(1), 2) - LinComb.term(word(2))
    assert x.coeff(word(1)) == 2
    assert x.coeff(word(9)) == 0
    assert x.support() == [word(1), word(2)]


def test_graded_part_filters_by_degree():
    x = LinComb.term("a") + LinComb.term("bb") + LinComb.term("ccc")
    assert x.graded_part(len, 2) == LinComb.term("a") + LinComb.term("bb")


def test_kronecker_pairing_values():
    w = LinComb.term("w")
    assert pair_eval(w, w, kronecker) == 1
    assert pair_eval(LinComb.term("u"), LinComb.term("v"), kronecker) == 0
    x = LinComb.term("a", 2) + LinComb.term("b")
    y = LinComb.term("a") - LinComb.term("b")
    assert pair_eval(x, y, kronecker) == 1


def test_pair_eval_reports_undefined_pairs():
    with pytest.raises(PairingError, match="pairing undefined"):
        pair_eval(LinComb.term("a"), LinComb.term("b"), lambda u, v: None)


def test_tensor_is_ordered():
    assert Tensor(("a", "b")) == Tensor(("a", "b"))
    assert Tensor(("a", "b")) != Tensor(("b", "a"))
    assert str(Tensor(("a", "b"))) == "a (x) b"


def test_lincomb_tensor_is_bilinear():
    x = LinComb.term("a", 2) + LinComb.term("b")
    y = LinComb.term("c", Fraction(1, 3))
    prod = lincomb_tensor(x, y)
    assert prod.coeff(Tensor(("a", "c"))) == Fraction(2, 3)
    assert prod.coeff(Tensor(("b", "c"))) == Fraction(1, 3)


def test_splice_at_replaces_one_slot():
    x = LinComb.term(Tensor(("a", "b")))
    dup = lambda s: LinComb.term(Tensor((s, s)))
    assert splice_at(x, 0, dup) == LinComb.term(Tensor(("a", "a", "b")))
    assert splice_at(x, 1, dup) == LinComb.term(Tensor(("a", "b", "b")))


def test_functional_convolve_uses_the_coproduct():
    # a fake group-like element: delta(x) = x (x) x
    cop = lambda b: LinComb.term(Tensor((b, b)))
    f = lambda b: Fraction(2)
    g = lambda b: Fraction(3)
    assert functional_convolve(f, g, cop)("x") == 6


def test_parse_error_carries_offset():
    err = ParseError("unbalanced bracket", 3)
    assert err.offset == 3
    assert str(err) == "unbalanced bracket at offset 3"


@given(lincombs, lincombs, lincombs)
def test_addition_is_associative(x, y, z):
    assert (x + y) + z == x + (y + z)


@given(lincombs, lincombs)
def test_addition_is_commutative(x, y):
    assert x + y == y + x


@given(lincombs, rationals, rationals)
def test_scaling_distributes_over_coefficients(x, a, b):
    assert x.scale(a) + x.scale(b) == x.scale(a + b)


@given(lincombs)
def test_subtracting_self_gives_zero(x):
    assert not (x - x)
    assert x + LinComb.zero() == x


@given(lincombs, lincombs)
def test_map_basis_is_linear(x, y):
    f = lambda b: b * 2
    assert (x + y).map_basis(f) == x.map_basis(f) + y.map_basis(f)


@given(lincombs, lincombs)
def test_bilinear_respects_scaling(x, y):
    f = lambda a, b: a + b
    assert x.scale(2).bilinear(y, f) == x.bilinear(y, f).scale(2)
