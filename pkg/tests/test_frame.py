"""The truncated universal singular frame: exact coefficients, the forest
functional calculus, and the Hall-polynomial representation."""

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopftrees.algebra import LinComb
from hopftrees.linsolve import solve_in_span
from hopftrees.lyndon_hall import hall_polynomial, hall_set
from hopftrees.singular_frame import (
    FrameTerm,
    UnivariatePoly,
    alphaU,
    alphaU_word_sum,
    betaU,
    exp_concat,
    forest_exp,
    forest_log,
    frame_coefficient,
    frame_series,
    hall_representation,
    iterated_integral,
    prop53_check,
)
from hopftrees.trees import (
    EMPTY_FOREST,
    bplus,
    forest,
    labeled_forests_up_to_weight,
    labeled_ladder,
    leaf,
)
from hopftrees.words import EMPTY_WORD, concat, word, words_of_weight

rationals = st.fractions(max_denominator=6)
small_polys = st.lists(rationals, max_size=5).map(
    lambda cs: UnivariatePoly(tuple(cs)))


# ---------------------------------------------------------------------------
# exact polynomials


def test_poly_drops_trailing_zeros():
    assert UnivariatePoly((1, 0, 0)) == UnivariatePoly((1,))
    assert UnivariatePoly((0,)) == UnivariatePoly(())


def test_poly_const_and_eval():
    p = UnivariatePoly.const(Fraction(3, 2))
    assert p.eval(7) == Fraction(3, 2)
    q = UnivariatePoly((1, 2, 3))  # 1 + 2x + 3x^2
    assert q.eval(2) == 17


def test_weighted_integral_of_a_monomial():
    # x^i -> x^(i+k) / (i+k)
    p = UnivariatePoly((0, 0, 1))  # x^2
    got = p.weighted_integral(3)
    assert got == UnivariatePoly((0, 0, 0, 0, 0, Fraction(1, 5)))


@given(small_polys, small_polys, rationals)
def test_poly_product_evaluates_pointwise(p, q, x):
    assert (p * q).eval(x) == p.eval(x) * q.eval(x)


@given(small_polys, small_polys, small_polys)
def test_poly_product_is_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


# ---------------------------------------------------------------------------
# frame coefficients


@pytest.mark.parametrize(
    "letters, value",
    [
        ((1,), Fraction(1)),
        ((2,), Fraction(1, 2)),
        ((1, 1), Fraction(1, 2)),
        ((1, 2), Fraction(1, 3)),
        ((2, 1), Fraction(1, 6)),
        ((1, 1, 1), Fraction(1, 6)),
        ((3, 2, 1), Fraction(1, 90)),
    ],
)
def test_frame_coefficient_spots(letters, value):
    assert frame_coefficient(word(*letters)) == value


def test_frame_coefficient_rejects_the_empty_word():
    with pytest.raises(ValueError, match="nonempty"):
        frame_coefficient(EMPTY_WORD)
    with pytest.raises(ValueError, match="nonempty"):
        iterated_integral(EMPTY_WORD)


def test_iterated_integral_matches_the_partial_sum_formula():
    for n in range(1, 7):
        for w in words_of_weight(n):
            assert iterated_integral(w) == frame_coefficient(w)


# ---------------------------------------------------------------------------
# alpha^U


def test_alphaU_on_the_empty_forest():
    assert alphaU(EMPTY_FOREST) == 1
    assert alphaU_word_sum(EMPTY_FOREST) == 1


def test_alphaU_on_single_vertices():
    for k in range(1, 7):
        assert alphaU(forest(leaf(k))) == Fraction(1, k)


def test_alphaU_on_a_labeled_ladder():
    t = labeled_ladder(word(1, 2))  # f2[f1]
    assert alphaU(forest(t)) == Fraction(1, 3)


def test_alphaU_agrees_with_the_linear_extension_sum():
    for u in labeled_forests_up_to_weight(5):
        assert alphaU(u) == alphaU_word_sum(u)


def test_alphaU_needs_labels():
    with pytest.raises(ValueError, match="labeled"):
        alphaU(forest(leaf()))


# ---------------------------------------------------------------------------
# exp and log of forest functionals


def _random_table(seed, zero_at_empty):
    rng = random.Random(seed)
    table = {}
    for u in labeled_forests_up_to_weight(4):
        table[u] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    table[EMPTY_FOREST] = Fraction(0) if zero_at_empty else Fraction(1)
    return lambda u: table.get(u, Fraction(0))


def test_forest_exp_rejects_nonzero_at_empty():
    with pytest.raises(ValueError, match=r"a\(I\) = 0"):
        forest_exp(lambda u: Fraction(1))


def test_forest_log_rejects_non_unit_at_empty():
    with pytest.raises(ValueError, match=r"a\(I\) = 1"):
        forest_log(lambda u: Fraction(0))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_log_inverts_exp(seed):
    a = _random_table(seed, zero_at_empty=True)
    back = forest_log(forest_exp(a))
    for u in labeled_forests_up_to_weight(4):
        assert back(u) == a(u)


@pytest.mark.parametrize("seed", [3, 4])
def test_exp_inverts_log(seed):
    b = _random_table(seed, zero_at_empty=False)
    back = forest_exp(forest_log(b))
    for u in labeled_forests_up_to_weight(4):
        assert back(u) == b(u)


# ---------------------------------------------------------------------------
# beta^U


def test_betaU_spot_values():
    beta = betaU()
    assert beta(forest(leaf(1))) == 1
    assert beta(forest(leaf(2))) == Fraction(1, 2)
    assert beta(forest(leaf(1), leaf(1))) == 0
    hall_tree = bplus(forest(leaf(1)), 2)  # f2[f1]
    assert beta(forest(hall_tree)) == Fraction(1, 12)


def test_betaU_vanishes_on_proper_forests():
    beta = betaU()
    for u in labeled_forests_up_to_weight(4):
        if len(u.trees) >= 2:
            assert beta(u) == 0, f"beta^U nonzero on {u}"


def test_betaU_eager_equals_lazy():
    eager = betaU(3)
    lazy = betaU()
    for u in labeled_forests_up_to_weight(3):
        assert eager(u) == lazy(u)


# ---------------------------------------------------------------------------
# the series


def test_frame_series_weight_one():
    s = frame_series(1)
    assert s.terms == (FrameTerm(word(1), Fraction(1), 1, -1),)


def test_frame_series_weight_two_structure():
    s = frame_series(2)
    assert s.terms == (
        FrameTerm(word(1), Fraction(1), 1, -1),
        FrameTerm(word(2), Fraction(1, 2), 2, -1),
        FrameTerm(word(1, 1), Fraction(1, 2), 2, -2),
    )


def test_frame_series_term_counts():
    s = frame_series(5)
    for n in range(1, 6):
        count = sum(1 for t in s.terms if t.word.weight == n)
        assert count == 2 ** (n - 1)


def test_frame_series_rejects_weight_zero():
    with pytest.raises(ValueError):
        frame_series(0)


def test_frame_series_json_shape():
    payload = json.loads(frame_series(2).to_json())
    assert payload["max_weight"] == 2
    assert payload["terms"][0] == {
        "word": [1], "coeff": "1", "v_pow": 1, "z_pow": -1}
    assert payload["terms"][2]["coeff"] == "1/2"


def test_frame_series_text_lines():
    lines = frame_series(2).text_lines()
    assert lines[0] == "1 * e(-1) v^1 z^-1"
    assert lines[2] == "1/2 * e(-1)e(-1) v^2 z^-2"


# ---------------------------------------------------------------------------
# the Hall representation


def test_hall_representation_through_weight_three():
    rep = hall_representation(3)
    by_foliage = {t.foliage: c for t, c in rep.items()}
    assert by_foliage == {
        word(1): Fraction(1),
        word(2): Fraction(1, 2),
        word(3): Fraction(1, 3),
        word(2, 1): Fraction(1, 12),
    }


def _truncate(x, max_weight):
    return x.graded_part(lambda w: w.weight, max_weight)


def _log_concat(x, max_weight):
    # log(1 + y) = sum (-1)^(k+1) y^k / k in the concatenation algebra
    y = x - LinComb.term(EMPTY_WORD)
    out = LinComb.zero()
    power = LinComb.term(EMPTY_WORD)
    for k in range(1, max_weight + 1):
        power = _truncate(concat(power, y), max_weight)
        out = out + power.scale(Fraction((-1) ** (k + 1), k))
    return out


def test_hall_representation_solves_the_frame_logarithm():
    n = 4
    series = LinComb.term(EMPTY_WORD)
    for k in range(1, n + 1):
        for w in words_of_weight(k):
            series = series + LinComb.term(w, frame_coefficient(w))
    target = _log_concat(series, n)
    trees = hall_set(n)
    coords = solve_in_span([hall_polynomial(t) for t in trees], target)
    assert coords is not None
    rep = hall_representation(n)
    assert coords == [rep.coeff(t) for t in trees]


def test_exp_concat_small_case():
    got = exp_concat(LinComb.term(word(1)), 3)
    want = (
        LinComb.term(EMPTY_WORD)
        + LinComb.term(word(1))
        + LinComb.term(word(1, 1), Fraction(1, 2))
        + LinComb.term(word(1, 1, 1), Fraction(1, 6))
    )
    assert got == want


def test_exp_concat_rejects_constant_terms():
    with pytest.raises(ValueError, match="weight zero"):
        exp_concat(LinComb.term(EMPTY_WORD), 3)


def test_exponential_identity_holds_by_weight():
    assert all(prop53_check(n) for n in range(1, 5))


def test_flipped_bracket_orientation_fails_at_weight_three():
    assert prop53_check(1, bracket="lr")
    assert prop53_check(2, bracket="lr")
    assert not prop53_check(3, bracket="lr")
