"""Exact truncations of the universal singular frame.

The frame expands as a series over words in the letters f_k with exact
rational coefficients 1/(k1(k1+k2)...(k1+...+kn)); these coefficients are
simultaneously values of iterated integrals over the ordered simplex, of
the functional alpha^U on labeled forests, and of the exponential of a
tree-supported functional beta^U, whose Hall-polynomial expansion is the
representation checked by prop53_check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .algebra import LinComb, Scalar, as_fraction
from .lyndon_hall import HallTree, hall_polynomial, hall_set
from .morphisms import eword_str
from .tree_hopf import coproduct_forest
from .trees import EMPTY_FOREST, Forest, RootedTree, linear_extensions, sym_order
from .words import EMPTY_WORD, Word, concat, words_of_weight

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# exact univariate polynomials

class UnivariatePoly:
    """Polynomial in one variable with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: tuple[Scalar, ...] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: Scalar) -> "UnivariatePoly":
        return cls((c,))

    def __eq__(self, other) -> bool:
        return isinstance(other, UnivariatePoly) and self.coeffs == other.coeffs

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        if not self.coeffs or not other.coeffs:
            return UnivariatePoly()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly(tuple(out))

    def weighted_integral(self, k: int) -> "UnivariatePoly":
        """g(x) -> integral of g(s) s^(k-1) ds from 0 to x."""
        out = [_ZERO] * (len(self.coeffs) + k)
        for i, a in enumerate(self.coeffs):
            out[i + k] = a / (i + k)
        return UnivariatePoly(tuple(out))

    def eval(self, x: Scalar) -> Fraction:
        x = as_fraction(x)
        total = _ZERO
        for a in reversed(self.coeffs):
            total = total * x + a
        return total


POLY_ONE = UnivariatePoly((1,))


# ---------------------------------------------------------------------------
# frame coefficients

def frame_coefficient(w: Word) -> Fraction:
    """1 over the product of the partial letter sums."""
    if not len(w):
        raise ValueError("frame coefficient needs a nonempty word")
    total = 0
    denom = 1
    for k in w.letters:
        total += k
        denom *= total
    return Fraction(1, denom)


def iterated_integral(w: Word) -> Fraction:
    """The same coefficient as an integral over the ordered simplex."""
    if not len(w):
        raise ValueError("iterated integral needs a nonempty word")
    g = POLY_ONE
    for k in w.letters:
        g = g.weighted_integral(k)
    return g.eval(1)


# ---------------------------------------------------------------------------
# alpha^U on labeled forests

def alphaU_word_sum(u: Forest) -> Fraction:
    """Sum of frame coefficients over the linear extensions of u."""
    if u == EMPTY_FOREST:
        return _ONE
    return sum((frame_coefficient(w) for w in linear_extensions(u)), _ZERO)


@lru_cache(maxsize=None)
def _alphaU_poly(t: RootedTree) -> UnivariatePoly:
    if t.label is None:
        raise ValueError("alpha^U needs a fully labeled tree")
    g = POLY_ONE
    for c in t.children:
        g = g * _alphaU_poly(c)
    return g.weighted_integral(t.label)


def alphaU(u: Forest) -> Fraction:
    """alpha^U by the integral recursion: polynomials all the way up,
    evaluated at 1 only at the end."""
    total = _ONE
    for t in u.trees:
        total *= _alphaU_poly(t).eval(1)
    return total


# ---------------------------------------------------------------------------
# exp and log of forest functionals

def _convolution_powers(a: Callable[[Forest], Scalar]):
    cache: dict[tuple[int, Forest], Fraction] = {}

    def power(k: int, u: Forest) -> Fraction:
        if k == 0:
            return _ONE if u == EMPTY_FOREST else _ZERO
        if k == 1:
            return as_fraction(a(u))
        key = (k, u)
        if key not in cache:
            total = _ZERO
            for t, c in coproduct_forest(u).items():
                left, right = t.parts
                av = as_fraction(a(left))
                if av:
                    total += c * av * power(k - 1, right)
            cache[key] = total
        return cache[key]

    return power


def forest_exp(a: Callable[[Forest], Scalar]) -> Callable[[Forest], Fraction]:
    """Convolution exponential; the argument must kill the empty forest."""
    if as_fraction(a(EMPTY_FOREST)):
        raise ValueError("forest_exp needs a(I) = 0")
    power = _convolution_powers(a)

    def exp_a(u: Forest) -> Fraction:
        if u == EMPTY_FOREST:
            return _ONE
        total = _ZERO
        fact = 1
        for k in range(1, u.size + 1):
            fact *= k
            total += power(k, u) / fact
        return total

    return exp_a


def forest_log(a: Callable[[Forest], Scalar]) -> Callable[[Forest], Fraction]:
    """Convolution logarithm; the argument must send the empty forest to 1."""
    if as_fraction(a(EMPTY_FOREST)) != 1:
        raise ValueError("forest_log needs a(I) = 1")

    def reduced(u: Forest) -> Fraction:
        return as_fraction(a(u)) - (_ONE if u == EMPTY_FOREST else _ZERO)

    power = _convolution_powers(reduced)

    def log_a(u: Forest) -> Fraction:
        if u == EMPTY_FOREST:
            return _ZERO
        total = _ZERO
        for k in range(1, u.size + 1):
            total += Fraction((-1) ** (k + 1), k) * power(k, u)
        return total

    return log_a


def betaU(max_weight: int | None = None) -> Callable[[Forest], Fraction]:
    """The tree-supported logarithm of alpha^U.

    When max_weight is given, values on all labeled forests up to that
    weight are computed eagerly.
    """
    log_alpha = forest_log(alphaU)
    if max_weight is not None:
        from .trees import labeled_forests_up_to_weight
        for u in labeled_forests_up_to_weight(max_weight):
            log_alpha(u)
    return log_alpha


# ---------------------------------------------------------------------------
# the series and its Hall representation

@dataclass(frozen=True)
class FrameTerm:
    word: Word
    coeff: Fraction
    v_pow: int
    z_pow: int


@dataclass(frozen=True)
class FrameSeries:
    max_weight: int
    terms: tuple[FrameTerm, ...]

    def to_json(self) -> str:
        payload = {
            "max_weight": self.max_weight,
            "terms": [
                {
                    "word": list(t.word.letters),
                    "coeff": str(t.coeff),
                    "v_pow": t.v_pow,
                    "z_pow": t.z_pow,
                }
                for t in self.terms
            ],
        }
        return json.dumps(payload, separators=(",", ":"))

    def text_lines(self) -> list[str]:
        return [f"{t.coeff} * {eword_str(t.word)} v^{t.v_pow} z^{t.z_pow}"
                for t in self.terms]


def frame_series(max_weight: int) -> FrameSeries:
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    terms = []
    for n in range(1, max_weight + 1):
        for w in sorted(words_of_weight(n), key=lambda w: w.sort_key()):
            terms.append(FrameTerm(w, frame_coefficient(w), w.weight, -len(w)))
    return FrameSeries(max_weight, tuple(terms))


def hall_representation(max_weight: int) -> LinComb:
    """Hall-coefficient series of the frame logarithm, weight <= N.

    The coefficient of a Hall tree t is beta^U(t)/|sym(t)|.  The symmetry
    order is forced by the biorthogonality <E(t), pi(s)> = |sym(s)| delta_ts
    of the Hall Lie elements against the linear-extension images: beta^U(s)
    pairs the logarithm of the word series against pi(s), so the raw value
    overcounts each Hall coefficient by exactly |sym(s)|.
    """
    beta = betaU()
    return LinComb((t, beta(Forest((t.tree,))) / sym_order(t.tree))
                   for t in hall_set(max_weight))


def _truncate_words(x: LinComb, max_weight: int) -> LinComb:
    return x.graded_part(lambda w: w.weight, max_weight)


def exp_concat(x: LinComb, max_weight: int) -> LinComb:
    """Exponential in the concatenation algebra, truncated by weight.

    Requires every term of x to have positive weight.
    """
    if any(w.weight == 0 for w in x.support()):
        raise ValueError("exponent must vanish in weight zero")
    x = _truncate_words(x, max_weight)
    out = LinComb.term(EMPTY_WORD)
    power = LinComb.term(EMPTY_WORD)
    fact = 1
    for k in range(1, max_weight + 1):
        power = _truncate_words(concat(power, x), max_weight)
        fact *= k
        out = out + power.scale(Fraction(1, fact))
    return out


def prop53_check(max_weight: int, bracket: str = "rl") -> bool:
    """Word-by-word equality of the frame series with the exponential of
    the Hall representation, through the given weight.

    Exact for every weight with the default bracket orientation; the
    flipped orientation first fails at weight 3.
    """
    lhs = LinComb.term(EMPTY_WORD)
    for n in range(1, max_weight + 1):
        for w in words_of_weight(n):
            lhs = lhs + LinComb.term(w, frame_coefficient(w))
    rep = LinComb.zero()
    for t, c in hall_representation(max_weight).items():
        rep = rep + c * hall_polynomial(t, bracket)
    return lhs == exp_concat(rep, max_weight)
