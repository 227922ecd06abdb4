"""Words over the graded alphabet f_1, f_2, ... and their Hopf algebras.

The letter f_k has weight k.  Two bialgebra structures live on the span of
words: the shuffle product (bracket-free) and the quasi-shuffle product for
an additive bracket [f_a, f_b] = f_{a+b}, both with the deconcatenation
coproduct.  The graded dual carries the concatenation product; its elements
reuse the Word type and only pick up a trailing ``*`` when printed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Literal

from .algebra import LinComb, ParseError, Tensor

Pairing = Literal["zero", "additive"]
ZERO: Pairing = "zero"
ADDITIVE: Pairing = "additive"


class Word:
    """An immutable word of positive integer letters; letter k stands for f_k."""

    __slots__ = ("letters", "weight", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"letters must be positive integers, got {a!r}")
        self.letters = letters
        self.weight = sum(letters)
        self._hash = hash(("Word", letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, item) -> "Word":
        if isinstance(item, slice):
            return Word(self.letters[item])
        raise TypeError("words slice into words; use .letters for raw access")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def sort_key(self) -> tuple:
        return (self.weight, len(self.letters), self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return ".".join(f"f{a}" for a in self.letters)

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"


EMPTY_WORD = Word(())


def word(*letters: int) -> Word:
    return Word(letters)


def dual_word_str(w: Word) -> str:
    """Dual-basis printing: trailing star, ``1`` for the empty word."""
    return "1" if not w.letters else f"{w}*"


def parse_word(text: str) -> Word:
    """Parse ``f1.f2.f1`` (empty word: ``1``); errors carry the byte offset."""
    s = text.strip()
    base = text.index(s) if s else 0
    if s == "1":
        return EMPTY_WORD
    if not s:
        raise ParseError("empty word expression", 0)
    letters = []
    pos = 0
    while True:
        if pos >= len(s) or s[pos] != "f":
            raise ParseError("expected letter 'fK'", base + pos)
        pos += 1
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected digits after 'f'", base + pos)
        value = int(s[start:pos])
        if value < 1:
            raise ParseError("letter index must be positive", base + start)
        letters.append(value)
        if pos == len(s):
            return Word(letters)
        if s[pos] != ".":
            raise ParseError("expected '.' between letters", base + pos)
        pos += 1


def words_of_weight(n: int) -> list[Word]:
    """All words of total weight n (compositions of n), in canonical order."""
    return [Word(c) for c in compositions(n)]


def words_up_to_weight(n: int) -> list[Word]:
    out = [EMPTY_WORD]
    for k in range(1, n + 1):
        out.extend(words_of_weight(k))
    return out


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n, shortest first, then lexicographic."""
    if n == 0:
        yield ()
        return
    out = []
    def rec(rest: int, acc: tuple[int, ...]):
        if rest == 0:
            out.append(acc)
            return
        for part in range(1, rest + 1):
            rec(rest - part, acc + (part,))
    rec(n, ())
    yield from sorted(out, key=lambda c: (len(c), c))


def bracket_letters(a: int, b: int, pairing: Pairing) -> int | None:
    """The letter [f_a, f_b], or None when the bracket vanishes."""
    if pairing == ZERO:
        return None
    if pairing == ADDITIVE:
        return a + b
    raise ValueError(f"unknown pairing rule {pairing!r}")


def bracket_fold(letters: tuple[int, ...], pairing: Pairing) -> int | None:
    """The letter [a_1, [a_2, [..., a_k]]], or None when it vanishes."""
    if not letters:
        return None
    acc = letters[-1]
    for a in reversed(letters[:-1]):
        nxt = bracket_letters(a, acc, pairing)
        if nxt is None:
            return None
        acc = nxt
    return acc


@lru_cache(maxsize=None)
def _qshuffle(w1: Word, w2: Word, pairing: Pairing) -> LinComb:
    if not w1.letters:
        return LinComb.term(w2)
    if not w2.letters:
        return LinComb.term(w1)
    a, u = w1.letters[0], w1[1:]
    b, v = w2.letters[0], w2[1:]
    total = _qshuffle(u, w2, pairing).map_basis(lambda t: Word((a,) + t.letters))
    total = total + _qshuffle(w1, v, pairing).map_basis(lambda t: Word((b,) + t.letters))
    merged = bracket_letters(a, b, pairing)
    if merged is not None:
        total = total + _qshuffle(u, v, pairing).map_basis(lambda t: Word((merged,) + t.letters))
    return total


def quasi_shuffle(x: LinComb | Word, y: LinComb | Word, pairing: Pairing = ADDITIVE) -> LinComb:
    """Quasi-shuffle product; with the zero bracket this is the plain shuffle."""
    if isinstance(x, Word):
        x = LinComb.term(x)
    if isinstance(y, Word):
        y = LinComb.term(y)
    return x.bilinear(y, lambda a, b: _qshuffle(a, b, pairing))


def shuffle(x: LinComb | Word, y: LinComb | Word) -> LinComb:
    return quasi_shuffle(x, y, ZERO)


def concat(x: LinComb | Word, y: LinComb | Word) -> LinComb:
    """Concatenation product (the graded dual of deconcatenation)."""
    if isinstance(x, Word):
        x = LinComb.term(x)
    if isinstance(y, Word):
        y = LinComb.term(y)
    return x.bilinear(y, lambda a, b: a.concat(b))


def deconcat(w: Word) -> LinComb:
    """Deconcatenation coproduct of a basis word."""
    return LinComb((Tensor((w[:i], w[i:])), 1) for i in range(len(w.letters) + 1))


def word_counit(x: LinComb) -> Fraction:
    return x.coeff(EMPTY_WORD)


@lru_cache(maxsize=None)
def _antipode_rec(w: Word, pairing: Pairing) -> LinComb:
    if not w.letters:
        return LinComb.term(w)
    total = LinComb.zero()
    for k in range(len(w.letters)):
        total = total + quasi_shuffle(_antipode_rec(w[:k], pairing), LinComb.term(w[k:]), pairing)
    return -1 * total


def word_antipode(x: LinComb | Word, pairing: Pairing) -> LinComb:
    """Antipode of the (quasi-)shuffle Hopf algebra, by the defining recursion."""
    if isinstance(x, Word):
        x = LinComb.term(x)
    return x.map_basis(lambda w: _antipode_rec(w, pairing))


def compose_word(parts: tuple[int, ...], w: Word, pairing: Pairing) -> Word | None:
    """Contract w along a composition of its length, bracketing each block."""
    if sum(parts) != len(w.letters):
        raise ValueError("composition must refine the word length")
    out = []
    pos = 0
    for p in parts:
        letter = bracket_fold(w.letters[pos:pos + p], pairing)
        if letter is None:
            return None
        out.append(letter)
        pos += p
    return Word(out)


def word_antipode_closed(x: LinComb | Word, pairing: Pairing) -> LinComb:
    """Antipode in closed form: contractions of the reversed word, signed."""
    if isinstance(x, Word):
        x = LinComb.term(x)

    def on_word(w: Word) -> LinComb:
        n = len(w.letters)
        rev = Word(tuple(reversed(w.letters)))
        total = LinComb.zero()
        for parts in compositions(n):
            v = compose_word(parts, rev, pairing)
            if v is not None:
                total = total + LinComb.term(v, (-1) ** n)
        return total

    return x.map_basis(on_word)


def hoffman_tau(x: LinComb | Word, pairing: Pairing = ADDITIVE) -> LinComb:
    """Hoffman's exponential: sum over contractions weighted by 1/(i_1!...i_l!)."""
    if isinstance(x, Word):
        x = LinComb.term(x)

    def on_word(w: Word) -> LinComb:
        total = LinComb.zero()
        for parts in compositions(len(w.letters)):
            v = compose_word(parts, w, pairing)
            if v is not None:
                denom = 1
                for p in parts:
                    denom *= _factorial(p)
                total = total + LinComb.term(v, Fraction(1, denom))
        return total

    return x.map_basis(on_word)


def hoffman_psi(x: LinComb | Word, pairing: Pairing = ADDITIVE) -> LinComb:
    """Hoffman's logarithm: contractions weighted by (-1)^(n-l)/(i_1 ... i_l)."""
    if isinstance(x, Word):
        x = LinComb.term(x)

    def on_word(w: Word) -> LinComb:
        n = len(w.letters)
        total = LinComb.zero()
        for parts in compositions(n):
            v = compose_word(parts, w, pairing)
            if v is not None:
                denom = 1
                for p in parts:
                    denom *= p
                total = total + LinComb.term(v, Fraction((-1) ** (n - len(parts)), denom))
        return total

    return x.map_basis(on_word)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def dual_delta(x: LinComb | Word, pairing: Pairing) -> LinComb:
    """Coproduct on the concatenation dual: delta(w*) = sum (u*v, w*) u* (x) v*.

    Computed by exhaustive scan over pairs of basis words of complementary
    weight; the quasi-shuffle preserves total weight, so the scan is finite.
    """
    if isinstance(x, Word):
        x = LinComb.term(x)

    def on_word(w: Word) -> LinComb:
        total = LinComb.zero()
        for a in range(w.weight + 1):
            for u in words_of_weight(a):
                for v in words_of_weight(w.weight - a):
                    c = quasi_shuffle(u, v, pairing).coeff(w)
                    if c:
                        total = total + LinComb.term(Tensor((u, v)), c)
        return total

    return x.map_basis(on_word)


def _letter_star_images(k: int) -> list[tuple[int, ...]]:
    """Blocks (a_1..a_n) whose iterated additive bracket is f_k: compositions of k."""
    return list(compositions(k))


def tau_star(x: LinComb | Word, pairing: Pairing = ADDITIVE) -> LinComb:
    """Dual of Hoffman's logarithm, a concatenation algebra morphism.

    On a dual letter: tau*(f_k*) = sum over blocks with bracket f_k of
    (a_1...a_n)*/n!; extended to dual words by concatenation.
    """
    if pairing != ADDITIVE:
        raise ValueError("tau_star requires the additive bracket")
    if isinstance(x, Word):
        x = LinComb.term(x)

    def on_letter(k: int) -> LinComb:
        total = LinComb.zero()
        for parts in _letter_star_images(k):
            total = total + LinComb.term(Word(parts), Fraction(1, _factorial(len(parts))))
        return total

    def on_word(w: Word) -> LinComb:
        total = LinComb.term(EMPTY_WORD)
        for k in w.letters:
            total = concat(total, on_letter(k))
        return total

    return x.map_basis(on_word)


def psi_star(x: LinComb | Word, pairing: Pairing = ADDITIVE) -> LinComb:
    """Dual of Hoffman's exponential; inverse of tau_star."""
    if pairing != ADDITIVE:
        raise ValueError("psi_star requires the additive bracket")
    if isinstance(x, Word):
        x = LinComb.term(x)

    def on_letter(k: int) -> LinComb:
        total = LinComb.zero()
        for parts in _letter_star_images(k):
            n = len(parts)
            total = total + LinComb.term(Word(parts), Fraction((-1) ** (n - 1), n))
        return total

    def on_word(w: Word) -> LinComb:
        total = LinComb.term(EMPTY_WORD)
        for k in w.letters:
            total = concat(total, on_letter(k))
        return total

    return x.map_basis(on_word)


def lie_bracket(x: LinComb | Word, y: LinComb | Word) -> LinComb:
    """Commutator bracket xy - yx in the concatenation algebra."""
    return concat(x, y) - concat(y, x)


def is_lie_polynomial(x: LinComb) -> bool:
    """Primitivity test under the shuffle-dual coproduct on the concatenation side."""
    expected = LinComb.zero()
    for w, c in x.items():
        expected = expected + LinComb.term(Tensor((w, EMPTY_WORD)), c)
        expected = expected + LinComb.term(Tensor((EMPTY_WORD, w)), c)
    return dual_delta(x, ZERO) == expected
