"""Lyndon words on the graded alphabet and the Hall set they induce.

The alphabet is {f_n : n >= 1} ordered by f_n < f_m iff n > m, so f_1 is
the largest letter.  Lyndon words (smaller than every proper suffix) index
a Hall set of labeled rooted trees via the standard factorization; the
Hall trees carry Lie elements E(t) whose decreasing products form a PBW
basis of the concatenation algebra, and the shuffle algebra is free
polynomial on the Lyndon words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import LinComb
from .trees import Forest, RootedTree, forest, graft, leaf
from .words import (EMPTY_WORD, Word, concat, lie_bracket, shuffle, word,
                    words_of_weight)


# ---------------------------------------------------------------------------
# the total order

def letter_less(a: int, b: int) -> bool:
    """f_a < f_b iff a > b; the heaviest letter is the smallest."""
    return a > b


def alpha_key(w: Word) -> tuple[int, ...]:
    """Sort key realizing the alphabetical order on words as tuple order."""
    return tuple(-k for k in w.letters)


def word_less(u: Word, v: Word) -> bool:
    return alpha_key(u) < alpha_key(v)


def word_compare(u: Word, v: Word) -> int:
    ku, kv = alpha_key(u), alpha_key(v)
    return -1 if ku < kv else (0 if ku == kv else 1)


# ---------------------------------------------------------------------------
# Lyndon words

def is_lyndon(w: Word) -> bool:
    """A nonempty word smaller than every proper nontrivial suffix."""
    if len(w) == 0:
        return False
    key = alpha_key(w)
    return all(key < key[i:] for i in range(1, len(w)))


def lyndon_generate(max_weight: int) -> list[Word]:
    """All Lyndon words of weight <= max_weight, sorted by (weight, alpha)."""
    out = [w for n in range(1, max_weight + 1)
           for w in words_of_weight(n) if is_lyndon(w)]
    out.sort(key=lambda w: (w.weight, alpha_key(w)))
    return out


def lyndon_factorize(w: Word) -> list[Word]:
    """The unique nonincreasing factorization into Lyndon words.

    Greedy: the first factor of the factorization is the longest Lyndon
    prefix.
    """
    if len(w) == 0:
        raise ValueError("cannot factorize the empty word")
    factors = []
    rest = w
    while len(rest):
        j = max(j for j in range(1, len(rest) + 1) if is_lyndon(rest[:j]))
        factors.append(rest[:j])
        rest = rest[j:]
    return factors


# ---------------------------------------------------------------------------
# Hall trees

@dataclass(frozen=True)
class HallTree:
    """A Hall rooted tree with its foliage word and standard decomposition.

    std_decomp is None exactly for single letters; otherwise (t1, t2) with
    tree = t1's tree carrying t2's tree as an extra root branch.
    """

    tree: RootedTree
    foliage: Word
    std_decomp: tuple["HallTree", "HallTree"] | None

    @property
    def weight(self) -> int:
        return self.foliage.weight

    def sort_key(self):
        return (self.weight, alpha_key(self.foliage))

    def __str__(self) -> str:
        return str(self.tree)


def _standard_split(w: Word) -> int:
    """Index of the longest proper Lyndon suffix of a Lyndon word."""
    return min(j for j in range(1, len(w)) if is_lyndon(w[j:]))


@lru_cache(maxsize=None)
def hall_tree_of_lyndon(w: Word) -> HallTree:
    if not is_lyndon(w):
        raise ValueError(f"not a Lyndon word: {w}")
    if len(w) == 1:
        return HallTree(leaf(w.letters[0]), w, None)
    j = _standard_split(w)
    t1 = hall_tree_of_lyndon(w[:j])
    t2 = hall_tree_of_lyndon(w[j:])
    return HallTree(graft(t1.tree, forest(t2.tree)), w, (t1, t2))


def hall_set(max_weight: int) -> list[HallTree]:
    return [hall_tree_of_lyndon(w) for w in lyndon_generate(max_weight)]


_FOLIAGE_CACHE: dict[RootedTree, Word] = {}


def foliage_word(t: RootedTree) -> Word:
    """Word read off a labeled tree by peeling the minimal root branch.

    On Hall trees this inverts hall_tree_of_lyndon; the recursion itself is
    defined for any fully labeled tree.
    """
    if t.label is None:
        raise ValueError("foliage needs a fully labeled tree")
    got = _FOLIAGE_CACHE.get(t)
    if got is not None:
        return got
    if not t.children:
        out = word(t.label)
    else:
        fols = [foliage_word(c) for c in t.children]
        m = min(range(len(fols)), key=lambda i: alpha_key(fols[i]))
        rest = RootedTree(t.label, t.children[:m] + t.children[m + 1:])
        out = foliage_word(rest).concat(fols[m])
    _FOLIAGE_CACHE[t] = out
    return out


def is_hall_tree(t: RootedTree) -> bool:
    """Membership in the Lyndon-induced Hall set."""
    w = foliage_word(t)
    return is_lyndon(w) and hall_tree_of_lyndon(w).tree == t


def hall_tree_less(s: HallTree | RootedTree, t: HallTree | RootedTree) -> bool:
    """The Hall order: alphabetical order of foliages."""
    ws = s.foliage if isinstance(s, HallTree) else foliage_word(s)
    wt = t.foliage if isinstance(t, HallTree) else foliage_word(t)
    return word_less(ws, wt)


# ---------------------------------------------------------------------------
# Hall forests

@dataclass(frozen=True)
class HallForest:
    """Factors in nonincreasing Hall order; repeats encode multiplicities."""

    factors: tuple[HallTree, ...]

    def __post_init__(self):
        keys = [alpha_key(t.foliage) for t in self.factors]
        if any(keys[i] < keys[i + 1] for i in range(len(keys) - 1)):
            raise ValueError("Hall forest factors must be nonincreasing")

    @property
    def weight(self) -> int:
        return sum(t.weight for t in self.factors)

    def as_forest(self) -> Forest:
        return Forest(tuple(t.tree for t in self.factors))

    def __str__(self) -> str:
        return str(self.as_forest())


def hall_forest(*factors: HallTree) -> HallForest:
    ordered = sorted(factors, key=lambda t: alpha_key(t.foliage))
    return HallForest(tuple(reversed(ordered)))


def hall_forests(weight: int) -> list[HallForest]:
    """All Hall forests of the given total weight."""
    # scanning the pool in decreasing Hall order keeps factors nonincreasing
    pool = sorted(hall_set(weight),
                  key=lambda t: alpha_key(t.foliage), reverse=True)
    out: list[HallForest] = []

    def build(start: int, remaining: int, acc: list[HallTree]) -> None:
        if remaining == 0:
            out.append(HallForest(tuple(acc)))
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if t.weight <= remaining:
                acc.append(t)
                build(i, remaining - t.weight, acc)
                acc.pop()

    build(0, weight, [])
    return out


def circ_power(t: RootedTree, k: int) -> RootedTree:
    """Right-associated grafting power t o (t o (... o t))."""
    if k < 1:
        raise ValueError("power must be >= 1")
    out = t
    for _ in range(k - 1):
        out = graft(t, forest(out))
    return out


def xi(u: HallForest) -> RootedTree:
    """Collapse a Hall forest t1^r1...tm^rm to the single rooted tree
    t1^(o r1) o (t2^(o r2) ... tm^(o rm))."""
    if not u.factors:
        raise ValueError("xi needs a nonempty Hall forest")
    groups = [(t, len(list(copies)))
              for t, copies in itertools.groupby(u.factors)]
    (t1, r1), rest = groups[0], groups[1:]
    v = Forest(tuple(circ_power(t.tree, r) for t, r in rest))
    out = graft(t1.tree, v)
    for _ in range(r1 - 1):
        out = graft(t1.tree, forest(out))
    return out


# ---------------------------------------------------------------------------
# Hall polynomials and the PBW basis

def hall_polynomial(t: HallTree, bracket: str = "rl") -> LinComb:
    """The Lie element E(t) over single-letter generators, as words.

    E(leaf f_k) is the letter k; for the standard decomposition (t1, t2)
    the default orientation is [E(t2), E(t1)], flipped by bracket="lr".
    The orientations differ per bracket by a sign; only "rl" matches the
    singular frame identity.
    """
    if bracket not in ("rl", "lr"):
        raise ValueError(f"unknown bracket orientation {bracket!r}")
    if t.std_decomp is None:
        return LinComb.term(t.foliage)
    t1, t2 = t.std_decomp
    p1 = hall_polynomial(t1, bracket)
    p2 = hall_polynomial(t2, bracket)
    return lie_bracket(p2, p1) if bracket == "rl" else lie_bracket(p1, p2)


def pbw_element(u: HallForest, bracket: str = "rl") -> LinComb:
    """E(u): the concatenation product of E(t) with smallest factor first."""
    out = LinComb.term(EMPTY_WORD)
    for t in reversed(u.factors):
        out = concat(out, hall_polynomial(t, bracket))
    return out


# ---------------------------------------------------------------------------
# Definition-10 style axioms for the generated family

def _hall_branch_multisets(pool: list[HallTree], max_total: int):
    """Nonempty multisets of Hall trees with total weight <= max_total."""

    def build(start: int, remaining: int, acc: list[HallTree]):
        if acc:
            yield tuple(acc)
        for i in range(start, len(pool)):
            t = pool[i]
            if t.weight <= remaining:
                acc.append(t)
                yield from build(i, remaining - t.weight, acc)
                acc.pop()

    yield from build(0, max_total, [])


def hall_axiom_report(max_weight: int) -> list[tuple[str, bool]]:
    """Check the four Hall set axioms on everything of weight <= max_weight.

    The closure axiom is read with the standard decomposition: a candidate
    B+_a(u) with branches t1 >= ... >= tm from the Hall set belongs to the
    set iff dropping one copy of the minimal branch leaves a Hall tree t1'
    with tm > t1'.
    """
    members = hall_set(max_weight)

    total_order = len({alpha_key(t.foliage) for t in members}) == len(members)

    letters_in = all(is_hall_tree(leaf(a)) for a in range(1, max_weight + 1))

    closure = True
    for a in range(1, max_weight):
        pool = hall_set(max_weight - a)
        for branches in _hall_branch_multisets(pool, max_weight - a):
            trees = tuple(t.tree for t in branches)
            cand = RootedTree(a, trees)
            t_min = min(branches, key=lambda t: alpha_key(t.foliage))
            rest = list(trees)
            rest.remove(t_min.tree)
            peeled = RootedTree(a, tuple(rest))
            cond = (is_hall_tree(peeled)
                    and word_less(foliage_word(peeled), t_min.foliage))
            if is_hall_tree(cand) != cond:
                closure = False

    dominance = True
    for t in members:
        for c in t.tree.children:
            if not word_less(t.foliage, foliage_word(c)):
                dominance = False

    return [
        ("total-order", total_order),
        ("letters", letters_in),
        ("closure", closure),
        ("branch-dominance", dominance),
    ]


# ---------------------------------------------------------------------------
# the shuffle algebra is free polynomial on Lyndon words

@dataclass(frozen=True)
class ShuffleMonomial:
    """A commutative monomial in Lyndon generators of the shuffle algebra."""

    factors: tuple[Word, ...]

    def sort_key(self):
        return (sum(w.weight for w in self.factors), len(self.factors),
                tuple(alpha_key(w) for w in self.factors))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        groups = [(w, len(list(c))) for w, c in itertools.groupby(self.factors)]
        return " sh ".join(f"({w})^{r}" if r > 1 else f"({w})"
                           for w, r in groups)


def shuffle_monomial(*factors: Word) -> ShuffleMonomial:
    return ShuffleMonomial(tuple(sorted(factors, key=alpha_key)))


def expand_shuffle_monomial(m: ShuffleMonomial) -> LinComb:
    out = LinComb.term(EMPTY_WORD)
    for w in m.factors:
        out = shuffle(out, w)
    return out


def lyndon_poly_decompose(x: LinComb) -> LinComb:
    """Write a shuffle-algebra element as a polynomial in Lyndon words.

    Within each weight class the shuffle of the Lyndon factors of w equals
    (prod of multiplicity factorials) * w plus alphabetically smaller words,
    so eliminating the largest remaining word terminates.
    """
    result = LinComb.zero()
    by_weight: dict[int, LinComb] = {}
    for w, c in x.items():
        by_weight[w.weight] = by_weight.get(w.weight, LinComb.zero()) + LinComb.term(w, c)
    for weight in sorted(by_weight):
        if weight == 0:
            # the constant term is a polynomial in zero generators
            result = result + LinComb.term(
                shuffle_monomial(), by_weight[0].coeff(EMPTY_WORD))
            continue
        rem = by_weight[weight]
        while rem:
            w = max(rem.support(), key=alpha_key)
            factors = lyndon_factorize(w)
            denom = 1
            for _, copies in itertools.groupby(factors, key=alpha_key):
                denom *= _factorial(len(list(copies)))
            m = shuffle_monomial(*factors)
            coeff = rem.coeff(w) / denom
            result = result + LinComb.term(m, coeff)
            rem = rem - coeff * expand_shuffle_monomial(m)
    return result


def expand_lyndon_polynomial(p: LinComb) -> LinComb:
    out = LinComb.zero()
    for m, c in p.items():
        out = out + c * expand_shuffle_monomial(m)
    return out


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out
