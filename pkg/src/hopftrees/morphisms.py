"""Morphisms linking the tree Hopf algebras, word algebras, and
(quasi-)symmetric functions.

Contents: the linear-extension morphism pi and its kernel generators, the
quasi-symmetric monomial basis with its quasi-shuffle product, the four
ladder-tree square maps alpha_1..alpha_4 with their duals, Zhao's
homomorphism and its dual, the truncated lifts rho/beta/theta/Z_u/F, and a
data-driven commuting-diagram checker.

Encoding conventions: NSYM words in the z_n generators and enveloping
algebra words in the e_{-n} generators are both stored as Word values over
positive integers; only formatting and the choice of maps distinguish
them.  SYM lives inside QSYM as combinations of monomial basis elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .algebra import LinComb, ParseError, Scalar, Tensor, as_fraction
from .linsolve import solve_in_span
from .trees import (EMPTY_FOREST, Forest, PlanarForest, PlanarTree,
                    RootedTree, bplus, forest, graft, ladder,
                    labeled_ladder, leaf, linear_extensions,
                    enumerate_trees, planar_ladder,
                    planar_variants, forget_order_forest, sym_order)
from .tree_hopf import gl_product, gl_unit
from .words import (ADDITIVE, EMPTY_WORD, Word, quasi_shuffle, shuffle, word,
                    words_of_weight)


def _aslc(x) -> LinComb:
    return x if isinstance(x, LinComb) else LinComb.term(x)


# ---------------------------------------------------------------------------
# the linear-extension morphism pi

def pi(x: LinComb | Forest) -> LinComb:
    """Sum of the words read along all linear extensions of the forest."""

    def on_forest(u: Forest) -> LinComb:
        return LinComb((w, 1) for w in linear_extensions(u))

    return _aslc(x).map_basis(on_forest)


def alpha_of(x: LinComb | Forest,
             coeffs: Mapping[Word, Scalar] | Callable[[Word], Scalar]) -> Fraction:
    """Evaluate a word-indexed coefficient family on a labeled forest."""
    if callable(coeffs):
        lookup = coeffs
    else:
        lookup = lambda w: coeffs[w]
    return pi(x).functional(lambda w: as_fraction(lookup(w)))


def circ(t: RootedTree, u: Forest | RootedTree) -> Forest:
    """t o u: graft the forest's roots onto the root of t, as a forest."""
    v = u if isinstance(u, Forest) else Forest((u,))
    return Forest((graft(t, v),))


def kernel_generators(max_weight: int) -> list[LinComb]:
    """Generators of ker(pi) up to the given weight.

    Three families over labeled trees: the symmetrized-grafting relation
    for m = 2, 3, the one-level nested relation s o t o z + s o z o t
    - s o (tz), and the cyclic relation s o (tz) + z o (ts) + t o (sz)
    - tzs.  They overlap; all are emitted.
    """
    from .trees import labeled_forests_up_to_weight

    out: list[LinComb] = []
    forests = labeled_forests_up_to_weight(max_weight)

    for u in forests:
        ts = u.trees
        if len(ts) in (2, 3):
            gen = LinComb.term(u)
            for i, t in enumerate(ts):
                rest = Forest(ts[:i] + ts[i + 1:])
                gen = gen - LinComb.term(circ(t, rest))
            out.append(gen)

    pairs = [u.trees for u in forests if len(u.trees) == 2]
    singles = [u.trees[0] for u in forests if len(u.trees) == 1]
    for s in singles:
        for t, z in pairs:
            if s.weight + t.weight + z.weight > max_weight:
                continue
            gen = (LinComb.term(circ(s, Forest(circ(t, z).trees)))
                   + LinComb.term(circ(s, Forest(circ(z, t).trees)))
                   - LinComb.term(circ(s, Forest((t, z)))))
            out.append(gen)

    for u in forests:
        if len(u.trees) != 3:
            continue
        ts = u.trees
        gen = LinComb.term(u, -1)
        for i, t in enumerate(ts):
            rest = Forest(ts[:i] + ts[i + 1:])
            gen = gen + LinComb.term(circ(t, rest))
        out.append(gen)

    return out


# ---------------------------------------------------------------------------
# quasi-symmetric functions: monomial basis indexed by compositions

class Composition:
    """A composition indexing the monomial basis element M_I."""

    __slots__ = ("parts", "weight", "_hash")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("composition parts must be positive")
        self.parts = parts
        self.weight = sum(parts)
        self._hash = hash(("Composition", parts))

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self.parts == other.parts

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return (self.weight, len(self.parts), self.parts)

    def __str__(self) -> str:
        return "M(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Composition({self.parts!r})"


EMPTY_COMPOSITION = Composition(())


def composition(*parts: int) -> Composition:
    return Composition(parts)


def parse_composition(text: str) -> Composition:
    """Parse ``M(1,2)`` (unit: ``M()``); errors carry the byte offset."""
    s = text.strip()
    base = text.index(s) if s else 0
    if not s.startswith("M("):
        raise ParseError("expected 'M('", base)
    pos = 2
    parts = []
    if pos < len(s) and s[pos] == ")":
        pos += 1
    else:
        while True:
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if start == pos:
                raise ParseError("expected digits", base + pos)
            value = int(s[start:pos])
            if value < 1:
                raise ParseError("parts must be positive", base + start)
            parts.append(value)
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == ")":
                pos += 1
                break
            raise ParseError("expected ',' or ')'", base + pos)
    if pos != len(s):
        raise ParseError("unexpected input after composition", base + pos)
    return Composition(parts)


def qsym_product(x: LinComb | Composition, y: LinComb | Composition) -> LinComb:
    """Quasi-shuffle of compositions with additive part merging."""

    def on_pair(a: Composition, b: Composition) -> LinComb:
        prod = quasi_shuffle(Word(a.parts), Word(b.parts), ADDITIVE)
        return LinComb((Composition(w.letters), c) for w, c in prod.items())

    return _aslc(x).bilinear(_aslc(y), on_pair)


def qsym_coproduct(x: LinComb | Composition) -> LinComb:
    """Deconcatenation of compositions."""

    def on_comp(c: Composition) -> LinComb:
        return LinComb(
            (Tensor((Composition(c.parts[:k]), Composition(c.parts[k:]))), 1)
            for k in range(len(c.parts) + 1))

    return _aslc(x).map_basis(on_comp)


def qsym_counit(x: LinComb | Composition) -> Fraction:
    return _aslc(x).coeff(EMPTY_COMPOSITION)


@lru_cache(maxsize=None)
def _qsym_antipode_comp(c: Composition) -> LinComb:
    if not c.parts:
        return LinComb.term(c)
    total = LinComb.zero()
    for k in range(len(c.parts)):
        total = total + qsym_product(_qsym_antipode_comp(Composition(c.parts[:k])),
                                     LinComb.term(Composition(c.parts[k:])))
    return -1 * total


def qsym_antipode(x: LinComb | Composition) -> LinComb:
    return _aslc(x).map_basis(_qsym_antipode_comp)


def Aplus(x: LinComb | Composition) -> LinComb:
    """Append a part 1: M_I -> M_{I.(1)}."""
    return _aslc(x).map_basis(lambda c: Composition(c.parts + (1,)))


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n as nonincreasing tuples."""
    if n == 0:
        return [()]
    out = []

    def build(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(min(cap, remaining), 0, -1):
            acc.append(p)
            build(remaining - p, p, acc)
            acc.pop()

    build(n, n, [])
    return out


def m_lambda(parts: Iterable[int]) -> LinComb:
    """The symmetric monomial m_lambda = sum of M_I over orderings of lambda."""
    parts = tuple(sorted(parts, reverse=True))
    orderings = set(itertools.permutations(parts))
    return LinComb((Composition(p), 1) for p in orderings)


def e_basis(n: int) -> LinComb:
    """The elementary symmetric function e_n = M_(1,...,1)."""
    return LinComb.term(Composition((1,) * n))


@lru_cache(maxsize=None)
def _e_products(n: int) -> list[tuple[tuple[int, ...], LinComb]]:
    out = []
    for mu in partitions(n):
        prod = LinComb.term(EMPTY_COMPOSITION)
        for p in mu:
            prod = qsym_product(prod, e_basis(p))
        out.append((mu, prod))
    return out


def sym_e_decompose(x: LinComb) -> list[tuple[tuple[int, ...], Fraction]]:
    """Write a symmetric element of QSYM in the elementary basis.

    Solved exactly per weight class; raises if some graded piece lies
    outside the span (i.e. the input is not symmetric).
    """
    out: list[tuple[tuple[int, ...], Fraction]] = []
    by_weight: dict[int, LinComb] = {}
    for c, v in x.items():
        by_weight[c.weight] = by_weight.get(c.weight, LinComb.zero()) + LinComb.term(c, v)
    for n in sorted(by_weight):
        target = by_weight[n]
        if n == 0:
            out.append(((), target.coeff(EMPTY_COMPOSITION)))
            continue
        basis = _e_products(n)
        sol = solve_in_span([v for _, v in basis], target)
        if sol is None:
            raise ValueError(f"not a symmetric element: {target}")
        for (mu, _), c in zip(basis, sol):
            if c:
                out.append((mu, c))
    return out


# ---------------------------------------------------------------------------
# formatting for generator words

def zword_str(w: Word) -> str:
    if not w.letters:
        return "1"
    return ".".join(f"z{k}" for k in w.letters)


def eword_str(w: Word) -> str:
    if not w.letters:
        return "1"
    return "".join(f"e(-{k})" for k in w.letters)


# ---------------------------------------------------------------------------
# the four square maps and their duals

def alpha1(x: LinComb | Word) -> LinComb:
    """NSYM -> ordered forests: z_n to the planar ladder, words to
    concatenations."""

    def on_word(w: Word) -> PlanarForest:
        return PlanarForest(tuple(planar_ladder(n) for n in w.letters))

    return _aslc(x).map_basis(on_word)


def alpha2(x: LinComb | PlanarForest) -> LinComb:
    """Forget planar order."""
    return _aslc(x).map_basis(forget_order_forest)


def alpha3(x: LinComb | Word) -> LinComb:
    """NSYM -> SYM (inside QSYM): z_n to e_n, extended multiplicatively."""

    def on_word(w: Word) -> LinComb:
        out = LinComb.term(EMPTY_COMPOSITION)
        for n in w.letters:
            out = qsym_product(out, e_basis(n))
        return out

    return _aslc(x).map_basis(on_word)


def alpha4(x: LinComb | Composition) -> LinComb:
    """SYM -> forests: e_n to the unlabeled ladder l_n."""
    out = LinComb.zero()
    for mu, c in sym_e_decompose(_aslc(x)):
        out = out + LinComb.term(Forest(tuple(ladder(p) for p in mu)), c)
    return out


def _ladder_branch_sizes(t: PlanarTree | RootedTree) -> tuple[int, ...] | None:
    """Branch sizes if t is unlabeled with every root branch a ladder."""
    if t.label is not None:
        return None
    sizes = []
    for c in t.children:
        n = 1
        node = c
        while node.children:
            if len(node.children) != 1 or node.label is not None:
                return None
            node = node.children[0]
            n += 1
        if node.label is not None:
            return None
        sizes.append(n)
    return tuple(sizes)


def alpha1_star(x: LinComb | PlanarTree) -> LinComb:
    """Planar trees -> QSYM: the comb tree t_I goes to M_I, others to 0."""

    def on_tree(t: PlanarTree) -> LinComb:
        sizes = _ladder_branch_sizes(t)
        if sizes is None:
            return LinComb.zero()
        return LinComb.term(Composition(sizes))

    return _aslc(x).map_basis(on_tree)


def alpha2_star(x: LinComb | RootedTree) -> LinComb:
    """Trees -> planar trees: |sym(t)| times the sum of planar variants."""

    def on_tree(t: RootedTree) -> LinComb:
        return LinComb((s, sym_order(t)) for s in planar_variants(t))

    return _aslc(x).map_basis(on_tree)


def alpha3_star(x: LinComb) -> LinComb:
    """SYM -> QSYM inclusion; the representation is already monomial."""
    return _aslc(x)


def alpha4_star(x: LinComb | RootedTree) -> LinComb:
    """Trees -> SYM: t_J (all branches ladders) to |sym(t_J)| m_J, else 0."""

    def on_tree(t: RootedTree) -> LinComb:
        sizes = _ladder_branch_sizes(t)
        if sizes is None:
            return LinComb.zero()
        return sym_order(t) * m_lambda(sizes)

    return _aslc(x).map_basis(on_tree)


# ---------------------------------------------------------------------------
# Zhao's homomorphism and its dual

@lru_cache(maxsize=None)
def zhao_k(n: int) -> LinComb:
    """k_n: the sum of all trees on n+1 vertices weighted by 1/|sym|."""
    return LinComb((t, Fraction(1, sym_order(t))) for t in enumerate_trees(n + 1))


@lru_cache(maxsize=None)
def zhao_eps(n: int) -> LinComb:
    if n == 0:
        return gl_unit()
    out = LinComb.zero()
    sign = 1
    for i in range(1, n + 1):
        out = out + sign * gl_product(zhao_k(i), zhao_eps(n - i))
        sign = -sign
    return out


def zhao_Z(x: LinComb | Word) -> LinComb:
    """NSYM -> trees with the attachment product, z_n to eps_n."""

    def on_word(w: Word) -> LinComb:
        out = gl_unit()
        for n in w.letters:
            out = gl_product(out, zhao_eps(n))
        return out

    return _aslc(x).map_basis(on_word)


def zhao_Zstar(x: LinComb | Forest) -> LinComb:
    """Forests -> QSYM: the unique algebra morphism with Z*(B+(u)) = A+(Z*(u))."""

    def on_tree(t: RootedTree) -> LinComb:
        return Aplus(on_forest(Forest(t.children)))

    def on_forest(u: Forest) -> LinComb:
        out = LinComb.term(EMPTY_COMPOSITION)
        for t in u.trees:
            out = qsym_product(out, on_tree(t))
        return out

    return _aslc(x).map_basis(on_forest)


def Z_u(x: LinComb | Word) -> LinComb:
    """Words -> QSYM through the unlabeled ladder of the word's length."""
    return _aslc(x).map_basis(
        lambda w: zhao_Zstar(Forest((ladder(len(w)),)) if len(w) else EMPTY_FOREST))


def Z_u_star(x: LinComb | Word) -> LinComb:
    """NSYM -> enveloping algebra words: z_n to e_{-n} letterwise."""
    return _aslc(x)


# ---------------------------------------------------------------------------
# labelings and the truncated lifts

def _relabel(t: RootedTree, labels: Iterator[int]) -> RootedTree:
    a = next(labels)
    return RootedTree(a, tuple(_relabel(c, labels) for c in t.children))


def _relabel_planar(t: PlanarTree, labels: Iterator[int]) -> PlanarTree:
    a = next(labels)
    return PlanarTree(a, tuple(_relabel_planar(c, labels) for c in t.children))


def _label_tuples(n: int, max_weight: int) -> Iterator[tuple[int, ...]]:
    if n > max_weight:
        return
    for combo in itertools.product(range(1, max_weight - n + 2), repeat=n):
        if sum(combo) <= max_weight:
            yield combo


def forest_labelings(u: Forest, max_weight: int) -> list[Forest]:
    """Distinct labeled forests over the shape u with weight <= max_weight."""
    seen: set[Forest] = set()
    for combo in _label_tuples(u.size, max_weight):
        it = iter(combo)
        seen.add(Forest(tuple(_relabel(t, it) for t in u.trees)))
    return sorted(seen, key=lambda v: v.sort_key())


def planar_slot_labelings(u: PlanarForest, max_weight: int) -> list[Forest]:
    """Labeled forests from all vertex-slot assignments, with repetition.

    Slots are distinguishable, so coinciding labeled forests appear once
    per assignment; planar order is forgotten in the result.
    """
    out = []
    for combo in _label_tuples(u.size, max_weight):
        it = iter(combo)
        labeled = PlanarForest(tuple(_relabel_planar(t, it) for t in u.trees))
        out.append(forget_order_forest(labeled))
    return out


def rho(x: LinComb | Forest, max_weight: int) -> LinComb:
    """Unlabeled forests -> words: sum of pi over distinct labelings of
    weight <= max_weight."""

    def on_forest(u: Forest) -> LinComb:
        out = LinComb.zero()
        for v in forest_labelings(u, max_weight):
            out = out + pi(v)
        return out

    return _aslc(x).map_basis(on_forest)


def rho_star(x: LinComb | Word) -> LinComb:
    """Enveloping algebra words -> trees: e_{-n} to the ladder l_n,
    extended along the attachment product."""

    def on_word(w: Word) -> LinComb:
        out = gl_unit()
        for n in w.letters:
            out = gl_product(out, LinComb.term(ladder(n)))
        return out

    return _aslc(x).map_basis(on_word)


def F(x: LinComb | Word) -> LinComb:
    """Words -> labeled trees: w to the element whose branch forest is the
    labeled ladder of w (ladders are symmetry-free, so no normalization)."""

    def on_word(w: Word) -> RootedTree:
        if not len(w):
            return leaf()
        return bplus(forest(labeled_ladder(w)))

    return _aslc(x).map_basis(on_word)


def F_star(x: LinComb | Forest) -> LinComb:
    """Labeled forests -> dual words; coefficientwise this is pi."""
    return pi(x)


def beta1(x: LinComb | Word) -> LinComb:
    return alpha1(x)


def beta3(x: LinComb | Word) -> LinComb:
    return alpha3(x)


def beta2(x: LinComb | PlanarForest, max_weight: int) -> LinComb:
    """Ordered forests -> words: sum of pi over slot-wise labelings."""

    def on_forest(u: PlanarForest) -> LinComb:
        out = LinComb.zero()
        for v in planar_slot_labelings(u, max_weight):
            out = out + pi(v)
        return out

    return _aslc(x).map_basis(on_forest)


def beta4(x: LinComb | Composition, max_weight: int) -> LinComb:
    """SYM -> words: e_n to the sum of all length-n words of weight <= N."""

    def letter_sum(n: int) -> LinComb:
        return LinComb((w, 1) for k in range(n, max_weight + 1)
                       for w in words_of_weight(k) if len(w) == n)

    out = LinComb.zero()
    for mu, c in sym_e_decompose(_aslc(x)):
        prod = LinComb.term(EMPTY_WORD)
        for p in mu:
            prod = shuffle(prod, letter_sum(p))
            prod = prod.graded_part(lambda w: w.weight, max_weight)
        out = out + c * prod
    return out


def beta2_star(n: int) -> LinComb:
    """e_{-n} -> planar trees, through the unlabeled ladder."""
    return alpha2_star(ladder(n))


def beta4_star(n: int) -> LinComb:
    """e_{-n} -> SYM, through the unlabeled ladder."""
    return alpha4_star(ladder(n))


def theta1(x: LinComb | Word, max_weight: int) -> LinComb:
    """NSYM -> words through SYM."""
    return beta4(beta3(x), max_weight)


def theta2(x: LinComb | RootedTree, max_weight: int) -> LinComb:
    """Trees -> words through SYM."""
    return beta4(alpha4_star(x), max_weight)


# ---------------------------------------------------------------------------
# diagram checking

@dataclass
class DiagramRow:
    probe: str
    ok: bool
    left: str
    right: str


@dataclass
class DiagramSpec:
    name: str
    description: str
    probes: Callable[[int], list[tuple[str, LinComb]]]
    left: Callable[[LinComb, int], LinComb]
    right: Callable[[LinComb, int], LinComb]
    fmt: Callable[[LinComb], str] = field(default=str)
    report_only: bool = False


def _zword_probes(max_weight: int) -> list[tuple[str, LinComb]]:
    out = []
    for n in range(1, max_weight + 1):
        for w in words_of_weight(n):
            out.append((zword_str(w), LinComb.term(w)))
    return out


def _gl_tree_probes(max_weight: int) -> list[tuple[str, LinComb]]:
    out = []
    for n in range(1, max_weight + 1):
        for t in enumerate_trees(n):
            out.append((str(t), LinComb.term(t)))
    return out


def _eletter_probes(max_weight: int) -> list[tuple[str, LinComb]]:
    return [(eword_str(word(n)), LinComb.term(word(n)))
            for n in range(1, max_weight + 1)]


def _eword_probes(max_weight: int) -> list[tuple[str, LinComb]]:
    out = []
    for n in range(1, max_weight + 1):
        for w in words_of_weight(n):
            out.append((eword_str(w), LinComb.term(w)))
    return out


def _mlambda_probes(max_weight: int) -> list[tuple[str, LinComb]]:
    out = []
    for n in range(1, max_weight + 1):
        for mu in partitions(n):
            name = "m(" + ",".join(str(p) for p in mu) + ")"
            out.append((name, m_lambda(mu)))
    return out


def _fmt_words(x: LinComb) -> str:
    return x.format(lambda w: str(w))


DIAGRAMS: dict[str, DiagramSpec] = {
    "thm5": DiagramSpec(
        name="thm5",
        description="ladder square: forests from NSYM two ways",
        probes=_zword_probes,
        left=lambda x, n: alpha2(alpha1(x)),
        right=lambda x, n: alpha4(alpha3(x)),
    ),
    "thm5-dual": DiagramSpec(
        name="thm5-dual",
        description="dual ladder square: QSYM from trees two ways",
        probes=_gl_tree_probes,
        left=lambda x, n: alpha3_star(alpha4_star(x)),
        right=lambda x, n: alpha1_star(alpha2_star(x)),
    ),
    "propdiag": DiagramSpec(
        name="propdiag",
        description="truncated lift square: words from NSYM two ways",
        probes=_zword_probes,
        left=lambda x, n: beta2(beta1(x), n),
        right=lambda x, n: beta4(beta3(x), n),
        fmt=_fmt_words,
    ),
    "propdiag-dual": DiagramSpec(
        name="propdiag-dual",
        description="dual lift square on generators: QSYM from e-letters",
        probes=_eletter_probes,
        left=lambda x, n: alpha3_star(x.map_basis(_beta4_star_word)),
        right=lambda x, n: alpha1_star(x.map_basis(_beta2_star_word)),
    ),
    "hex1": DiagramSpec(
        name="hex1",
        description="hexagon through the words: rho after alpha4 vs beta4",
        probes=_mlambda_probes,
        left=lambda x, n: rho(alpha4(x), n),
        right=lambda x, n: beta4(x, n),
        fmt=_fmt_words,
        report_only=True,
    ),
    "hex2": DiagramSpec(
        name="hex2",
        description="dual hexagon: alpha4* after rho* vs multiplicative beta4*",
        probes=_eword_probes,
        left=lambda x, n: alpha4_star(rho_star(x)),
        right=lambda x, n: x.map_basis(_beta4_star_word),
        report_only=True,
    ),
}


def _beta4_star_word(w: Word) -> LinComb:
    out = LinComb.term(EMPTY_COMPOSITION)
    for n in w.letters:
        out = qsym_product(out, beta4_star(n))
    return out


def _beta2_star_word(w: Word) -> LinComb:
    if len(w) != 1:
        raise ValueError("dual lift probes are single letters")
    return beta2_star(w.letters[0])


def diagram_check(name: str, max_weight: int) -> list[DiagramRow]:
    spec = DIAGRAMS[name]
    rows = []
    for label, x in spec.probes(max_weight):
        lhs = spec.left(x, max_weight)
        rhs = spec.right(x, max_weight)
        rows.append(DiagramRow(label, lhs == rhs, spec.fmt(lhs), spec.fmt(rhs)))
    return rows
