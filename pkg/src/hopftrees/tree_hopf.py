"""Hopf algebra structures on forests of rooted trees.

Four structures are implemented:

* the commutative cut coproduct algebra on forests (selector ``ck``), where
  the coproduct of a tree sums pruned-forest (x) trunk over admissible cuts
  and extends multiplicatively; on labeled forests the same sum is the one
  over vertex bipartitions whose right part is closed under taking parents;
* its graded dual with the vertex-attachment product (selector ``gl``),
  whose basis trees pair with forests by stripping the root;
* the ordered-forest variant of the cut coproduct with the concatenation
  product (selector ``foissy``);
* the root-branch shuffle product with deconcatenation of branches on
  planar trees (selector ``planar``).

Functionals on forests come in two flavours (characters, multiplicative;
infinitesimal characters, Leibniz) with convolution exponentials, plus the
universal lift through a graded bialgebra equipped with one Hochschild
1-cocycle per label.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .algebra import (LinComb, Scalar, Tensor, as_fraction, functional_convolve,
                      lincomb_tensor)
from .trees import (EMPTY_FOREST, EMPTY_PLANAR_FOREST, Forest, PlanarForest,
                    PlanarTree, RootedTree, forest_mul, leaf, planar_concat,
                    strip_root, sym_order)

_ZERO = Fraction(0)


def _aslc(x, wrap=LinComb.term) -> LinComb:
    return x if isinstance(x, LinComb) else wrap(x)


# ---------------------------------------------------------------------------
# cut coproduct algebra on forests (commutative)

def ck_product(x: LinComb | Forest, y: LinComb | Forest) -> LinComb:
    return _aslc(x).bilinear(_aslc(y), forest_mul)


@lru_cache(maxsize=None)
def _tree_splits(t: RootedTree) -> tuple[tuple[Forest, RootedTree | None, int], ...]:
    """Splits of one tree into (pruned forest, trunk or None), with counts.

    A split either prunes the whole tree (trunk None) or keeps the root and
    splits each branch independently; this enumerates the trivial terms plus
    all admissible cuts in one pass, and the bipartition form on labeled
    forests is the multiplicative extension of the same sum.
    """
    acc: dict[tuple[Forest, RootedTree | None], int] = {}
    acc[(Forest((t,)), None)] = 1
    per_child = []
    for c in t.children:
        options: dict[tuple[Forest, RootedTree | None], int] = {}
        for pruned, trunk, mult in _tree_splits(c):
            key = (pruned, trunk)
            options[key] = options.get(key, 0) + mult
        per_child.append(list(options.items()))
    for combo in itertools.product(*per_child):
        pruned_trees: tuple = ()
        kept = []
        mult = 1
        for (p, trunk), m in combo:
            pruned_trees += p.trees
            if trunk is not None:
                kept.append(trunk)
            mult *= m
        key = (Forest(pruned_trees), RootedTree(t.label, kept))
        acc[key] = acc.get(key, 0) + mult
    return tuple((p, r, m) for (p, r), m in acc.items())


@lru_cache(maxsize=None)
def coproduct_forest(u: Forest) -> LinComb:
    """Coproduct of a basis forest, as a sum of Forest (x) Forest tensors."""
    total = LinComb.term(Tensor((EMPTY_FOREST, EMPTY_FOREST)))
    for t in u.trees:
        one = LinComb.zero()
        for pruned, trunk, mult in _tree_splits(t):
            right = EMPTY_FOREST if trunk is None else Forest((trunk,))
            one = one + LinComb.term(Tensor((pruned, right)), mult)
        total = total.bilinear(one, lambda a, b: Tensor(
            (forest_mul(a.parts[0], b.parts[0]), forest_mul(a.parts[1], b.parts[1]))))
    return total


def ck_coproduct(x: LinComb | Forest) -> LinComb:
    return _aslc(x).map_basis(coproduct_forest)


def ck_counit(x: LinComb | Forest) -> Fraction:
    return _aslc(x).coeff(EMPTY_FOREST)


@lru_cache(maxsize=None)
def _antipode_tree(t: RootedTree) -> LinComb:
    total = LinComb.term(Forest((t,)), -1)
    for pruned, trunk, mult in _tree_splits(t):
        if trunk is None or not pruned.trees:
            continue
        total = total - mult * ck_product(ck_antipode(LinComb.term(pruned)),
                                          LinComb.term(Forest((trunk,))))
    return total


def ck_antipode(x: LinComb | Forest) -> LinComb:
    """Antipode: S(t) = -t - sum S(pruned) * trunk, extended multiplicatively."""

    def on_forest(u: Forest) -> LinComb:
        total = LinComb.term(EMPTY_FOREST)
        for t in u.trees:
            total = ck_product(total, _antipode_tree(t))
        return total

    return _aslc(x).map_basis(on_forest)


def cut_coproduct_tree(t: RootedTree) -> LinComb:
    """Coproduct of a single tree assembled directly from admissible cuts.

    Independent of the split recursion; used to cross-check it.
    """
    from .trees import admissible_cuts
    total = LinComb.term(Tensor((Forest((t,)), EMPTY_FOREST)))
    total = total + LinComb.term(Tensor((EMPTY_FOREST, Forest((t,)))))
    for cut in admissible_cuts(t):
        total = total + LinComb.term(Tensor((cut.pruned, Forest((cut.trunk,)))))
    return total


# ---------------------------------------------------------------------------
# the graded dual: vertex attachment product on trees

def _addresses(t: RootedTree) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for i, c in enumerate(t.children):
        out.extend((i,) + p for p in _addresses(c))
    return out


def _attach(t: RootedTree, grafts: Mapping[tuple[int, ...], tuple[RootedTree, ...]]) -> RootedTree:
    new_children = []
    for i, c in enumerate(t.children):
        sub = {p[1:]: ts for p, ts in grafts.items() if p and p[0] == i}
        new_children.append(_attach(c, sub) if sub else c)
    return RootedTree(t.label, tuple(new_children) + tuple(grafts.get((), ())))


def gl_product(x: LinComb | RootedTree, y: LinComb | RootedTree) -> LinComb:
    """Sum over all ways to attach each branch of the left tree at a vertex
    of the right tree."""

    def on_pair(t: RootedTree, s: RootedTree) -> LinComb:
        spots = _addresses(s)
        total = LinComb.zero()
        for assignment in itertools.product(spots, repeat=len(t.children)):
            grafts: dict[tuple[int, ...], tuple[RootedTree, ...]] = {}
            for branch, spot in zip(t.children, assignment):
                grafts[spot] = grafts.get(spot, ()) + (branch,)
            total = total + LinComb.term(_attach(s, grafts))
        return total

    return _aslc(x).bilinear(_aslc(y), on_pair)


GL_UNIT_TREE = leaf()


def gl_unit() -> LinComb:
    return LinComb.term(GL_UNIT_TREE)


def gl_coproduct(x: LinComb | RootedTree) -> LinComb:
    """Split the branch multiset of the root in all 2^k ways."""

    def on_tree(t: RootedTree) -> LinComb:
        k = len(t.children)
        total = LinComb.zero()
        for mask in range(1 << k):
            left = tuple(c for i, c in enumerate(t.children) if mask >> i & 1)
            right = tuple(c for i, c in enumerate(t.children) if not mask >> i & 1)
            total = total + LinComb.term(
                Tensor((RootedTree(t.label, left), RootedTree(t.label, right))))
        return total

    return _aslc(x).map_basis(on_tree)


def gl_counit(x: LinComb | RootedTree) -> Fraction:
    return _aslc(x).coeff(GL_UNIT_TREE)


@lru_cache(maxsize=None)
def _gl_antipode_tree(t: RootedTree) -> LinComb:
    if t.label is not None:
        # a labeled root is group-like here and has no polynomial inverse
        raise ValueError(f"attachment antipode needs an unlabeled root, got {t}")
    if t == GL_UNIT_TREE:
        return gl_unit()
    total = LinComb.term(t, -1)
    for ten, c in gl_coproduct(LinComb.term(t)).items():
        left, right = ten.parts
        if left == GL_UNIT_TREE or right == GL_UNIT_TREE:
            continue
        total = total - c * gl_product(_gl_antipode_tree(left), LinComb.term(right))
    return total


def gl_antipode(x: LinComb | RootedTree) -> LinComb:
    """Antipode of the attachment Hopf algebra: S(t) = -t - sum S(t_S) o t_Sc
    over proper branch subsets."""
    return _aslc(x).map_basis(_gl_antipode_tree)


def ck_gl_pairing(t: RootedTree, v: Forest) -> Fraction:
    """<B+(u), v> = |sym(u)| if u == v else 0, u the branch forest of t."""
    u = strip_root(t)
    return Fraction(sym_order(u)) if u == v else _ZERO


def pair_gl_ck(x: LinComb | RootedTree, y: LinComb | Forest) -> Fraction:
    total = _ZERO
    for t, c1 in _aslc(x).items():
        for v, c2 in _aslc(y).items():
            total += c1 * c2 * ck_gl_pairing(t, v)
    return total


# ---------------------------------------------------------------------------
# planar trees: root-branch shuffle and branch deconcatenation

def _seq_shuffles(a: tuple, b: tuple):
    """Interleavings of two sequences preserving each one's order."""
    if not a:
        yield b
        return
    if not b:
        yield a
        return
    for tail in _seq_shuffles(a[1:], b):
        yield (a[0],) + tail
    for tail in _seq_shuffles(a, b[1:]):
        yield (b[0],) + tail


def planar_diamond(x: LinComb | PlanarTree, y: LinComb | PlanarTree) -> LinComb:
    """Shuffle the root-branch sequences of the two trees."""

    def on_pair(t: PlanarTree, s: PlanarTree) -> LinComb:
        total = LinComb.zero()
        for seq in _seq_shuffles(t.children, s.children):
            total = total + LinComb.term(PlanarTree(None, seq))
        return total

    return _aslc(x).bilinear(_aslc(y), on_pair)


def planar_diamond_coproduct(x: LinComb | PlanarTree) -> LinComb:
    """Deconcatenate the root-branch sequence."""

    def on_tree(t: PlanarTree) -> LinComb:
        return LinComb(
            (Tensor((PlanarTree(t.label, t.children[:k]), PlanarTree(t.label, t.children[k:]))), 1)
            for k in range(len(t.children) + 1))

    return _aslc(x).map_basis(on_tree)


@lru_cache(maxsize=None)
def _diamond_antipode_tree(t: PlanarTree) -> LinComb:
    if t.label is not None:
        raise ValueError(f"branch-shuffle antipode needs an unlabeled root, got {t}")
    if not t.children:
        return LinComb.term(t)
    total = LinComb.term(t, -1)
    for k in range(1, len(t.children)):
        left = PlanarTree(None, t.children[:k])
        right = PlanarTree(None, t.children[k:])
        total = total - planar_diamond(_diamond_antipode_tree(left), LinComb.term(right))
    return total


def planar_diamond_antipode(x: LinComb | PlanarTree) -> LinComb:
    """Antipode for the branch shuffle: reverses the branch sequence up to
    the sign (-1)^(number of branches); computed by the defining recursion."""
    return _aslc(x).map_basis(_diamond_antipode_tree)


# ---------------------------------------------------------------------------
# ordered forests: concatenation product with the cut coproduct

def foissy_product(x: LinComb | PlanarForest, y: LinComb | PlanarForest) -> LinComb:
    return _aslc(x).bilinear(_aslc(y), planar_concat)


@lru_cache(maxsize=None)
def _planar_tree_splits(t: PlanarTree) -> tuple[tuple[PlanarForest, PlanarTree | None, int], ...]:
    """Ordered analogue of _tree_splits; pruned parts keep planar order."""
    acc: dict[tuple[PlanarForest, PlanarTree | None], int] = {}
    acc[(PlanarForest((t,)), None)] = 1
    per_child = []
    for c in t.children:
        options: list[tuple[PlanarForest, PlanarTree | None, int]] = list(_planar_tree_splits(c))
        per_child.append(options)
    for combo in itertools.product(*per_child):
        pruned: tuple = ()
        kept = []
        mult = 1
        for p, trunk, m in combo:
            pruned += p.trees
            if trunk is not None:
                kept.append(trunk)
            mult *= m
        key = (PlanarForest(pruned), PlanarTree(t.label, kept))
        acc[key] = acc.get(key, 0) + mult
    return tuple((p, r, m) for (p, r), m in acc.items())


@lru_cache(maxsize=None)
def _foissy_coproduct_forest(u: PlanarForest) -> LinComb:
    total = LinComb.term(Tensor((EMPTY_PLANAR_FOREST, EMPTY_PLANAR_FOREST)))
    for t in u.trees:
        one = LinComb.zero()
        for pruned, trunk, mult in _planar_tree_splits(t):
            right = EMPTY_PLANAR_FOREST if trunk is None else PlanarForest((trunk,))
            one = one + LinComb.term(Tensor((pruned, right)), mult)
        total = total.bilinear(one, lambda a, b: Tensor(
            (planar_concat(a.parts[0], b.parts[0]), planar_concat(a.parts[1], b.parts[1]))))
    return total


def foissy_coproduct(x: LinComb | PlanarForest) -> LinComb:
    return _aslc(x).map_basis(_foissy_coproduct_forest)


def foissy_counit(x: LinComb | PlanarForest) -> Fraction:
    return _aslc(x).coeff(EMPTY_PLANAR_FOREST)


@lru_cache(maxsize=None)
def _foissy_antipode_tree(t: PlanarTree) -> LinComb:
    total = LinComb.term(PlanarForest((t,)), -1)
    for pruned, trunk, mult in _planar_tree_splits(t):
        if trunk is None or not pruned.trees:
            continue
        total = total - mult * foissy_product(
            foissy_antipode(LinComb.term(pruned)), LinComb.term(PlanarForest((trunk,))))
    return total


def foissy_antipode(x: LinComb | PlanarForest) -> LinComb:
    """Antipode on ordered forests; an algebra antihomomorphism."""

    def on_forest(u: PlanarForest) -> LinComb:
        total = LinComb.term(EMPTY_PLANAR_FOREST)
        for t in reversed(u.trees):
            total = foissy_product(total, _foissy_antipode_tree(t))
        return total

    return _aslc(x).map_basis(on_forest)


# ---------------------------------------------------------------------------
# characters

class Character:
    """A multiplicative functional, determined by its values on trees."""

    def __init__(self, tree_values: Mapping[RootedTree, Scalar]):
        self.tree_values = {t: as_fraction(v) for t, v in tree_values.items()}

    def __call__(self, u: Forest) -> Fraction:
        total = Fraction(1)
        for t in u.trees:
            total *= self.tree_values.get(t, _ZERO)
        return total


class InfinitesimalCharacter:
    """A Leibniz functional: vanishes on the unit and on proper products."""

    def __init__(self, tree_values: Mapping[RootedTree, Scalar]):
        self.tree_values = {t: as_fraction(v) for t, v in tree_values.items()}

    def __call__(self, u: Forest) -> Fraction:
        if len(u.trees) != 1:
            return _ZERO
        return self.tree_values.get(u.trees[0], _ZERO)


def convolution_unit(u: Forest) -> Fraction:
    return Fraction(1) if u == EMPTY_FOREST else _ZERO


def char_convolution(f: Callable[[Forest], Scalar],
                     g: Callable[[Forest], Scalar]) -> Callable[[Forest], Fraction]:
    return functional_convolve(f, g, coproduct_forest)


def char_exp(g: Callable[[Forest], Scalar]) -> Callable[[Forest], Fraction]:
    """Convolution exponential of an infinitesimal character.

    Since g kills the unit, g^(*k)(u) vanishes for k > |u| and the sum is
    finite in each degree.  The result is a character.
    """
    if as_fraction(g(EMPTY_FOREST)):
        raise ValueError("convolution exponential needs g(I) = 0")

    powers: dict[tuple[int, Forest], Fraction] = {}

    def power(k: int, u: Forest) -> Fraction:
        if k == 0:
            return convolution_unit(u)
        key = (k, u)
        if key not in powers:
            total = _ZERO
            for t, c in coproduct_forest(u).items():
                a, b = t.parts
                ga = as_fraction(g(a))
                if ga:
                    total += c * ga * power(k - 1, b)
            powers[key] = total
        return powers[key]

    def exp_g(u: Forest) -> Fraction:
        total = Fraction(1) if u == EMPTY_FOREST else _ZERO
        fact = 1
        for k in range(1, u.size + 1):
            fact *= k
            total += power(k, u) / fact
        return total

    return exp_g


# ---------------------------------------------------------------------------
# the universal lift through a bialgebra with one cocycle per label

@dataclass
class CocycleTarget:
    """A bialgebra target: unit element, product, basis-level coproduct and
    one linear endomap per label expected to satisfy the cocycle law
    coproduct(L(x)) = L(x) (x) unit + (id (x) L)(coproduct(x))."""

    unit: LinComb
    product: Callable[[LinComb, LinComb], LinComb]
    coproduct: Callable[[object], LinComb]
    cocycles: Mapping[int | None, Callable[[LinComb], LinComb]]
    verify: bool = True


class CocycleLawError(ValueError):
    pass


def _coproduct_lc(target: CocycleTarget, x: LinComb) -> LinComb:
    return x.map_basis(target.coproduct)


def _check_cocycle(target: CocycleTarget, label: int | None, x: LinComb, probe: object) -> None:
    L = target.cocycles[label]
    lhs = _coproduct_lc(target, L(x))
    rhs = lincomb_tensor(L(x), target.unit)
    for t, c in _coproduct_lc(target, x).items():
        a, b = t.parts
        rhs = rhs + c * lincomb_tensor(LinComb.term(a), L(LinComb.term(b)))
    if lhs != rhs:
        raise CocycleLawError(
            f"cocycle law fails for label {label!r} at probe element {probe}")


def universal_cocycle_map(target: CocycleTarget, x: LinComb | Forest) -> LinComb:
    """The unique algebra morphism from forests sending B+_a to the a-cocycle.

    The cocycle law is verified on every intermediate image unless the
    target opts out.
    """
    cache: dict[Forest, LinComb] = {}

    def on_tree(t: RootedTree) -> LinComb:
        inner = on_forest(strip_root(t))
        if t.label not in target.cocycles:
            raise KeyError(f"no cocycle for label {t.label!r} (tree {t})")
        if target.verify:
            _check_cocycle(target, t.label, inner, strip_root(t))
        return target.cocycles[t.label](inner)

    def on_forest(u: Forest) -> LinComb:
        if u not in cache:
            total = target.unit
            for t in u.trees:
                total = target.product(total, on_tree(t))
            cache[u] = total
        return cache[u]

    return _aslc(x).map_basis(on_forest)


def ck_target(labels: Iterable[int | None] = (None,), verify: bool = True) -> CocycleTarget:
    """Forests with the cut coproduct and L_a = B+_a; the lift is the identity."""
    from .trees import bplus

    def make(a):
        return lambda x: x.map_basis(lambda u: Forest((bplus(u, a),)))

    return CocycleTarget(
        unit=LinComb.term(EMPTY_FOREST),
        product=ck_product,
        coproduct=coproduct_forest,
        cocycles={a: make(a) for a in labels},
        verify=verify,
    )


def shuffle_target(labels: Iterable[int], verify: bool = True) -> CocycleTarget:
    """Words with shuffle/deconcatenation and L_a(w) = w.a: the lift is pi."""
    from .words import EMPTY_WORD, Word, deconcat, shuffle

    def make(a: int):
        return lambda x: x.map_basis(lambda w: Word(w.letters + (a,)))

    return CocycleTarget(
        unit=LinComb.term(EMPTY_WORD),
        product=shuffle,
        coproduct=deconcat,
        cocycles={a: make(a) for a in labels},
        verify=verify,
    )
