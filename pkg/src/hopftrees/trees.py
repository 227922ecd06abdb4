"""Rooted trees and forests, plain and planar, labeled or not.

Non-planar trees keep their children sorted by a canonical key, so equal
trees are structurally identical; forests are multisets of trees stored the
same way.  Planar trees keep children in given order.  Labels are positive
integers (vertex labeled k stands for the letter f_k and has weight k);
unlabeled vertices have label None and weight 0.

Text grammar: ``[]`` is an unlabeled vertex, children go comma-separated in
brackets (``[[],[]]`` is the cherry), a label prefixes the bracket as in
``f2[f1]``, and a labeled leaf may drop its brackets. Forests are space
separated; the empty forest prints as ``I``.  Planar trees also have a
balanced-bracket form over ``<``/``>`` in which the root is implicit.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .algebra import ParseError
from .words import Word


class RootedTree:
    """A rooted tree with canonically sorted children. Immutable."""

    __slots__ = ("label", "children", "size", "weight", "_key", "_hash")

    def __init__(self, label: int | None = None, children: Iterable["RootedTree"] = ()):
        if label is not None and (not isinstance(label, int) or label < 1):
            raise ValueError(f"labels must be positive integers, got {label!r}")
        kids = tuple(sorted(children, key=lambda t: t._key))
        for t in kids:
            if not isinstance(t, RootedTree):
                raise TypeError("children must be RootedTree instances")
        self.label = label
        self.children = kids
        self.size = 1 + sum(t.size for t in kids)
        self.weight = (label or 0) + sum(t.weight for t in kids)
        self._key = (self.size, label or 0, tuple(t._key for t in kids))
        self._hash = hash(("RootedTree", label, kids))

    def sort_key(self) -> tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, RootedTree) and self._hash == other._hash
                and self.label == other.label and self.children == other.children)

    def __hash__(self) -> int:
        return self._hash

    def is_fully_labeled(self) -> bool:
        return self.label is not None and all(c.is_fully_labeled() for c in self.children)

    def is_unlabeled(self) -> bool:
        return self.label is None and all(c.is_unlabeled() for c in self.children)

    def __str__(self) -> str:
        prefix = f"f{self.label}" if self.label is not None else ""
        if not self.children:
            return prefix if prefix else "[]"
        return prefix + "[" + ",".join(str(c) for c in self.children) + "]"

    def __repr__(self) -> str:
        return f"<tree {self}>"


class Forest:
    """A multiset of rooted trees, stored sorted. The unit forest is empty."""

    __slots__ = ("trees", "size", "weight", "_key", "_hash")

    def __init__(self, trees: Iterable[RootedTree] = ()):
        ts = tuple(sorted(trees, key=lambda t: t._key))
        self.trees = ts
        self.size = sum(t.size for t in ts)
        self.weight = sum(t.weight for t in ts)
        self._key = (self.size, tuple(t._key for t in ts))
        self._hash = hash(("Forest", ts))

    def sort_key(self) -> tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, Forest) and self._hash == other._hash
                and self.trees == other.trees)

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.trees)

    def is_fully_labeled(self) -> bool:
        return all(t.is_fully_labeled() for t in self.trees)

    def is_unlabeled(self) -> bool:
        return all(t.is_unlabeled() for t in self.trees)

    def __str__(self) -> str:
        if not self.trees:
            return "I"
        return " ".join(str(t) for t in self.trees)

    def __repr__(self) -> str:
        return f"<forest {self}>"


EMPTY_FOREST = Forest(())


def leaf(label: int | None = None) -> RootedTree:
    return RootedTree(label, ())


def forest(*trees: RootedTree) -> Forest:
    return Forest(trees)


def forest_mul(u: Forest, v: Forest) -> Forest:
    """Disjoint union, the commutative product of forests."""
    return Forest(u.trees + v.trees)


def bplus(u: Forest, label: int | None = None) -> RootedTree:
    """Graft all trees of u onto a fresh root."""
    return RootedTree(label, u.trees)


def strip_root(t: RootedTree) -> Forest:
    """Inverse of bplus: drop the root, keep its branches."""
    return Forest(t.children)


def graft(t: RootedTree, u: Forest) -> RootedTree:
    """Attach the roots of u as extra branches of t's root (t o u)."""
    return RootedTree(t.label, t.children + u.trees)


def canonicalize(t: RootedTree) -> RootedTree:
    """Rebuild a tree bottom-up; idempotent since constructors sort children."""
    return RootedTree(t.label, tuple(canonicalize(c) for c in t.children))


def ladder(n: int, labels: Sequence[int] | None = None) -> RootedTree:
    """The n-vertex ladder; labels, if given, run deepest vertex first."""
    if n < 1:
        raise ValueError("ladders need at least one vertex")
    if labels is not None and len(labels) != n:
        raise ValueError("need one label per vertex")
    t = leaf(labels[0] if labels else None)
    for i in range(1, n):
        t = RootedTree(labels[i] if labels else None, (t,))
    return t


def labeled_ladder(w: Word) -> RootedTree:
    """The ladder whose only linear extension reads w (deepest letter first)."""
    return ladder(len(w.letters), w.letters)


# ---------------------------------------------------------------------------
# symmetry and permutation counts


def sym_order(x: RootedTree | Forest) -> int:
    """Order of the automorphism group (label-preserving)."""
    trees = x.children if isinstance(x, RootedTree) else x.trees
    out = 1
    for t, mult in _multiplicities(trees):
        out *= _factorial(mult) * sym_order(t) ** mult
    return out


def per_count(x: RootedTree | Forest) -> int:
    """Number of vertex permutations respecting the forest structure:
    per(B+_a(u)) = per(u) and per(prod t_j^(i_j)) = prod i_j! per(t_j)^(i_j)."""
    if isinstance(x, RootedTree):
        return per_count(Forest(x.children))
    out = 1
    for t, mult in _multiplicities(x.trees):
        out *= _factorial(mult) * per_count(t) ** mult
    return out


def _multiplicities(trees: Sequence[RootedTree]) -> list[tuple[RootedTree, int]]:
    out: list[tuple[RootedTree, int]] = []
    for t in trees:
        if out and out[-1][0] == t:
            out[-1] = (t, out[-1][1] + 1)
        else:
            out.append((t, 1))
    return out


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# ---------------------------------------------------------------------------
# admissible cuts

from dataclasses import dataclass


@dataclass(frozen=True)
class Cut:
    """A non-trivial admissible cut: the cut edges (as root paths to the
    child vertex), the pruned forest and the trunk containing the root."""

    edges: tuple[tuple[int, ...], ...]
    pruned: Forest
    trunk: RootedTree


def admissible_cuts(t: RootedTree) -> tuple[Cut, ...]:
    """All non-empty edge subsets meeting each root path at most once."""
    configs = _cut_configs(t)
    out = []
    for edges, pruned, trunk in configs:
        if edges:
            out.append(Cut(tuple(sorted(edges)), Forest(pruned), trunk))
    return tuple(out)


def _cut_configs(t: RootedTree) -> list[tuple[tuple, tuple, RootedTree]]:
    """All admissible configurations of t, including the empty cut."""
    per_child = []
    for i, c in enumerate(t.children):
        options = [(((i,),), (c,), None)]  # cut the edge above c
        for edges, pruned, trunk in _cut_configs(c):
            shifted = tuple((i,) + e for e in edges)
            options.append((shifted, pruned, trunk))
        per_child.append(options)
    out = []
    for combo in itertools.product(*per_child):
        edges: tuple = ()
        pruned: tuple = ()
        kept = []
        for e, p, trunk in combo:
            edges += e
            pruned += p
            if trunk is not None:
                kept.append(trunk)
        out.append((edges, pruned, RootedTree(t.label, kept)))
    return out


# ---------------------------------------------------------------------------
# linear extensions

@lru_cache(maxsize=None)
def _extensions_increasing(trees: tuple[RootedTree, ...]) -> tuple[tuple[int, ...], ...]:
    """Vertex labels in increasing poset order (roots first), all extensions."""
    if not trees:
        return ((),)
    out = []
    for i, t in enumerate(trees):
        rest = trees[:i] + trees[i + 1:] + t.children
        for tail in _extensions_increasing(tuple(sorted(rest, key=lambda s: s._key))):
            out.append((t.label,) + tail)
    return tuple(out)


def linear_extensions(u: Forest) -> tuple[Word, ...]:
    """Words of the total orders extending u's vertex order, greatest first.

    Every vertex precedes its parent, so each tree's root letter comes last.
    Extensions are counted with multiplicity: equal trees contribute equal
    words once per choice.
    """
    if not u.is_fully_labeled():
        raise ValueError(f"linear extensions need a fully labeled forest, got {u}")
    return tuple(Word(tuple(reversed(seq))) for seq in _extensions_increasing(u.trees))


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[RootedTree, ...]:
    """All unlabeled rooted trees with n vertices, canonical order."""
    if n < 1:
        return ()
    out = [bplus(f) for f in enumerate_forests(n - 1)]
    return tuple(sorted(out, key=lambda t: t._key))


@lru_cache(maxsize=None)
def enumerate_forests(n: int) -> tuple[Forest, ...]:
    """All unlabeled forests with n vertices total, canonical order."""
    out = [Forest(ts) for ts in _multisets(n, _trees_upto_key(n), lambda t: t.size)]
    return tuple(sorted(out, key=lambda f: f._key))


def _trees_upto_key(n: int) -> list[RootedTree]:
    pool: list[RootedTree] = []
    for k in range(1, n + 1):
        pool.extend(enumerate_trees(k))
    return sorted(pool, key=lambda t: t._key)


def _multisets(total: int, pool: list, size_of) -> Iterator[tuple]:
    """Multisets from pool with given total size; pool must be sorted."""
    def rec(rest: int, start: int) -> Iterator[tuple]:
        if rest == 0:
            yield ()
            return
        for i in range(start, len(pool)):
            s = size_of(pool[i])
            if s <= rest:
                for tail in rec(rest - s, i):
                    yield (pool[i],) + tail
    return rec(total, 0)


@lru_cache(maxsize=None)
def labeled_trees_of_weight(w: int) -> tuple[RootedTree, ...]:
    """All fully labeled rooted trees of total label weight w."""
    if w < 1:
        return ()
    out = []
    for root in range(1, w + 1):
        for f in labeled_forests_of_weight(w - root):
            out.append(bplus(f, root))
    return tuple(sorted(out, key=lambda t: t._key))


@lru_cache(maxsize=None)
def labeled_forests_of_weight(w: int) -> tuple[Forest, ...]:
    if w == 0:
        return (EMPTY_FOREST,)
    pool: list[RootedTree] = []
    for k in range(1, w + 1):
        pool.extend(labeled_trees_of_weight(k))
    pool.sort(key=lambda t: t._key)
    out = [Forest(ts) for ts in _multisets(w, pool, lambda t: t.weight)]
    return tuple(sorted(out, key=lambda f: f._key))


def labeled_forests_up_to_weight(w: int) -> list[Forest]:
    out: list[Forest] = []
    for k in range(0, w + 1):
        out.extend(labeled_forests_of_weight(k))
    return out


def enumerate_trees_spec(n: int, labeled: bool = False,
                         max_weight: int | None = None) -> tuple[RootedTree, ...]:
    """Trees with n vertices; labeled mode needs a weight bound to stay finite."""
    if not labeled:
        return enumerate_trees(n)
    if max_weight is None:
        raise ValueError("labeled enumeration needs max_weight; the label set is infinite")
    out = []
    for w in range(n, max_weight + 1):
        out.extend(t for t in labeled_trees_of_weight(w) if t.size == n)
    return tuple(sorted(out, key=lambda t: t._key))


# ---------------------------------------------------------------------------
# planar trees

class PlanarTree:
    """A rooted tree whose children are ordered left to right. Immutable."""

    __slots__ = ("label", "children", "size", "weight", "_key", "_hash")

    def __init__(self, label: int | None = None, children: Iterable["PlanarTree"] = ()):
        if label is not None and (not isinstance(label, int) or label < 1):
            raise ValueError(f"labels must be positive integers, got {label!r}")
        kids = tuple(children)
        for t in kids:
            if not isinstance(t, PlanarTree):
                raise TypeError("children must be PlanarTree instances")
        self.label = label
        self.children = kids
        self.size = 1 + sum(t.size for t in kids)
        self.weight = (label or 0) + sum(t.weight for t in kids)
        self._key = (self.size, label or 0, tuple(t._key for t in kids))
        self._hash = hash(("PlanarTree", label, kids))

    def sort_key(self) -> tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, PlanarTree) and self._hash == other._hash
                and self.label == other.label and self.children == other.children)

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        prefix = f"f{self.label}" if self.label is not None else ""
        if not self.children:
            return prefix if prefix else "[]"
        return prefix + "[" + ",".join(str(c) for c in self.children) + "]"

    def __repr__(self) -> str:
        return f"<planar {self}>"


class PlanarForest:
    """An ordered forest of planar trees (a word in planar trees)."""

    __slots__ = ("trees", "size", "weight", "_key", "_hash")

    def __init__(self, trees: Iterable[PlanarTree] = ()):
        ts = tuple(trees)
        self.trees = ts
        self.size = sum(t.size for t in ts)
        self.weight = sum(t.weight for t in ts)
        self._key = (self.size, tuple(t._key for t in ts))
        self._hash = hash(("PlanarForest", ts))

    def sort_key(self) -> tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, PlanarForest) and self._hash == other._hash
                and self.trees == other.trees)

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.trees)

    def __str__(self) -> str:
        if not self.trees:
            return "I"
        return " ".join(str(t) for t in self.trees)

    def __repr__(self) -> str:
        return f"<planar forest {self}>"


EMPTY_PLANAR_FOREST = PlanarForest(())


def pleaf(label: int | None = None) -> PlanarTree:
    return PlanarTree(label, ())


def pbplus(u: PlanarForest, label: int | None = None) -> PlanarTree:
    return PlanarTree(label, u.trees)


def planar_concat(u: PlanarForest, v: PlanarForest) -> PlanarForest:
    return PlanarForest(u.trees + v.trees)


def planar_ladder(n: int) -> PlanarTree:
    t = pleaf()
    for _ in range(1, n):
        t = PlanarTree(None, (t,))
    return t


def forget_order(t: PlanarTree) -> RootedTree:
    return RootedTree(t.label, tuple(forget_order(c) for c in t.children))


def forget_order_forest(u: PlanarForest) -> Forest:
    return Forest(forget_order(t) for t in u.trees)


def planar_variants(t: RootedTree) -> tuple[PlanarTree, ...]:
    """All distinct planar trees that flatten to t under forget_order."""
    child_variants = [planar_variants(c) for c in t.children]
    seen = set()
    for choice in itertools.product(*child_variants):
        for perm in itertools.permutations(choice):
            seen.add(PlanarTree(t.label, perm))
    return tuple(sorted(seen, key=lambda p: p._key))


@lru_cache(maxsize=None)
def enumerate_planar_trees(n: int) -> tuple[PlanarTree, ...]:
    if n < 1:
        return ()
    out = [pbplus(f) for f in enumerate_planar_forests(n - 1)]
    return tuple(sorted(out, key=lambda t: t._key))


@lru_cache(maxsize=None)
def enumerate_planar_forests(n: int) -> tuple[PlanarForest, ...]:
    """Ordered forests of planar trees with n vertices total."""
    if n == 0:
        return (EMPTY_PLANAR_FOREST,)
    out = []
    for k in range(1, n + 1):
        for t in enumerate_planar_trees(k):
            for rest in enumerate_planar_forests(n - k):
                out.append(PlanarForest((t,) + rest.trees))
    return tuple(sorted(out, key=lambda f: f._key))


# ---------------------------------------------------------------------------
# balanced bracket representation (planar, unlabeled; the root is implicit)

def bbr_print(t: PlanarTree) -> str:
    return "".join("<" + bbr_print(c) + ">" for c in t.children)


def bbr_parse(text: str) -> PlanarTree:
    """Parse a balanced string over <> into a planar tree."""
    children, pos = _bbr_children(text, 0)
    if pos != len(text):
        raise ParseError("unbalanced string", pos)
    return PlanarTree(None, children)


def _bbr_children(s: str, pos: int) -> tuple[tuple[PlanarTree, ...], int]:
    children = []
    while pos < len(s) and s[pos] == "<":
        inner, pos = _bbr_children(s, pos + 1)
        if pos >= len(s) or s[pos] != ">":
            raise ParseError("unbalanced string", len(s) if pos >= len(s) else pos)
        children.append(PlanarTree(None, inner))
        pos += 1
    return tuple(children), pos


# ---------------------------------------------------------------------------
# tree grammar parsing

def parse_forest(text: str, planar: bool = False) -> Forest | PlanarForest:
    """Parse a space-separated forest; ``I`` is the empty forest."""
    s = text
    pos = _skip_ws(s, 0)
    if pos < len(s) and s[pos] == "I":
        tail = _skip_ws(s, pos + 1)
        if tail != len(s):
            raise ParseError("unexpected input after empty forest", tail)
        return EMPTY_PLANAR_FOREST if planar else EMPTY_FOREST
    trees = []
    while pos < len(s):
        t, pos = _parse_tree_at(s, pos, planar)
        trees.append(t)
        pos = _skip_ws(s, pos)
    if not trees:
        raise ParseError("empty forest expression (write 'I' for the unit)", pos)
    return PlanarForest(trees) if planar else Forest(trees)


def parse_tree(text: str, planar: bool = False) -> RootedTree | PlanarTree:
    s = text
    pos = _skip_ws(s, 0)
    t, pos = _parse_tree_at(s, pos, planar)
    pos = _skip_ws(s, pos)
    if pos != len(s):
        raise ParseError("unexpected input after tree", pos)
    return t


def _skip_ws(s: str, pos: int) -> int:
    while pos < len(s) and s[pos] == " ":
        pos += 1
    return pos


def _parse_tree_at(s: str, pos: int, planar: bool):
    label = None
    if pos < len(s) and s[pos] == "f":
        pos += 1
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected digits after 'f'", pos)
        label = int(s[start:pos])
        if label < 1:
            raise ParseError("labels must be positive", start)
    children: list = []
    if pos < len(s) and s[pos] == "[":
        pos += 1
        pos = _skip_ws(s, pos)
        if pos < len(s) and s[pos] == "]":
            pos += 1
        else:
            while True:
                child, pos = _parse_tree_at(s, pos, planar)
                children.append(child)
                pos = _skip_ws(s, pos)
                if pos < len(s) and s[pos] == ",":
                    pos = _skip_ws(s, pos + 1)
                    continue
                if pos < len(s) and s[pos] == "]":
                    pos += 1
                    break
                raise ParseError("unbalanced bracket", pos)
    elif label is None:
        raise ParseError("expected a tree", pos)
    cls = PlanarTree if planar else RootedTree
    return cls(label, children), pos
