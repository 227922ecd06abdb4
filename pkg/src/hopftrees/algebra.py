"""Exact scalars, sparse linear combinations, tensors, pairings, convolution.

Every algebraic object in this package is a finite formal sum of canonical
basis elements (trees, forests, words, tensors, ...) with coefficients in
`fractions.Fraction`; nothing is ever floating point.  Basis elements are
immutable hashable values exposing ``sort_key() -> tuple`` (degree first,
then a canonical structural encoding) so every printed expansion comes out
in a reproducible canonical order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

Scalar = int | Fraction

_ZERO = Fraction(0)


class ParseError(ValueError):
    """Syntax error in an input expression, with the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class PairingError(ValueError):
    """Raised when a bilinear pairing is evaluated on an undefined basis pair."""


def as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class LinComb:
    """A finite formal sum of basis elements with nonzero rational coefficients.

    Instances are treated as immutable: all arithmetic returns fresh objects
    and zero coefficients are dropped on construction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple[Any, Scalar]] = ()):
        data: dict[Any, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for basis, coeff in items:
            c = as_fraction(coeff)
            if not c:
                continue
            acc = data.get(basis, _ZERO) + c
            if acc:
                data[basis] = acc
            else:
                del data[basis]
        self._terms = data

    @classmethod
    def term(cls, basis: Any, coeff: Scalar = 1) -> "LinComb":
        out = cls.__new__(cls)
        c = as_fraction(coeff)
        out._terms = {basis: c} if c else {}
        return out

    @classmethod
    def zero(cls) -> "LinComb":
        out = cls.__new__(cls)
        out._terms = {}
        return out

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Any, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coeff(self, basis: Any) -> Fraction:
        return self._terms.get(basis, _ZERO)

    def support(self) -> list[Any]:
        return [b for b, _ in self.sorted_items()]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        raise TypeError("LinComb is not hashable")

    def __add__(self, other: "LinComb") -> "LinComb":
        if not other:
            return self
        data = dict(self._terms)
        for b, c in other._terms.items():
            acc = data.get(b, _ZERO) + c
            if acc:
                data[b] = acc
            else:
                del data[b]
        out = LinComb.__new__(LinComb)
        out._terms = data
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def scale(self, coeff: Scalar) -> "LinComb":
        c = as_fraction(coeff)
        out = LinComb.__new__(LinComb)
        out._terms = {b: c * v for b, v in self._terms.items()} if c else {}
        return out

    def __mul__(self, coeff: Scalar) -> "LinComb":
        return self.scale(coeff)

    __rmul__ = __mul__

    def combine(self, other: "LinComb", scale: Scalar = 1) -> "LinComb":
        """self + scale * other, in one pass."""
        return self + other.scale(scale)

    def map_basis(self, f: Callable[[Any], Any]) -> "LinComb":
        """Linear extension of f; f may return a basis element or a LinComb."""
        total = LinComb.zero()
        for b, c in self._terms.items():
            image = f(b)
            if isinstance(image, LinComb):
                total = total + image.scale(c)
            else:
                total = total + LinComb.term(image, c)
        return total

    def bilinear(self, other: "LinComb", f: Callable[[Any, Any], Any]) -> "LinComb":
        """Bilinear extension of f over pairs of basis elements."""
        total = LinComb.zero()
        for b1, c1 in self._terms.items():
            for b2, c2 in other._terms.items():
                image = f(b1, b2)
                if isinstance(image, LinComb):
                    total = total + image.scale(c1 * c2)
                else:
                    total = total + LinComb.term(image, c1 * c2)
        return total

    def functional(self, f: Callable[[Any], Scalar]) -> Fraction:
        """Linear extension of a scalar-valued functional."""
        total = _ZERO
        for b, c in self._terms.items():
            total += c * as_fraction(f(b))
        return total

    def graded_part(self, degree_of: Callable[[Any], int], max_degree: int) -> "LinComb":
        out = LinComb.__new__(LinComb)
        out._terms = {b: c for b, c in self._terms.items() if degree_of(b) <= max_degree}
        return out

    def format(self, fmt: Callable[[Any], str] = str) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{fmt(b)}" for b, c in self.sorted_items())

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LinComb({self.format()})"


class Tensor:
    """An elementary tensor of basis elements, printed ``a (x) b``."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[Any]):
        self.parts = tuple(parts)
        self._hash = hash(("Tensor", self.parts))

    def sort_key(self) -> tuple:
        return tuple(p.sort_key() for p in self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tensor) and self.parts == other.parts

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return " (x) ".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Tensor({', '.join(repr(p) for p in self.parts)})"


def lincomb_tensor(*factors: LinComb) -> LinComb:
    """Tensor product of linear combinations, as a LinComb over Tensor."""
    total = LinComb.term(Tensor(()))
    for factor in factors:
        total = total.bilinear(factor, lambda t, b: Tensor(t.parts + (b,)))
    return total


def splice_at(x: LinComb, index: int, f: Callable[[Any], LinComb]) -> LinComb:
    """Apply a linear map to one tensor slot, splicing Tensor-valued images in place."""
    total = LinComb.zero()
    for t, c in x.items():
        image = f(t.parts[index])
        if not isinstance(image, LinComb):
            image = LinComb.term(image)
        for s, c2 in image.items():
            mid = s.parts if isinstance(s, Tensor) else (s,)
            total = total + LinComb.term(Tensor(t.parts[:index] + mid + t.parts[index + 1:]), c * c2)
    return total


def pair_eval(x: LinComb, y: LinComb,
              pairing: Callable[[Any, Any], Fraction | None]) -> Fraction:
    """Bilinear extension of a basis-level pairing.

    The pairing callback returns the scalar value, or None when the pair is
    outside its domain (which is an error, reported with both elements named).
    """
    total = _ZERO
    for b1, c1 in x.items():
        for b2, c2 in y.items():
            v = pairing(b1, b2)
            if v is None:
                raise PairingError(f"pairing undefined for ({b1}, {b2})")
            total += c1 * c2 * v
    return total


def kronecker(b1: Any, b2: Any) -> Fraction:
    return Fraction(1) if b1 == b2 else _ZERO


def functional_convolve(f: Callable[[Any], Scalar], g: Callable[[Any], Scalar],
                        coproduct: Callable[[Any], LinComb]) -> Callable[[Any], Fraction]:
    """Convolution product of two functionals with respect to a coproduct."""

    def conv(basis: Any) -> Fraction:
        total = _ZERO
        for t, c in coproduct(basis).items():
            a, b = t.parts
            total += c * as_fraction(f(a)) * as_fraction(g(b))
        return total

    return conv
