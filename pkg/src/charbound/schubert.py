"""Schubert calculus on the Grassmannian of q-planes in C^N.

One combinatorial rule does all the work: multiplication by a special class
is a sum over horizontal-strip extensions. General products go through the
determinant expansion into special-class monomials, and the classical
factorial formula for the degree of the Grassmannian serves as an
independent cross-check on the whole machine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .varieties import Partition


class BoxError(ValueError):
    """A partition does not fit inside the q x (N-q) box."""


class GradingError(ValueError):
    """A pairing was requested in the wrong total codimension."""


@dataclass(frozen=True)
class Grassmannian:
    """G_q(C^N): q-dimensional subspaces of C^N."""

    q: int
    N: int

    def __post_init__(self):
        if not 1 <= self.q < self.N:
            raise ValueError(f"need 1 <= q < N, got q={self.q}, N={self.N}")

    @property
    def cols(self) -> int:
        return self.N - self.q

    @property
    def total_codim(self) -> int:
        return self.q * self.cols

    @property
    def point_partition(self) -> Partition:
        """Index of the class of a point: the full box."""
        return Partition((self.cols,) * self.q)

    def __str__(self):
        return f"G({self.q},{self.N})"


class SchubertClass:
    """Integer combination of basis classes, keyed by box partitions.

    Mixed-degree sums are allowed (they appear as determinant
    intermediates); pairings check homogeneity where it matters.
    """

    __slots__ = ("grassmannian", "terms")

    def __init__(self, grassmannian: Grassmannian, terms=None):
        self.grassmannian = grassmannian
        clean = {}
        for shape, coeff in (terms or {}).items():
            if not isinstance(shape, Partition):
                shape = Partition(tuple(shape))
            if not shape.fits_in_box(grassmannian.q, grassmannian.cols):
                raise BoxError(
                    f"{shape} does not fit in the {grassmannian.q}x"
                    f"{grassmannian.cols} box of {grassmannian}"
                )
            if coeff:
                clean[shape] = clean.get(shape, 0) + coeff
        self.terms = {s: c for s, c in clean.items() if c}

    @classmethod
    def basis(cls, grassmannian: Grassmannian, shape: Partition) -> "SchubertClass":
        return cls(grassmannian, {shape: 1})

    @classmethod
    def zero(cls, grassmannian: Grassmannian) -> "SchubertClass":
        return cls(grassmannian)

    @classmethod
    def one(cls, grassmannian: Grassmannian) -> "SchubertClass":
        return cls(grassmannian, {Partition(()): 1})

    def _require_same_space(self, other: "SchubertClass") -> None:
        if self.grassmannian != other.grassmannian:
            raise ValueError(
                f"classes live on different Grassmannians: "
                f"{self.grassmannian} vs {other.grassmannian}"
            )

    def __add__(self, other):
        if not isinstance(other, SchubertClass):
            return NotImplemented
        self._require_same_space(other)
        merged = dict(self.terms)
        for shape, coeff in other.terms.items():
            merged[shape] = merged.get(shape, 0) + coeff
        return SchubertClass(self.grassmannian, merged)

    def __neg__(self):
        return SchubertClass(
            self.grassmannian, {s: -c for s, c in self.terms.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchubertClass(
                self.grassmannian, {s: c * other for s, c in self.terms.items()}
            )
        if isinstance(other, SchubertClass):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, SchubertClass)
            and self.grassmannian == other.grassmannian
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def codimensions(self) -> set:
        """Set of codimensions |shape| present among the nonzero terms."""
        return {shape.size for shape in self.terms}

    def coefficient(self, shape: Partition) -> int:
        return self.terms.get(shape, 0)

    def __repr__(self):
        return f"SchubertClass({self.grassmannian}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for shape in sorted(self.terms, key=lambda s: (s.size, s.parts)):
            coeff = self.terms[shape]
            name = "1" if not shape.parts else f"sigma[{','.join(map(str, shape.parts))}]"
            if coeff == 1 and shape.parts:
                pieces.append(name)
            else:
                pieces.append(f"{coeff}*{name}" if shape.parts else str(coeff))
        return " + ".join(pieces)


def _horizontal_strips(padded, add, cols):
    # all weakly decreasing extensions mu >= lam with mu/lam a horizontal
    # strip of size `add` inside the box; `padded` has length q
    q = len(padded)
    mu = [0] * q

    def rec(i, remaining):
        if i == q:
            if remaining == 0:
                yield tuple(mu)
            return
        upper = cols if i == 0 else padded[i - 1]
        lo = padded[i]
        hi = min(upper, padded[i] + remaining)
        for v in range(lo, hi + 1):
            mu[i] = v
            yield from rec(i + 1, remaining - (v - padded[i]))

    yield from rec(0, add)


def pieri(s: SchubertClass, k: int) -> SchubertClass:
    """Multiply by the special class sigma_k (sigma_0 is the identity)."""
    gr = s.grassmannian
    if not 0 <= k <= gr.cols:
        raise ValueError(f"special index must satisfy 0 <= k <= {gr.cols}, got {k}")
    if k == 0:
        return s
    out = {}
    for shape, coeff in s.terms.items():
        padded = shape.parts + (0,) * (gr.q - len(shape.parts))
        for mu in _horizontal_strips(padded, k, gr.cols):
            key = Partition(mu)
            out[key] = out.get(key, 0) + coeff
    return SchubertClass(gr, out)


def _permutation_sign(perm) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _determinant_monomials(shape: Partition, gr: Grassmannian):
    # signed special-class monomials of det(sigma_{a_i - i + j}); entries with
    # index < 0 or > cols vanish and kill the permutation term
    r = len(shape)
    for perm in permutations(range(r)):
        indices = tuple(shape.parts[i] - i + perm[i] for i in range(r))
        if any(x < 0 or x > gr.cols for x in indices):
            continue
        yield _permutation_sign(perm), tuple(x for x in indices if x)


def giambelli_expand(shape: Partition, grassmannian: Grassmannian) -> SchubertClass:
    """Expand the determinant of special classes; must equal the basis class."""
    if not shape.fits_in_box(grassmannian.q, grassmannian.cols):
        raise BoxError(
            f"{shape} does not fit in the {grassmannian.q}x{grassmannian.cols} "
            f"box of {grassmannian}"
        )
    result = SchubertClass.zero(grassmannian)
    for sign, indices in _determinant_monomials(shape, grassmannian):
        term = SchubertClass.one(grassmannian)
        for k in indices:
            term = pieri(term, k)
        result = result + sign * term
    return result


def multiply(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    """General product: expand one factor into special monomials, then Pieri."""
    a._require_same_space(b)
    gr = a.grassmannian
    if len(b.terms) > len(a.terms):
        a, b = b, a
    out = SchubertClass.zero(gr)
    for shape, coeff in b.terms.items():
        for sign, indices in _determinant_monomials(shape, gr):
            term = a
            for k in indices:
                term = pieri(term, k)
            out = out + (coeff * sign) * term
    return out


def intersection_number(classes) -> int:
    """Coefficient of the point class in the product of the given classes.

    Inputs must be homogeneous and their codimensions must fill the box
    exactly; a zero input short-circuits to 0.
    """
    classes = list(classes)
    if not classes:
        raise ValueError("need at least one class")
    gr = classes[0].grassmannian
    total = 0
    for c in classes:
        c._require_same_space(classes[0])
        if c.is_zero():
            return 0
        cods = c.codimensions()
        if len(cods) != 1:
            raise GradingError("intersection numbers need homogeneous classes")
        total += cods.pop()
    if total != gr.total_codim:
        raise GradingError(
            f"total codimension {total} != dim {gr.total_codim} of {gr}"
        )
    product = classes[0]
    for c in classes[1:]:
        product = multiply(product, c)
    return product.coefficient(gr.point_partition)


def grassmannian_degree(q: int, N: int) -> int:
    """Degree of G_q(C^N) in its Pluecker embedding, by the factorial formula.

    Independent oracle for the Pieri machinery: must equal the intersection
    number of q(N-q) copies of sigma_1.
    """
    gr = Grassmannian(q, N)
    value = Fraction(factorial(gr.total_codim))
    for i in range(q):
        value *= Fraction(factorial(i), factorial(gr.cols + i))
    if value.denominator != 1:
        raise ArithmeticError("factorial degree formula must be integral")
    return int(value)
