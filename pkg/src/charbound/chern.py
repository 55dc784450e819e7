"""Chern classes and Chern numbers on complete intersections.

Every bundle handled here is pulled back from the ambient projective space,
so each Chern class is an integer multiple of a power of the hyperplane
class h. The computations still run through full truncated-polynomial
arithmetic: products of classes, determinants and twists then need no
special casing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .graded import TruncatedClass
from .varieties import CompleteIntersection, MultiIndex, Partition


class DegreeError(ValueError):
    """A pairing was requested in the wrong cohomological degree."""


@dataclass(frozen=True)
class ChernVector:
    """Total Chern class of a bundle restricted to a fixed variety.

    ``classes[i]`` is c_i, each truncated at the variety dimension; c_0 = 1
    and the list has exactly ``rank + 1`` entries.
    """

    rank: int
    classes: tuple

    def __post_init__(self):
        classes = tuple(self.classes)
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if len(classes) != self.rank + 1:
            raise ValueError(
                f"need rank+1={self.rank + 1} classes, got {len(classes)}"
            )
        cap = classes[0].cap
        if any(c.cap != cap for c in classes):
            raise ValueError("all classes must share one truncation cap")
        if classes[0] != TruncatedClass.one(cap):
            raise ValueError("c_0 must be 1")
        object.__setattr__(self, "classes", classes)

    @property
    def cap(self) -> int:
        return self.classes[0].cap

    def chern(self, i: int) -> TruncatedClass:
        """c_i, the zero class outside 0 <= i <= rank."""
        if 0 <= i <= self.rank:
            return self.classes[i]
        return TruncatedClass.zero(self.cap)

    @classmethod
    def from_h_multiples(cls, multiples, cap: int) -> "ChernVector":
        """Build from integers a_0..a_r with c_i = a_i * h^i."""
        ms = list(multiples)
        return cls(
            len(ms) - 1,
            tuple(TruncatedClass.monomial(a, i, cap) for i, a in enumerate(ms)),
        )

    def h_multiples(self) -> tuple:
        """The integers a_i with c_i = a_i * h^i (valid on these varieties)."""
        return tuple(c.coefficient(i) for i, c in enumerate(self.classes))


def _total_class(ci: CompleteIntersection) -> TruncatedClass:
    # (1+h)^(m+1) / prod_j (1 + d_j h), truncated at the dimension
    n = ci.dimension
    total = (TruncatedClass.one(n) + TruncatedClass.hyperplane(n)) ** (
        ci.ambient_dim + 1
    )
    for d in ci.multidegree:
        factor = TruncatedClass.one(n) + TruncatedClass.monomial(d, 1, n)
        total = total * factor.invert_unit()
    return total


@lru_cache(maxsize=None)
def tangent_chern(ci: CompleteIntersection) -> ChernVector:
    """Chern classes of the tangent bundle, via the ambient/normal quotient."""
    n = ci.dimension
    total = _total_class(ci)
    return ChernVector(
        n, tuple(TruncatedClass.monomial(total.coeffs[i], i, n) for i in range(n + 1))
    )


@lru_cache(maxsize=None)
def cotangent_chern(ci: CompleteIntersection) -> ChernVector:
    """Chern classes of the cotangent bundle: c_i flips sign with parity."""
    t = tangent_chern(ci)
    return ChernVector(
        t.rank,
        tuple(c if i % 2 == 0 else -c for i, c in enumerate(t.classes)),
    )


def twist_chern(e: ChernVector, t: int) -> ChernVector:
    """Chern classes after tensoring with a line bundle of class t*h.

    c_i(E (x) L) = sum_j C(rank-j, i-j) * t^(i-j) * c_j(E); twisting by t and
    then by -t is the identity.
    """
    cap = e.cap
    classes = []
    for i in range(e.rank + 1):
        acc = TruncatedClass.zero(cap)
        for j in range(i + 1):
            scale = comb(e.rank - j, i - j) * t ** (i - j)
            if scale == 0:
                continue
            acc = acc + TruncatedClass.monomial(scale, i - j, cap) * e.classes[j]
        classes.append(acc)
    return ChernVector(e.rank, tuple(classes))


def chern_number(
    ci: CompleteIntersection, e: ChernVector, index: MultiIndex
) -> int:
    """Pairing of c_{i_1}...c_{i_r} * h^(n - |I|) against the variety.

    The coefficient of h^n in the padded product, times the degree.
    """
    n = ci.dimension
    if index.weight > n:
        raise DegreeError(f"index weight {index.weight} exceeds dimension {n}")
    product = TruncatedClass.one(n)
    for i in index:
        product = product * e.chern(i)
    product = product * TruncatedClass.monomial(1, n - index.weight, n)
    return product.coefficient(n) * ci.degree


@lru_cache(maxsize=None)
def euler_characteristic(ci: CompleteIntersection) -> int:
    """Topological Euler characteristic: the top tangent Chern number."""
    n = ci.dimension
    return chern_number(ci, tangent_chern(ci), MultiIndex((n,)))


def canonical_class(ci: CompleteIntersection) -> int:
    """h-multiple of the canonical class: sum(d_j) - m - 1."""
    return sum(ci.multidegree) - ci.ambient_dim - 1


def ample_class(ci: CompleteIntersection) -> int:
    """h-multiple of the ample twist canonical + (n+2)h; always >= 1."""
    value = canonical_class(ci) + ci.dimension + 2
    if value <= 0:
        raise RuntimeError(
            f"ample multiple {value} <= 0 for {ci}; this cannot happen for a "
            "valid smooth complete intersection"
        )
    return value


def ample_degree_sequence(ci: CompleteIntersection) -> tuple:
    """Pairings h^(n-i) * A^i for i = 0..n, with A the ample class above.

    Entry 0 is the degree; for hypersurfaces the sequence is exactly
    (d, d^2, ..., d^(n+1)).
    """
    a = ample_class(ci)
    d = ci.degree
    return tuple(a**i * d for i in range(ci.dimension + 1))


def schur_class(e: ChernVector, shape: Partition) -> TruncatedClass:
    """Determinant det(c_{a_i - i + j}) expanded exactly in the truncated ring.

    Entries with index below 0 or above the rank are zero; c_0 = 1. The empty
    shape gives 1.
    """
    r = len(shape)
    cap = e.cap
    if r == 0:
        return TruncatedClass.one(cap)
    if shape.parts[0] > e.rank:
        raise ValueError(
            f"largest part {shape.parts[0]} exceeds bundle rank {e.rank}"
        )
    matrix = [
        [e.chern(shape.parts[i] - i + j) for j in range(r)] for i in range(r)
    ]
    return _determinant(matrix, cap)


def _determinant(matrix, cap: int) -> TruncatedClass:
    # Laplace expansion along the first row; zero entries prune the recursion
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = TruncatedClass.zero(cap)
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = entry * _determinant(minor, cap)
        total = total + term if col % 2 == 0 else total - term
    return total


def twisted_chern_sum(e: ChernVector, r: int, t: int) -> TruncatedClass:
    """sum of t^(r-j) * c_j(e) for j = 0..r, as one mixed-degree class.

    This is the crude twist estimate that drops the binomial weights of
    twist_chern; pairings are expected to extract the top-degree part.
    """
    if not 0 <= r <= e.rank:
        raise ValueError(f"need 0 <= r <= rank={e.rank}, got {r}")
    acc = TruncatedClass.zero(e.cap)
    for j in range(r + 1):
        acc = acc + t ** (r - j) * e.classes[j]
    return acc


def pontryagin_to_chern_index(index: MultiIndex) -> MultiIndex:
    """Chern indices whose squared classes bound the given real-side index."""
    return MultiIndex(tuple(2 * j for j in index))


def squared_chern_pairing(
    ci: CompleteIntersection, e: ChernVector, index: MultiIndex
) -> int:
    """Pairing of the product of squared classes c_{2j_t}^2 against the variety.

    The product must land exactly in top degree; the empty index is the
    fundamental pairing of h^n, i.e. the degree.
    """
    n = ci.dimension
    if len(index) == 0:
        return ci.degree
    chern_idx = pontryagin_to_chern_index(index)
    if 2 * chern_idx.weight != n:
        raise DegreeError(
            f"squared classes have degree {2 * chern_idx.weight}, need {n}"
        )
    product = TruncatedClass.one(n)
    for i in chern_idx:
        c = e.chern(i)
        product = product * c * c
    return product.coefficient(n) * ci.degree
