"""Exact truncated polynomial arithmetic in a single graded variable h.

All cohomology bookkeeping for projective varieties happens in
Z[h]/(h^(cap+1)): arbitrary-precision integer coefficients, every term of
degree above the truncation cap discarded eagerly so intermediate results
stay small. Values are immutable and every operation is a pure function,
so classes can be shared freely and evaluated in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass


class CapMismatchError(ValueError):
    """Two classes truncated at different degrees were combined."""


class NotAUnitError(ValueError):
    """Inversion was attempted on a class whose constant term is not 1."""


@dataclass(frozen=True)
class TruncatedClass:
    """Integer polynomial in h, truncated above degree ``cap``.

    ``coeffs[i]`` is the coefficient of h^i; the tuple always has exactly
    ``cap + 1`` entries (zero padded). The cap travels with the value, so
    classes living on varieties of different dimension can coexist.
    """

    coeffs: tuple
    cap: int

    def __post_init__(self):
        if self.cap < 0:
            raise ValueError("cap must be nonnegative")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.cap + 1:
            raise ValueError(
                f"need exactly cap+1={self.cap + 1} coefficients, got {len(coeffs)}"
            )
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, cap: int) -> "TruncatedClass":
        """Build from any coefficient sequence, padding or truncating to cap."""
        sized = list(coeffs)[: cap + 1]
        sized += [0] * (cap + 1 - len(sized))
        return cls(tuple(sized), cap)

    @classmethod
    def zero(cls, cap: int) -> "TruncatedClass":
        return cls.from_coeffs((), cap)

    @classmethod
    def one(cls, cap: int) -> "TruncatedClass":
        return cls.from_coeffs((1,), cap)

    @classmethod
    def monomial(cls, coeff: int, degree: int, cap: int) -> "TruncatedClass":
        """coeff * h^degree; the zero class when the degree exceeds the cap."""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        if degree > cap:
            return cls.zero(cap)
        return cls.from_coeffs([0] * degree + [coeff], cap)

    @classmethod
    def hyperplane(cls, cap: int) -> "TruncatedClass":
        """The class h itself."""
        return cls.monomial(1, 1, cap)

    # -- ring operations ---------------------------------------------------

    def _require_same_cap(self, other: "TruncatedClass") -> None:
        if self.cap != other.cap:
            raise CapMismatchError(f"cap mismatch: {self.cap} vs {other.cap}")

    def __add__(self, other):
        if not isinstance(other, TruncatedClass):
            return NotImplemented
        self._require_same_cap(other)
        return TruncatedClass(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.cap
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedClass):
            return NotImplemented
        self._require_same_cap(other)
        return TruncatedClass(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.cap
        )

    def __neg__(self):
        return TruncatedClass(tuple(-a for a in self.coeffs), self.cap)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedClass(tuple(a * other for a in self.coeffs), self.cap)
        if not isinstance(other, TruncatedClass):
            return NotImplemented
        self._require_same_cap(other)
        out = [0] * (self.cap + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.cap + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedClass(tuple(out), self.cap)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers need invert_unit")
        result = TruncatedClass.one(self.cap)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert_unit(self) -> "TruncatedClass":
        """Multiplicative inverse up to the cap.

        Only defined when the constant term is 1, in which case the inverse
        has integer coefficients (geometric-series recursion, no division).
        """
        if self.coeffs[0] != 1:
            raise NotAUnitError(
                f"constant term must be 1 to invert, got {self.coeffs[0]}"
            )
        inv = [1] + [0] * self.cap
        for k in range(1, self.cap + 1):
            inv[k] = -sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
        return TruncatedClass(tuple(inv), self.cap)

    # -- structure ---------------------------------------------------------

    def truncate(self, cap: int) -> "TruncatedClass":
        """Drop down to a smaller cap; raising the cap would invent data."""
        if cap > self.cap:
            raise ValueError(f"cannot raise cap from {self.cap} to {cap}")
        return TruncatedClass(self.coeffs[: cap + 1], cap)

    def coefficient(self, degree: int) -> int:
        """Coefficient of h^degree (0 beyond the cap)."""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        if degree > self.cap:
            return 0
        return self.coeffs[degree]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*h")
            else:
                parts.append(f"{c}*h^{i}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"
