"""Exact 2x2 rational linear algebra.

Vectors, matrices and characteristic-polynomial data over arbitrary-precision
rationals (`fractions.Fraction`).  Every value is immutable and every
operation is a pure function, so values can be shared freely.  No floating
point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Union

Rat = Fraction
RatLike = Union[Fraction, int]


class RankError(ValueError):
    """A matrix does not have the rank an operation requires."""


def _rat(x: RatLike) -> Rat:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, slots=True)
class Vec2:
    """Column vector with two rational coordinates."""

    x0: Rat
    x1: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "x0", _rat(self.x0))
        object.__setattr__(self, "x1", _rat(self.x1))

    def dot(self, other: Vec2) -> Rat:
        return self.x0 * other.x0 + self.x1 * other.x1

    def scale(self, s: RatLike) -> Vec2:
        s = _rat(s)
        return Vec2(s * self.x0, s * self.x1)

    def perp(self) -> Vec2:
        """A vector orthogonal to this one (quarter turn)."""
        return Vec2(-self.x1, self.x0)

    def is_zero(self) -> bool:
        return self.x0 == 0 and self.x1 == 0


@dataclass(frozen=True, slots=True)
class Mat2:
    """2x2 rational matrix, stored row-major."""

    e00: Rat
    e01: Rat
    e10: Rat
    e11: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "e00", _rat(self.e00))
        object.__setattr__(self, "e01", _rat(self.e01))
        object.__setattr__(self, "e10", _rat(self.e10))
        object.__setattr__(self, "e11", _rat(self.e11))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RatLike]]) -> Mat2:
        (a, b), (c, d) = rows
        return cls(_rat(a), _rat(b), _rat(c), _rat(d))

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> Mat2:
        return cls(0, 0, 0, 0)

    def rows(self) -> tuple[tuple[Rat, Rat], tuple[Rat, Rat]]:
        return ((self.e00, self.e01), (self.e10, self.e11))

    def entries(self) -> tuple[Rat, Rat, Rat, Rat]:
        return (self.e00, self.e01, self.e10, self.e11)

    def __mul__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e00 * other.e00 + self.e01 * other.e10,
            self.e00 * other.e01 + self.e01 * other.e11,
            self.e10 * other.e00 + self.e11 * other.e10,
            self.e10 * other.e01 + self.e11 * other.e11,
        )

    def __add__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e00 + other.e00,
            self.e01 + other.e01,
            self.e10 + other.e10,
            self.e11 + other.e11,
        )

    def __sub__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Mat2:
        return Mat2(-self.e00, -self.e01, -self.e10, -self.e11)

    def scale(self, s: RatLike) -> Mat2:
        s = _rat(s)
        return Mat2(s * self.e00, s * self.e01, s * self.e10, s * self.e11)

    def mul_vec(self, u: Vec2) -> Vec2:
        return Vec2(self.e00 * u.x0 + self.e01 * u.x1, self.e10 * u.x0 + self.e11 * u.x1)

    def trace(self) -> Rat:
        return self.e00 + self.e11

    def det(self) -> Rat:
        return self.e00 * self.e11 - self.e01 * self.e10

    def is_zero(self) -> bool:
        return self.e00 == 0 and self.e01 == 0 and self.e10 == 0 and self.e11 == 0

    def is_scalar(self) -> bool:
        """True when the matrix is a rational multiple of the identity."""
        return self.e01 == 0 and self.e10 == 0 and self.e00 == self.e11


def outer(u: Vec2, v: Vec2) -> Mat2:
    """Outer product u v^T (rank <= 1 by construction)."""
    return Mat2(u.x0 * v.x0, u.x0 * v.x1, u.x1 * v.x0, u.x1 * v.x1)


@dataclass(frozen=True, slots=True)
class CharPoly:
    """Coefficients of the characteristic polynomial x^2 + b x + c."""

    b: Rat
    c: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", _rat(self.b))
        object.__setattr__(self, "c", _rat(self.c))

    @property
    def discriminant(self) -> Rat:
        return self.b * self.b - 4 * self.c


def rank(m: Mat2) -> int:
    """0 for the zero matrix, 2 for invertible, 1 otherwise."""
    if m.is_zero():
        return 0
    return 2 if m.det() != 0 else 1


def is_scalar_multiple(m: Mat2, n: Mat2) -> Optional[Rat]:
    """Nonzero s with m == s * n, or None.

    The pair of zero matrices yields None: no nonzero multiplier is forced,
    and callers treat the zero matrix separately.
    """
    s = None
    for me, ne in zip(m.entries(), n.entries()):
        if ne != 0:
            s = me / ne
            break
    if s is None or s == 0:
        return None
    if all(me == s * ne for me, ne in zip(m.entries(), n.entries())):
        return s
    return None


def factor_rank_one(m: Mat2) -> tuple[Vec2, Vec2]:
    """Write a rank-1 matrix as u v^T.

    Normal form: the first nonzero coordinate of u equals 1, which makes the
    factorization deterministic (it is otherwise unique only up to reciprocal
    scaling of the two factors).
    """
    r = rank(m)
    if r != 1:
        raise RankError(f"factor_rank_one requires rank 1, got rank {r}")
    if m.e00 != 0 or m.e01 != 0:
        v = Vec2(m.e00, m.e01)
        t = m.e10 / m.e00 if m.e00 != 0 else m.e11 / m.e01
        u = Vec2(1, t)
    else:
        u = Vec2(0, 1)
        v = Vec2(m.e10, m.e11)
    return u, v


def char_poly(m: Mat2) -> CharPoly:
    """Characteristic polynomial x^2 + b x + c with b = -trace, c = det."""
    return CharPoly(-m.trace(), m.det())


def mat_pow(m: Mat2, k: int) -> Mat2:
    """Exact k-th power by binary exponentiation; k = 0 gives the identity."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result = Mat2.identity()
    base = m
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def primitive_normalize(m: Mat2) -> tuple[Mat2, Rat]:
    """Canonical representative of the nonzero-scaling class of m.

    Returns (p, s) with m == s * p, where p has integer entries with gcd 1
    and a positive first nonzero entry in row-major order.
    """
    if m.is_zero():
        raise ValueError("zero matrix has no primitive form")
    entries = m.entries()
    den_lcm = 1
    for e in entries:
        den_lcm = den_lcm * e.denominator // gcd(den_lcm, e.denominator)
    ints = [e.numerator * (den_lcm // e.denominator) for e in entries]
    g = 0
    for value in ints:
        g = gcd(g, abs(value))
    sign = 1
    for value in ints:
        if value != 0:
            sign = 1 if value > 0 else -1
            break
    p = Mat2(*(Fraction(value * sign, g) for value in ints))
    return p, Fraction(sign * g, den_lcm)
