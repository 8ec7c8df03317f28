"""Exact spectral analysis for invertible 2x2 rational matrices.

Three pieces live here:

* ``QuadNum`` -- exact arithmetic in a quadratic extension Q(sqrt(d)), used
  to represent eigenvalue ratios and the targets of power equations.
* ``cheb_solve`` -- given rational p, q in [-1, 1], the exact solution set of
  T_n(p) = q over nonnegative integers n, where T_n is the degree-n Chebyshev
  polynomial of the first kind (equivalently cos(n*theta) = q when
  cos(theta) = p).
* ``power_similar_identity`` -- the minimal m >= 1 such that A^m is a nonzero
  rational multiple of the identity, when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .linalg import CharPoly, Mat2, Rat, RatLike, _rat, char_poly, mat_pow


@dataclass(frozen=True, slots=True)
class QuadNum:
    """Exact element re + im * sqrt(d) of a quadratic extension.

    d is a fixed rational radicand shared by all operands of an expression;
    it may have either sign and is not assumed square-free.  Mixing radicands
    is rejected.
    """

    re: Rat
    im: Rat
    d: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _rat(self.re))
        object.__setattr__(self, "im", _rat(self.im))
        object.__setattr__(self, "d", _rat(self.d))

    def _check(self, other: QuadNum) -> None:
        if self.d != other.d:
            raise ValueError(f"mismatched radicands: {self.d} vs {other.d}")

    @classmethod
    def one(cls, d: RatLike) -> QuadNum:
        return cls(Fraction(1), Fraction(0), _rat(d))

    def __add__(self, other: QuadNum) -> QuadNum:
        if not isinstance(other, QuadNum):
            return NotImplemented
        self._check(other)
        return QuadNum(self.re + other.re, self.im + other.im, self.d)

    def __sub__(self, other: QuadNum) -> QuadNum:
        if not isinstance(other, QuadNum):
            return NotImplemented
        self._check(other)
        return QuadNum(self.re - other.re, self.im - other.im, self.d)

    def __neg__(self) -> QuadNum:
        return QuadNum(-self.re, -self.im, self.d)

    def __mul__(self, other: QuadNum) -> QuadNum:
        if not isinstance(other, QuadNum):
            return NotImplemented
        self._check(other)
        return QuadNum(
            self.re * other.re + self.d * self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.d,
        )

    def __pow__(self, k: int) -> QuadNum:
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result = QuadNum.one(self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> QuadNum:
        return QuadNum(self.re, -self.im, self.d)

    def norm(self) -> Rat:
        """Field norm re^2 - d * im^2; multiplicative."""
        return self.re * self.re - self.d * self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


def quad_pow(z: QuadNum, k: int) -> QuadNum:
    """Exact k-th power by square-and-multiply; k = 0 gives 1."""
    return z ** k


@dataclass(frozen=True)
class Periodic:
    """The solution set is a union of residue classes modulo `period`."""

    period: int
    residues: tuple[int, ...]


@dataclass(frozen=True)
class Finite:
    """All solutions, in increasing order (at most one in practice)."""

    solutions: tuple[int, ...]


@dataclass(frozen=True)
class Empty:
    """No nonnegative integer solves the query."""


ChebyshevAnswer = Union[Periodic, Finite, Empty]

# Doubled-cosine track: t_0 = 2, t_1 = 2p, t_{n+1} = 2p t_n - t_{n-1},
# so t_n = 2 T_n(p) and the query T_n(p) = q reads t_n = 2q.
_PERIOD_SEARCH_LIMIT = 12


def cheb_solve(p: Rat, q: Rat) -> ChebyshevAnswer:
    """Exact characterization of { n >= 0 : T_n(p) = q }.

    When 2p is an integer (p in {0, +-1/2, +-1}) the track is periodic with
    period dividing 12; one period is enumerated.  Otherwise, with m > 1 the
    lowest-terms denominator of 2p, the denominator of t_n is exactly m^n,
    which pins down a single candidate n from the denominator of 2q; the
    candidate is confirmed by exact iteration.
    """
    p, q = _rat(p), _rat(q)
    if abs(p) > 1 or abs(q) > 1:
        raise ValueError("both query values must lie in [-1, 1]")
    tp = 2 * p
    tq = 2 * q
    m = tp.denominator
    if m == 1:
        return _solve_periodic(tp, tq)

    den = tq.denominator
    n = 0
    while den > 1 and den % m == 0:
        den //= m
        n += 1
    if den != 1:
        return Empty()
    t_prev, t_cur = Fraction(2), tp
    for _ in range(n):
        t_prev, t_cur = t_cur, tp * t_cur - t_prev
    # after the loop t_prev == t_n
    if t_prev == tq:
        return Finite((n,))
    return Empty()


def _solve_periodic(tp: Fraction, tq: Fraction) -> ChebyshevAnswer:
    track = [Fraction(2), tp]
    period = None
    for k in range(1, _PERIOD_SEARCH_LIMIT + 1):
        track.append(tp * track[-1] - track[-2])
        if (track[k], track[k + 1]) == (track[0], track[1]):
            period = k
            break
    assert period is not None, "integer doubled cosine must have period <= 12"
    residues = tuple(n for n in range(period) if track[n] == tq)
    if not residues:
        return Empty()
    return Periodic(period, residues)


@dataclass(frozen=True)
class PeriodResult:
    """Minimal order m with A^m == scalar * I (scalar nonzero rational)."""

    order: int
    scalar: Rat


# Rational cosines attained at rational multiples of pi, keyed to the order
# of the corresponding unit: cos -> minimal m with (cos + i sin)^m = 1.
_ORDER_BY_COSINE = {
    Fraction(-1): 2,
    Fraction(0): 4,
    Fraction(1, 2): 6,
    Fraction(-1, 2): 3,
}

NIVEN_COSINES = frozenset(
    (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(-1))
)


def eigen_ratio(cp: CharPoly) -> QuadNum:
    """Ratio of the two eigenvalues of a matrix with polynomial x^2 + b x + c.

    Returned over the radicand d = b^2 - 4c as
    (b^2 - 2c)/(2c) + (b/(2c)) sqrt(d).  For d < 0 the value lies on the unit
    circle: its norm is identically 1.
    """
    if cp.c == 0:
        raise ValueError("eigenvalue ratio requires det != 0")
    two_c = 2 * cp.c
    return QuadNum((cp.b * cp.b - two_c) / two_c, cp.b / two_c, cp.discriminant)


def power_similar_identity(a: Mat2) -> Optional[PeriodResult]:
    """Minimal m >= 1 with A^m a nonzero multiple of I, or None.

    Branches: scalar matrices have m = 1; a repeated eigenvalue on a
    non-scalar matrix means no power works (defective); distinct real
    eigenvalues only allow ratio -1 (trace zero, m = 2); complex eigenvalues
    reduce to whether the rational cosine of the ratio angle lies in
    {0, +-1/2, -1}, which pins the order to one of {2, 3, 4, 6}.
    """
    if a.det() == 0:
        raise ValueError("matrix must be invertible")
    if a.is_scalar():
        return PeriodResult(1, a.e00)
    cp = char_poly(a)
    disc = cp.discriminant
    if disc == 0:
        return None
    if disc > 0:
        if cp.b != 0:
            return None
        order = 2
    else:
        ratio_cos = (cp.b * cp.b - 2 * cp.c) / (2 * cp.c)
        order = _ORDER_BY_COSINE.get(ratio_cos)
        if order is None:
            return None
    power = mat_pow(a, order)
    scalar = power.e00
    assert power.is_scalar() and scalar != 0, "order classification is exact"
    return PeriodResult(order, scalar)
