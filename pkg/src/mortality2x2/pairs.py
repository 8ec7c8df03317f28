"""Decide N_left * V^k * N_right = 0 for singular endpoints and invertible V.

The question collapses to a scalar one: with N_left = u_l v_l^T and
N_right = u_r v_r^T, the product is zero exactly when
s_k = v_l^T V^k u_r vanishes, and s obeys the order-2 recurrence
s_{k+2} = -b s_{k+1} - c s_k driven by the characteristic polynomial
x^2 + b x + c of V.

When V has no power similar to the identity, s_k = 0 is equivalent to
r_k = x where r_1 = 0, r_k = c/(b - r_{k-1}) (a Moebius iteration encoding
V^k ~ V + r_k I) and x = -s_1/s_0.  The three spectral regimes of V are
handled by:

* positive discriminant -- exact iteration of r with a monotone-tail
  refusal certificate anchored at the fixed points of the Moebius map,
  accelerated by a high-precision logarithmic candidate;
* zero discriminant -- the closed form r_k = (k-1) b / (2k), solved
  linearly;
* negative discriminant -- an exact power equation rho^k = tau over
  Q(sqrt(d)) with at most one solution, found through `cheb_solve`.

Every returned witness exponent is confirmed by an exact product check;
every refusal is certified by exact arithmetic.  The only numerics in this
module is the candidate accelerator, whose output is never trusted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation, DivisionByZero, Overflow, localcontext
from fractions import Fraction
from typing import Iterator, Optional, Union

from .linalg import (
    CharPoly,
    Mat2,
    RankError,
    Rat,
    char_poly,
    factor_rank_one,
    mat_pow,
    rank,
)
from .spectral import (
    NIVEN_COSINES,
    Empty,
    Finite,
    QuadNum,
    cheb_solve,
    eigen_ratio,
    power_similar_identity,
    quad_pow,
)


class RefusalReason(str, enum.Enum):
    """Certificate kinds for a refused exponent search."""

    ZERO_NEVER_HIT_MONOTONE = "zero-never-hit-monotone"
    SINGLE_CANDIDATE_FAILED = "single-candidate-failed"
    PERIODIC_SCAN_EXHAUSTED = "periodic-scan-exhausted"
    RATIO_EQUATION_UNSATISFIABLE = "ratio-equation-unsatisfiable"


@dataclass(frozen=True)
class Witness:
    """There is an exponent: N_left * V^k * N_right == 0 exactly."""

    k: int


@dataclass(frozen=True)
class NoExponent:
    """No exponent exists; `reason` names the certifying argument."""

    reason: RefusalReason


PairVerdict = Union[Witness, NoExponent]


@dataclass(frozen=True)
class ScalarRecurrence:
    """s_{k+2} = -b s_{k+1} - c s_k with initial terms s0, s1."""

    b: Rat
    c: Rat
    s0: Rat
    s1: Rat

    def terms(self) -> Iterator[Rat]:
        prev, cur = self.s0, self.s1
        while True:
            yield prev
            prev, cur = cur, -self.b * cur - self.c * prev

    def term(self, k: int) -> Rat:
        if k < 0:
            raise ValueError("index must be nonnegative")
        for i, value in enumerate(self.terms()):
            if i == k:
                return value
        raise AssertionError("unreachable")

    def first_zero(self, lo: int, hi: int) -> Optional[int]:
        """Smallest k in [lo, hi) with s_k == 0, or None."""
        for i, value in enumerate(self.terms()):
            if i >= hi:
                return None
            if i >= lo and value == 0:
                return i
        raise AssertionError("unreachable")


@dataclass(frozen=True)
class RecurrenceState:
    """One step of the Moebius iteration: the value r at index k."""

    k: int
    r: Rat


@dataclass(frozen=True)
class PairProblem:
    """One exponent question with its derived scalar data."""

    n_left: Mat2
    v: Mat2
    n_right: Mat2
    char: CharPoly
    recurrence: ScalarRecurrence
    target: Optional[Rat]  # -s1/s0 when s0 != 0


def pair_problem(n_left: Mat2, v: Mat2, n_right: Mat2) -> PairProblem:
    """Validate the inputs and build the scalar reduction."""
    if rank(n_left) != 1:
        raise RankError("left factor must have rank 1")
    if rank(n_right) != 1:
        raise RankError("right factor must have rank 1")
    if v.det() == 0:
        raise ValueError("inner matrix must be invertible")
    _, v_left = factor_rank_one(n_left)
    u_right, _ = factor_rank_one(n_right)
    s0 = v_left.dot(u_right)
    s1 = v_left.dot(v.mul_vec(u_right))
    cp = char_poly(v)
    recurrence = ScalarRecurrence(cp.b, cp.c, s0, s1)
    target = None if s0 == 0 else -s1 / s0
    return PairProblem(n_left, v, n_right, cp, recurrence, target)


def r_next(b: Rat, c: Rat, r_prev: Rat) -> Optional[Rat]:
    """One Moebius step c/(b - r_prev); None when the step is undefined.

    The undefined step can only occur when V^k is itself similar to the
    identity, which callers exclude via `power_similar_identity`.
    """
    if c == 0:
        raise ValueError("c must be nonzero (invertible matrix)")
    if r_prev == b:
        return None
    return c / (b - r_prev)


def iter_recurrence(cp: CharPoly) -> Iterator[RecurrenceState]:
    """Yield (k, r_k) from k = 1 until the iteration becomes undefined."""
    r = Fraction(0)
    k = 1
    while True:
        yield RecurrenceState(k, r)
        nxt = r_next(cp.b, cp.c, r)
        if nxt is None:
            return
        r = nxt
        k += 1


_CANDIDATE_PRECISION = 60  # decimal digits, comfortably above 128 bits
_CANDIDATE_CAP = 10_000
_ITERATION_CAP = 1_000_000


def _to_decimal(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


def _log_inverse_candidate(b: Rat, c: Rat, x: Rat) -> Optional[int]:
    """Numeric inversion of the closed form for the Moebius iteration.

    Acceleration only: the caller re-checks every candidate window exactly
    and never trusts this value for a refusal.
    """
    with localcontext() as ctx:
        ctx.prec = _CANDIDATE_PRECISION
        try:
            bb = _to_decimal(b)
            xx = _to_decimal(x)
            sd = _to_decimal(b * b - 4 * c).sqrt()
            num = (2 * xx - bb - sd) / (2 * xx - bb + sd)
            base = (bb + sd) / (bb - sd)
            if num == 0 or base == 0:
                return None
            k0 = abs(num).ln() / abs(base).ln()
            k = int(k0.to_integral_value())
        except (InvalidOperation, DivisionByZero, Overflow, ZeroDivisionError):
            return None
    if 1 <= k <= _CANDIDATE_CAP:
        return k
    return None


def _cmp_to_sqrt(lhs: Rat, d: Rat, sign: int) -> int:
    """Sign of lhs - sign*sqrt(d), exactly, for d >= 0 and sign in {-1, 1}."""
    square_cmp = lhs * lhs - d
    if sign > 0:
        if lhs < 0:
            return -1
        return (square_cmp > 0) - (square_cmp < 0)
    if lhs > 0:
        return 1
    return (square_cmp < 0) - (square_cmp > 0)


def solve_r_eq_x(cp: CharPoly, x: Rat) -> Optional[int]:
    """The unique k >= 1 with r_k == x, or None.

    Precondition: no power of the underlying matrix is similar to the
    identity (so the iteration is total and injective).  Refusals in the
    positive-discriminant branch are certified by exact comparisons against
    the fixed points of the Moebius map: once the two most recent iterates
    both sit on the far side of x from the attracting fixed point, no later
    iterate can reach x (within each parity class the iterates move
    monotonically toward the attractor).
    """
    b, c = cp.b, cp.c
    if c == 0:
        raise ValueError("c must be nonzero (invertible matrix)")
    x = Fraction(x)
    disc = cp.discriminant
    if disc < 0:
        return solve_ratio_power(cp, Fraction(1), -x)
    if disc == 0:
        # closed form r_k = (k-1) b / (2k); b != 0 since c = b^2/4 != 0
        if b == 2 * x:
            return None  # the limit value, never attained
        k = b / (b - 2 * x)
        if k.denominator != 1 or k < 1:
            return None
        return int(k)

    if b == 0:
        raise ValueError("b = 0 with positive discriminant is periodic; handle via power_similar_identity")
    if x * x - b * x + c == 0:
        return None  # x is a fixed point of the Moebius map, never attained

    # Fixed points are (b +- sqrt(disc))/2; the attractor is the one of
    # smaller magnitude, which is (b - sqrt(disc))/2 iff b > 0.
    attract_sign = -1 if b > 0 else 1
    x_side = _cmp_to_sqrt(2 * x - b, disc, attract_sign)

    window_end = 0
    candidate = _log_inverse_candidate(b, c, x)
    if candidate is not None:
        window_end = candidate + 2

    r = Fraction(0)
    prev_side = 0
    k = 1
    while k <= _ITERATION_CAP:
        if r == x:
            return k
        side = 1 if x > r else -1
        if k > max(1, window_end) and prev_side == x_side and side == x_side:
            return None
        prev_side = side
        nxt = r_next(b, c, r)
        if nxt is None:
            raise ValueError("iteration became undefined: matrix has a periodic power")
        r = nxt
        k += 1
    raise RuntimeError("iteration cap exceeded; inputs violate the non-periodicity precondition")


def solve_ratio_power(cp: CharPoly, s0: Rat, s1: Rat) -> Optional[int]:
    """Smallest k >= 1 with s_k == 0 in the complex-eigenvalue regime, or None.

    With eigenvalues l1, l2 (conjugates over d = b^2 - 4c < 0), writing
    s_k = a l1^k + conj(a) l2^k, the zero condition is rho^k = tau for
    rho = l1/l2 and tau = -conj(a)/a, both exact over Q(sqrt(d)).  Since rho
    is not a root of unity here, at most one k exists; it is read off from
    the rational cosine equation via `cheb_solve` and confirmed by exact
    powering.
    """
    b, c = cp.b, cp.c
    disc = cp.discriminant
    if disc >= 0:
        raise ValueError("requires complex eigenvalues (negative discriminant)")
    if s0 == 0:
        raise ValueError("s0 must be nonzero (handled upstream as an immediate witness)")
    rho = eigen_ratio(cp)
    if rho.re in NIVEN_COSINES:
        raise ValueError("eigenvalue ratio is a root of unity; periodic case must be handled by the caller")
    s0, s1 = Fraction(s0), Fraction(s1)
    # a = (s1 - l2 s0)/(l1 - l2) with l1 = (-b - sqrt(d))/2, l2 = (-b + sqrt(d))/2
    a = QuadNum(s0 / 2, -(s1 + b * s0 / 2) / disc, disc)
    a_norm = a.norm()  # positive: d < 0 and a != 0 because s0 != 0
    conj_sq = a.conjugate() * a.conjugate()
    tau = QuadNum(-conj_sq.re / a_norm, -conj_sq.im / a_norm, disc)
    assert tau.norm() == 1
    answer = cheb_solve(rho.re, tau.re)
    if isinstance(answer, Empty):
        return None
    assert isinstance(answer, Finite), "non-integer doubled cosine cannot be periodic"
    for k in answer.solutions:
        if k >= 1 and quad_pow(rho, k) == tau:
            return k
    return None


def decide_pair(n_left: Mat2, v: Mat2, n_right: Mat2) -> PairVerdict:
    """Witness with the minimal exponent, or a certified refusal.

    k = 0 (the bare product N_left * N_right) is an admissible witness.
    """
    problem = pair_problem(n_left, v, n_right)
    recurrence = problem.recurrence
    if recurrence.s0 == 0:
        return _checked_witness(problem, 0)

    periodic = power_similar_identity(v)
    if periodic is not None:
        # V^m = scalar * I makes zeros of s repeat with period m: scan one period.
        hit = recurrence.first_zero(1, periodic.order)
        if hit is not None:
            return _checked_witness(problem, hit)
        return NoExponent(RefusalReason.PERIODIC_SCAN_EXHAUSTED)

    cp = problem.char
    disc = cp.discriminant
    if disc < 0:
        k = solve_ratio_power(cp, recurrence.s0, recurrence.s1)
        reason = RefusalReason.RATIO_EQUATION_UNSATISFIABLE
    elif disc > 0:
        k = solve_r_eq_x(cp, problem.target)
        reason = RefusalReason.ZERO_NEVER_HIT_MONOTONE
    else:
        k = solve_r_eq_x(cp, problem.target)
        reason = RefusalReason.SINGLE_CANDIDATE_FAILED
    if k is None:
        return NoExponent(reason)
    return _checked_witness(problem, k)


def _checked_witness(problem: PairProblem, k: int) -> Witness:
    product = problem.n_left * mat_pow(problem.v, k) * problem.n_right
    assert product.is_zero(), "witness exponents must verify exactly"
    return Witness(k)
