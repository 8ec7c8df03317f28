"""Independent brute-force oracle: bounded product search and fuzz harness.

`search` enumerates products breadth-first and reports a shortest zero
product.  States are deduplicated by their projective canonical form (a
primitive integer matrix with positive leading entry): whether a product
can ever reach zero depends only on that class, and scaling every factor
to its class representative keeps integer sizes bounded while preserving
zero-detection exactly.

`fuzz_compare` cross-validates `decide` against `search` on seeded random
instances and reports any disagreement.  It is the measuring stick for the
decision engine, never the authority for immortality.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .decider import Immortal, Instance, Mortal, Unknown, Word, decide, verify_witness
from .linalg import Mat2, Vec2, outer

IntMat = tuple[int, int, int, int]

_ZERO: IntMat = (0, 0, 0, 0)


def _to_int_mat(m: Mat2) -> IntMat:
    entries = m.entries()
    den_lcm = 1
    for e in entries:
        den_lcm = den_lcm * e.denominator // gcd(den_lcm, e.denominator)
    return tuple(e.numerator * (den_lcm // e.denominator) for e in entries)  # type: ignore[return-value]


def _mul(a: IntMat, b: IntMat) -> IntMat:
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def _canon(a: IntMat) -> IntMat:
    g = gcd(gcd(abs(a[0]), abs(a[1])), gcd(abs(a[2]), abs(a[3])))
    for value in a:
        if value != 0:
            if value < 0:
                g = -g
            break
    return (a[0] // g, a[1] // g, a[2] // g, a[3] // g)


def search(instance: Instance, max_len: int) -> Optional[Word]:
    """Shortest word of length <= max_len whose product is zero, or None.

    Deterministic: ties between equal-length words break lexicographically.
    Scaling each factor to its projective representative is sound because a
    product is zero exactly when the product of class representatives is.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    mats = [_to_int_mat(m) for m in instance.matrices]
    seen: set[IntMat] = set()
    queue: deque[tuple[IntMat, Word]] = deque()
    for i, m in enumerate(mats):
        if m == _ZERO:
            return (i,)
        c = _canon(m)
        if c not in seen:
            seen.add(c)
            queue.append((c, (i,)))
    while queue:
        state, word = queue.popleft()
        if len(word) >= max_len:
            break  # queue is in nondecreasing length order
        for j, m in enumerate(mats):
            product = _mul(state, m)
            if product == _ZERO:
                return word + (j,)
            c = _canon(product)
            if c not in seen:
                seen.add(c)
                queue.append((c, word + (j,)))
    return None


@dataclass(frozen=True)
class EntryRange:
    """Sampling ranges: numerators in [-max_numerator, max_numerator],
    denominators in [1, max_denominator]."""

    max_numerator: int = 3
    max_denominator: int = 3


def _random_rat(rng: random.Random, entry_range: EntryRange) -> Fraction:
    return Fraction(
        rng.randint(-entry_range.max_numerator, entry_range.max_numerator),
        rng.randint(1, entry_range.max_denominator),
    )


def random_instance(
    rng: random.Random,
    entry_range: EntryRange = EntryRange(),
    max_singulars: int = 4,
    invertible_probability: float = 0.5,
) -> Instance:
    """Random instance with 1..max_singulars singular members (rank <= 1 by
    outer-product construction) and at most one invertible member."""
    mats = []
    for _ in range(rng.randint(1, max_singulars)):
        u = Vec2(_random_rat(rng, entry_range), _random_rat(rng, entry_range))
        v = Vec2(_random_rat(rng, entry_range), _random_rat(rng, entry_range))
        mats.append(outer(u, v))
    if rng.random() < invertible_probability:
        while True:
            m = Mat2(
                _random_rat(rng, entry_range),
                _random_rat(rng, entry_range),
                _random_rat(rng, entry_range),
                _random_rat(rng, entry_range),
            )
            if m.det() != 0:
                break
        mats.insert(rng.randint(0, len(mats)), m)
    return Instance(tuple(mats))


@dataclass
class FuzzReport:
    """Outcome counters of one fuzz run; reproducible from (count, seed)."""

    count: int
    seed: int
    bound: int
    mortal: int = 0
    immortal: int = 0
    unknown: int = 0
    witness_failures: int = 0  # Mortal verdict whose witness does not verify
    immortal_contradicted: int = 0  # Immortal verdict but the search found a zero product
    search_misses: int = 0  # witness within the bound yet missed by the search
    mortal_unconfirmed: int = 0  # witness beyond the bound; search silence is fine
    failing_seeds: list[int] = field(default_factory=list)
    decide_seconds: float = 0.0
    search_seconds: float = 0.0

    @property
    def contradictions(self) -> int:
        return self.witness_failures + self.immortal_contradicted + self.search_misses

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "bound": self.bound,
            "mortal": self.mortal,
            "immortal": self.immortal,
            "unknown": self.unknown,
            "witness_failures": self.witness_failures,
            "immortal_contradicted": self.immortal_contradicted,
            "search_misses": self.search_misses,
            "mortal_unconfirmed": self.mortal_unconfirmed,
            "contradictions": self.contradictions,
            "failing_seeds": list(self.failing_seeds),
            "timings": {
                "decide_seconds": round(self.decide_seconds, 3),
                "search_seconds": round(self.search_seconds, 3),
            },
        }


def _check_one(
    child_seed: int,
    bound: int,
    entry_range: EntryRange,
    max_singulars: int,
    invertible_probability: float,
) -> tuple:
    rng = random.Random(child_seed)
    instance = random_instance(rng, entry_range, max_singulars, invertible_probability)
    t0 = time.perf_counter()
    verdict = decide(instance, oracle_bound=bound)
    t1 = time.perf_counter()
    word = search(instance, bound)
    t2 = time.perf_counter()

    kind = "unknown"
    witness_failure = contradiction = miss = unconfirmed = False
    if isinstance(verdict, Mortal):
        kind = "mortal"
        if not verify_witness(instance, verdict.witness):
            witness_failure = True
        elif word is None:
            if len(verdict.witness) <= bound:
                miss = True
            else:
                unconfirmed = True
    elif isinstance(verdict, Immortal):
        kind = "immortal"
        contradiction = word is not None
    else:
        assert isinstance(verdict, Unknown)
    return (kind, witness_failure, contradiction, miss, unconfirmed, t1 - t0, t2 - t1)


def fuzz_compare(
    count: int,
    seed: int,
    bound: int = 8,
    entry_range: EntryRange = EntryRange(),
    max_singulars: int = 4,
    invertible_probability: float = 0.5,
    workers: Optional[int] = None,
) -> FuzzReport:
    """Cross-validate `decide` against `search` on `count` seeded instances.

    Instances are derived from per-instance child seeds drawn once from
    `seed`, so reports are identical whether run serially or with a worker
    pool (results merge in instance order).
    """
    if count < 1:
        raise ValueError("count must be positive")
    base = random.Random(seed)
    child_seeds = [base.getrandbits(63) for _ in range(count)]
    report = FuzzReport(count=count, seed=seed, bound=bound)

    if workers is not None and workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    _check_one,
                    child_seeds,
                    [bound] * count,
                    [entry_range] * count,
                    [max_singulars] * count,
                    [invertible_probability] * count,
                    chunksize=max(1, count // (workers * 8)),
                )
            )
    else:
        results = [
            _check_one(cs, bound, entry_range, max_singulars, invertible_probability)
            for cs in child_seeds
        ]

    for child_seed, (kind, witness_failure, contradiction, miss, unconfirmed, t_decide, t_search) in zip(
        child_seeds, results
    ):
        if kind == "mortal":
            report.mortal += 1
        elif kind == "immortal":
            report.immortal += 1
        else:
            report.unknown += 1
        if witness_failure:
            report.witness_failures += 1
        if contradiction:
            report.immortal_contradicted += 1
        if miss:
            report.search_misses += 1
        if unconfirmed:
            report.mortal_unconfirmed += 1
        if witness_failure or contradiction or miss:
            if len(report.failing_seeds) < 20:
                report.failing_seeds.append(child_seed)
        report.decide_seconds += t_decide
        report.search_seconds += t_search
    return report
