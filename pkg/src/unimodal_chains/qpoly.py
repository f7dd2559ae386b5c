"""Exact Gaussian binomial coefficients and rank generating functions.

Coefficient vectors are tuples of Python ints indexed by q-degree, so
everything is arbitrary precision; the Pascal-type recurrence keeps all
intermediates integral (no polynomial division).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable

from .posets import Composition, ResourceGuardError, rank

CoefficientVector = tuple

MAX_GAUSSIAN_DEGREE = 4_000_000  # guard on m*n for gaussian()


@lru_cache(maxsize=None)
def gaussian(m: int, n: int) -> CoefficientVector:
    """Coefficients of the q-binomial [m+n choose m]_q, degree 0..mn.

    Equals the rank generating function of partitions with at most m
    parts bounded by n.  Computed by the recurrence
    [N k] = [N-1 k-1] + q^k [N-1 k] with exact integer arithmetic.
    """
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    if m * n > MAX_GAUSSIAN_DEGREE:
        raise ResourceGuardError(f"gaussian({m},{n}) degree {m*n} over limit")
    if m == 0 or n == 0:
        return (1,)
    out = [0] * (m * n + 1)
    for i, c in enumerate(gaussian(m - 1, n)):
        out[i] += c
    for i, c in enumerate(gaussian(m, n - 1)):
        out[i + m] += c
    return tuple(out)


def rank_generating_function(elements: Iterable[Composition]) -> CoefficientVector:
    """Histogram of rank over a set of compositions; () for the empty set."""
    counts = Counter(rank(c) for c in elements)
    if not counts:
        return ()
    return tuple(counts.get(i, 0) for i in range(max(counts) + 1))


def is_symmetric(v: CoefficientVector) -> bool:
    return tuple(v) == tuple(v)[::-1]


def is_unimodal(v: CoefficientVector) -> bool:
    """True iff no strict descent is ever followed by a strict ascent."""
    descended = False
    for prev, cur in zip(v, v[1:]):
        if cur < prev:
            descended = True
        elif cur > prev and descended:
            return False
    return True


def format_coefficients(v: CoefficientVector) -> str:
    return ",".join(str(c) for c in v)
