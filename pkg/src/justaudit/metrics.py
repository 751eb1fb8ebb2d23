"""Scalar statistics over a vector of utilities.

All functions accept any sequence of finite reals and are pure. Means are
summed exactly and rounded once, so they are order independent, a constant
vector has exactly its constant as mean, and tail means are monotone in q.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from justaudit.errors import (
    EmptyInputError,
    InvalidFractionError,
    NegativeValuesError,
    NonFiniteUtilityError,
    NonPositiveMinimumError,
    ZeroMeanError,
)

# Absorbs representation error in q*n (0.07 * 100 == 7.000000000000001).
_CEIL_SLACK = 1e-9


def _values(v: Sequence[float]) -> list[float]:
    values = [float(x) for x in v]
    if not values:
        raise EmptyInputError("utility vector is empty")
    for x in values:
        if not math.isfinite(x):
            raise NonFiniteUtilityError(f"non-finite utility {x!r}")
    return values


def _exact_mean(values: Sequence[float]) -> float:
    # floats are dyadic rationals: sum exactly over a common power-of-two
    # denominator, then round once in the int / int division
    ratios = [x.as_integer_ratio() for x in values]
    den = max(d for _, d in ratios)
    total = sum(num * (den // d) for num, d in ratios)
    return total / (den * len(values))


def mean(v: Sequence[float]) -> float:
    return _exact_mean(_values(v))


def variance(v: Sequence[float]) -> float:
    """Population variance (divides by n)."""
    values = _values(v)
    mu = _exact_mean(values)
    return math.fsum((x - mu) ** 2 for x in values) / len(values)


def gini(v: Sequence[float]) -> float:
    """Gini coefficient, mean absolute difference form without small-sample correction.

    Computed in O(n log n) from the sorted values using
    ``sum_i sum_j |u_i - u_j| = 2 * sum_k (2k - n - 1) * u_(k)``.

    Raises:
        NegativeValuesError: any value is below zero.
        ZeroMeanError: all values are zero.
    """
    values = _values(v)
    if min(values) < 0:
        raise NegativeValuesError("Gini coefficient is undefined for negative values")
    total = math.fsum(values)
    if total <= 0:
        raise ZeroMeanError("Gini coefficient is undefined for a zero mean")
    n = len(values)
    values.sort()
    weighted = math.fsum((2 * k - n - 1) * x for k, x in enumerate(values, start=1))
    # 2*weighted / (2 n^2 mu) with n*mu == total
    return max(weighted / (n * total), 0.0)


def range_difference(v: Sequence[float]) -> float:
    values = _values(v)
    return max(values) - min(values)


def range_ratio(v: Sequence[float]) -> float:
    values = _values(v)
    lo = min(values)
    if lo <= 0:
        raise NonPositiveMinimumError(f"max/min ratio is undefined for minimum {lo!r}")
    return max(values) / lo


def share_above(v: Sequence[float], t: float) -> float:
    """Fraction of values strictly greater than ``t``."""
    values = _values(v)
    return sum(1 for x in values if x > t) / len(values)


def tail_size(n: int, q: float) -> int:
    """Number of worst-off members, ``ceil(q * n)`` clamped to ``[1, n]``."""
    if not 0 < q <= 1:
        raise InvalidFractionError(f"tail fraction must lie in (0, 1], got {q!r}")
    if n <= 0:
        raise EmptyInputError("tail of an empty vector")
    return min(n, max(1, math.ceil(q * n - _CEIL_SLACK)))


def tail_mean(v: Sequence[float], q: float) -> float:
    """Mean of the ``tail_size(n, q)`` smallest values."""
    values = _values(v)
    k = tail_size(len(values), q)
    values.sort()
    return _exact_mean(values[:k])
