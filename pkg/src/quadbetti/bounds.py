"""Exact bound formulas and Betti-sum recurrences for quadric intersections.

Everything in this module is pure integer / rational arithmetic.  The
recurrences return plain Python ints (arbitrary precision; binomials blow
past 64 bits well inside the tested ranges) and the halved binomial sums
are returned as `fractions.Fraction`, never silently floored.  Use
`bound_betti_floor` when an integer ceiling on a Betti number is wanted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

__all__ = [
    "q_quad",
    "b_quad",
    "c_ci",
    "b_ci",
    "bound_betti",
    "bound_betti_floor",
    "AggregateBounds",
    "bound_aggregate",
]


def _check_indices(j: int, k: int) -> None:
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if j > k:
        raise ValueError(f"j must not exceed k, got j={j}, k={k}")


@lru_cache(maxsize=None)
def q_quad(j: int, k: int) -> int:
    """Auxiliary sum for smooth intersections of j quadrics in projective k-space.

    Three-case recurrence: k + 1 when j = 0, 2**j when j = k, and
    2*q(j-1, k-1) - q(j, k-1) in between.  Values may be negative.
    """
    _check_indices(j, k)
    if j == 0:
        return k + 1
    if j == k:
        return 2**j
    return 2 * q_quad(j - 1, k - 1) - q_quad(j, k - 1)


def b_quad(j: int, k: int) -> int:
    """Total mod-2 Betti number of a smooth intersection of j quadrics in P^k."""
    _check_indices(j, k)
    q = q_quad(j, k)
    b = q if (k - j) % 2 == 0 else 2 * (k - j + 1) - q
    assert b >= 0, (j, k, b)
    return b


def _normalized_degrees(degrees: Sequence[int]) -> tuple:
    out = tuple(int(d) for d in degrees)
    for d in out:
        if d < 1:
            raise ValueError(f"degrees must be >= 1, got {d}")
    return out


@lru_cache(maxsize=None)
def _c_ci(j: int, k: int, degrees: tuple) -> int:
    if j == 0:
        return k + 1
    if j == k:
        return math.prod(degrees)
    last = degrees[-1]
    return last * _c_ci(j - 1, k - 1, degrees[:-1]) - (last - 1) * _c_ci(j, k - 1, degrees)


def c_ci(j: int, k: int, degrees: Sequence[int]) -> int:
    """Degree-sequence recurrence underlying complete-intersection Betti totals.

    The last degree recurses out: c(j, k, d) = d_j * c(j-1, k-1, d[:-1])
    - (d_j - 1) * c(j, k-1, d), with c(0, k) = k + 1 and c(k, k) = prod(d).
    """
    d = _normalized_degrees(degrees)
    _check_indices(j, k)
    if len(d) != j:
        raise ValueError(f"expected {j} degrees, got {len(d)}")
    return _c_ci(j, k, d)


def b_ci(j: int, k: int, degrees: Sequence[int]) -> int:
    """Total mod-2 Betti number of a smooth complete intersection in P^k.

    The intersection has codimension j and is cut out by hypersurfaces of
    the given degrees; with all degrees equal to 2 this coincides with
    `b_quad(j, k)`.
    """
    c = c_ci(j, k, degrees)
    b = c if (k - j) % 2 == 0 else 2 * (k - j + 1) - c
    assert b >= 0, (j, k, degrees, b)
    return b


def bound_betti(s: int, k: int, i: int) -> Fraction:
    """Exact upper bound on b_i of a set in R^k cut out by s quadratic inequalities.

    Returns (1/2) * sum_{j=0}^{min(s, k-i)} C(s, j) * C(k+1, j) * 2**j as an
    exact rational; the half is kept unrounded.
    """
    if not 1 <= s <= k:
        raise ValueError(f"need 1 <= s <= k, got s={s}, k={k}")
    if not 0 <= i <= k - 1:
        raise ValueError(f"need 0 <= i <= k-1, got i={i}, k={k}")
    total = sum(
        math.comb(s, j) * math.comb(k + 1, j) * 2**j for j in range(min(s, k - i) + 1)
    )
    return Fraction(total, 2)


def bound_betti_floor(s: int, k: int, i: int) -> int:
    """Floor of `bound_betti`; Betti numbers are integers so this loses nothing."""
    return math.floor(bound_betti(s, k, i))


@dataclass(frozen=True)
class AggregateBounds:
    """Aggregate bound bundle for s quadratic inequalities in R^k.

    `simple` is (1/2) * 3**s * C(k+1, s), defined only for 2 <= s <= k/2;
    `exp_form` is the floating-point comparison value (1/2) * (3e(k+1)/s)**s
    and is NOT exact; `total` is the exact bound (1/2) * k * sum_{j<=s}
    C(s, j) * C(k+1, j) * 2**j on the sum of all Betti numbers.
    """

    simple: Optional[Fraction]
    exp_form: Optional[float]
    total: Fraction


def bound_aggregate(s: int, k: int) -> AggregateBounds:
    """Aggregate bounds for s quadratic inequalities in R^k.

    Raises outside 1 <= s <= k.  The `simple` / `exp_form` fields are gated
    independently on 2 <= s <= k/2 and are None when that fails.
    """
    if not 1 <= s <= k:
        raise ValueError(f"need 1 <= s <= k, got s={s}, k={k}")
    total = Fraction(
        k * sum(math.comb(s, j) * math.comb(k + 1, j) * 2**j for j in range(s + 1)), 2
    )
    simple: Optional[Fraction] = None
    exp_form: Optional[float] = None
    if 2 <= s and 2 * s <= k:
        simple = Fraction(3**s * math.comb(k + 1, s), 2)
        exp_form = 0.5 * (3.0 * math.e * (k + 1) / s) ** s
    return AggregateBounds(simple=simple, exp_form=exp_form, total=total)
