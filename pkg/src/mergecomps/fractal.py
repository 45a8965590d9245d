"""The Takagi (blancmange) function family and its comparison-count bridges.

``takagi_dyadic`` evaluates the Takagi function exactly at any dyadic
rational: at ``p/2**e`` all series terms beyond the first e vanish, so the
infinite sum collapses to a finite one.  ``zigzag_sum`` is the scaled
finite relative that measures how far the best/worst comparison-count gap
sits from its linear bound, and ``takagi_rescaled`` is the copy of the
Takagi function that agrees with it at integers.

At non-dyadic rationals the function has no finite exact form;
``takagi_approx`` returns a dyadic enclosure with a certified error bound
instead.  The remaining operations convert between Takagi values at
``n/2**k`` and the minimum comparison count, in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .counts import best_comps
from .dyadic import Dyadic, floor_lg, zigzag, zigzag_fraction


@dataclass(frozen=True)
class ApproxValue:
    """A dyadic approximation with a guarantee |true - value| <= error_bound."""

    value: Dyadic
    error_bound: Dyadic


def _require_at_least_one(x: Dyadic) -> None:
    if x < 1:
        raise ValueError(f"argument must be >= 1, got {x}")


def zigzag_sum(x: Dyadic) -> Dyadic:
    """Finite sum of 2**k * zigzag(x / 2**k) for k in [1, floor(lg x)].

    Defined for x >= 1.  At integers n it equals n - 1 - (2*best - worst)
    and is bounded by (n-1)/2.
    """
    _require_at_least_one(x)
    total = Dyadic(0)
    for k in range(1, floor_lg(x.floor()) + 1):
        total += zigzag(x.mul_pow2(-k)).mul_pow2(k)
    return total


def takagi_partial(k: int, x: Dyadic) -> Dyadic:
    """Partial sum of the Takagi series: zigzag(2**i * x) / 2**i for i < k."""
    if k < 0:
        raise ValueError(f"term count must be >= 0, got {k}")
    total = Dyadic(0)
    for i in range(k):
        total += zigzag(x.mul_pow2(i)).mul_pow2(-i)
    return total


def takagi_dyadic(x: Dyadic) -> Dyadic:
    """Exact Takagi-function value at a dyadic rational.

    For canonical x = p/2**e every series term with index >= e vanishes,
    so this equals the e-term partial sum at the fractional part of x.
    """
    return takagi_partial(x.exp, x.frac())


def takagi_approx(p: int, q: int, terms: int) -> ApproxValue:
    """Truncated Takagi series at the rational p/q, as a dyadic enclosure.

    Sums the first ``terms`` series terms in exact rational arithmetic,
    then rounds to a dyadic with two guard bits.  The tail of the series
    is at most (2/3) * 2**-terms and the rounding error at most
    2**-(terms+3), so the returned bound 2**-terms is safe.
    """
    if q < 1:
        raise ValueError(f"denominator must be >= 1, got {q}")
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    x = Fraction(p, q)
    total = Fraction(0)
    for i in range(terms):
        total += zigzag_fraction(x) / (1 << i)
        x *= 2
    guard = terms + 2
    scaled = total * (1 << guard)
    nearest = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    return ApproxValue(value=Dyadic(nearest, guard), error_bound=Dyadic(1, terms))


def takagi_from_best(n: int, k: int) -> Dyadic:
    """Takagi value at n/2**k from the minimum comparison count alone.

    Equals (n*k - 2*best_comps(n)) / 2**k.  Valid only for n <= 2**k; for
    larger n the identity genuinely fails and the call is rejected.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 0 or n > (1 << k):
        raise ValueError(f"requires n <= 2**k, got n={n}, k={k}")
    return Dyadic(n * k - 2 * best_comps(n), k)


def best_from_takagi(n: int, k: int) -> int:
    """Minimum comparison count recovered from a Takagi value.

    Evaluates n*k/2 - 2**(k-1) * takagi(n/2**k) exactly; requires n <= 2**k.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 0 or n > (1 << k):
        raise ValueError(f"requires n <= 2**k, got n={n}, k={k}")
    value = Dyadic(n * k, 1) - takagi_dyadic(Dyadic(n, k)).mul_pow2(k - 1)
    return value.as_integer()


def takagi_at_mantissa(n: int) -> Dyadic:
    """Takagi value at n scaled into [1, 2), i.e. at n / 2**floor(lg n).

    Computed as (n*(floor(lg n)+2) - 2*best_comps(n)) / 2**floor(lg n) - 2,
    which also equals zigzag_sum(n) / 2**floor(lg n).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lg = floor_lg(n)
    return Dyadic(n * (lg + 2) - 2 * best_comps(n), lg) - 2


def takagi_rescaled(x: Dyadic) -> Dyadic:
    """2**floor(lg x) * takagi(x / 2**floor(lg x)), for x >= 1.

    The rescaled Takagi function; at every integer n it coincides with
    zigzag_sum(n).
    """
    _require_at_least_one(x)
    lg = floor_lg(x.floor())
    return takagi_dyadic(x.mul_pow2(-lg)).mul_pow2(lg)
