"""Range of integers ``w`` whose short product with a truncated multiplier is exact.

The products ``w*z`` are split into digit bands: band ``k`` holds the ``w``
for which ``w*z`` has ``digits + k`` digits, so its leading ``digits`` digits
are ``(w*z) // base**k``.  Inside a band the truncated product is exact iff
``(w*z) % base**k < base**k - w + 1``.  The first failure in a band is always
at a (weak) running maximum of the remainder, so only maxima are inspected.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .arith import digit_count
from .errors import DomainError, SearchCapExceeded
from .extrema import find_min_max


class RangeQuery(NamedTuple):
    z: int
    digits: int
    base: int = 10

    def validate(self) -> None:
        if self.z < 1:
            raise DomainError(f"multiplier must be at least 1, got {self.z}")
        if self.digits < 1:
            raise DomainError(f"digits must be at least 1, got {self.digits}")
        if self.base < 2:
            raise DomainError(f"base must be at least 2, got {self.base}")


class DigitBand(NamedTuple):
    k: int
    modulus: int
    A: int
    B: int

    @property
    def empty(self) -> bool:
        return self.B < self.A


class ValidityRange(NamedTuple):
    """Half-open interval ``[lb, ub)``."""

    lb: int
    ub: int

    def __str__(self) -> str:
        return f"[{self.lb}, {self.ub})"


def lower_bound(q: RangeQuery) -> int:
    """Smallest ``w`` whose product with ``z`` has at least ``digits`` digits."""
    q.validate()
    return (q.base ** (q.digits - 1) + q.z - 1) // q.z


def band(q: RangeQuery, k: int) -> DigitBand:
    """The ``w`` with ``base**(digits+k-1) <= w*z <= base**(digits+k) - 1``."""
    q.validate()
    if k < 0:
        raise DomainError(f"band index must be non-negative, got {k}")
    top = q.base ** (q.digits + k)
    A = (q.base ** (q.digits + k - 1) + q.z - 1) // q.z
    B = top // q.z
    if B * q.z == top:
        B -= 1
    return DigitBand(k, q.base**k, A, B)


def iteration_cap(q: RangeQuery) -> int:
    return 4 * (digit_count(q.z, q.base) + q.digits) + 64


def first_violation(z: int, bnd: DigitBand) -> int | None:
    """Smallest ``w`` in the band failing the exactness test, or None."""
    m, A, B = bnd.modulus, bnd.A, bnd.B
    if bnd.empty:
        return None
    if z % m == 0:
        # remainder is always zero, so the test reduces to w < m + 1
        w = max(A, m + 1)
        return w if w <= B else None

    _, maxima = find_min_max(z, m, A, B)
    for run in maxima:
        beta = run.last_location
        r = beta * z % m
        if r < m - beta + 1:
            continue
        if run.extra_count == 0:
            return beta
        # along the run the remainder drops by (gap*z) % m per step back while
        # the threshold m - w + 1 rises by gap
        excess = r - (m - beta + 1)
        back = excess // (run.gap + (run.gap * z) % m)
        return beta - min(run.extra_count, back) * run.gap

    # No strict maximum fails.  Past one period the remainders repeat, so the
    # overall maximum recurs every `period` steps and is then a weak running
    # maximum; the threshold keeps shrinking, so it may fail there.
    beta = maxima[-1].last_location
    r = beta * z % m
    period = m // math.gcd(z, m)
    j = max(1, -(-(m + 1 - r - beta) // period))
    w = beta + j * period
    return w if w <= B else None


def find_range(q: RangeQuery) -> ValidityRange | None:
    """Range ``[lb, ub)`` of ``w`` for which the leading ``digits`` digits of
    ``w*z`` do not depend on the hidden tail of ``z``.

    Returns None when the range is empty.  Raises :class:`SearchCapExceeded`
    if no failing ``w`` turns up within :func:`iteration_cap` bands.
    """
    q = RangeQuery(*q)
    q.validate()
    lb = lower_bound(q)
    cap = iteration_cap(q)
    k = 0
    while k <= cap:
        ub = first_violation(q.z, band(q, k))
        if ub is not None:
            if ub <= lb:
                return None
            return ValidityRange(lb, ub)
        k += 1
    raise SearchCapExceeded(
        f"no violation found within {cap} bands for z={q.z}, "
        f"digits={q.digits}, base={q.base}"
    )
