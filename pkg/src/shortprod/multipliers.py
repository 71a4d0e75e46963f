"""Truncated multipliers: digit prefixes of pi and powers of five."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import digit_count, msd
from .errors import DomainError


@dataclass(frozen=True)
class ConstantDigits:
    name: str
    base: int
    digits: str

    def __post_init__(self) -> None:
        if not self.digits or self.digits[0] == "0":
            raise ValueError("digit string must be non-empty with a nonzero lead")

    def prefix(self, n: int) -> int:
        if not 1 <= n <= len(self.digits):
            raise DomainError(
                f"{self.name} has {len(self.digits)} embedded digits, asked for {n}"
            )
        return int(self.digits[:n], self.base)


PI = ConstantDigits("pi", 10, "31415926535897932384")

CONSTANTS = {PI.name: PI}


def pi_multiplier(n: int) -> int:
    """The first ``n`` decimal digits of pi as an integer (1 <= n <= 20)."""
    return PI.prefix(n)


def truncate_to_digits(x: int, n: int, base: int) -> int:
    """Keep the ``n`` leading digits of ``x``; shorter numbers come back unchanged."""
    if x < 1 or n < 1:
        raise DomainError("truncate_to_digits needs x, n >= 1")
    return msd(x, min(n, digit_count(x, base)), base)


def truncate_rational(p: int, q: int, n: int, base: int) -> tuple[int, int]:
    """Leading ``n`` digits of ``p/q`` and their scale.

    Returns ``(mantissa, e)`` with ``mantissa = floor(p/q * base**e)`` and
    ``base**(n-1) <= mantissa < base**n``.  ``e`` may be negative.
    """
    if p < 1 or q < 1 or n < 1 or base < 2:
        raise DomainError("truncate_rational needs p, q, n >= 1 and base >= 2")
    # first guess from digit counts, then nudge by at most a couple of steps
    e = n - (digit_count(p, base) - digit_count(q, base))
    while True:
        if e >= 0:
            mantissa = p * base**e // q
        else:
            mantissa = p // (q * base**-e)
        if mantissa < base ** (n - 1):
            e += 1
        elif mantissa >= base**n:
            e -= 1
        else:
            return mantissa, e


def pow5_multiplier(q: int, bits: int) -> tuple[int, int]:
    """``bits``-bit truncation of ``5**q`` as ``(mantissa, binary exponent)``."""
    if q >= 0:
        return truncate_rational(5**q, 1, bits, 2)
    return truncate_rational(1, 5**-q, bits, 2)
