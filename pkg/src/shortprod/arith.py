"""Exact integer primitives.

Everything here works on Python ints, so nothing wraps around no matter how
large the multiplier gets.
"""

from __future__ import annotations

from .errors import DomainError


def floor_div_rem(a: int, m: int) -> tuple[int, int]:
    """Return ``(a // m, a % m)`` for a non-negative modulus ``m``."""
    if m < 1:
        raise DomainError(f"modulus must be at least 1, got {m}")
    return divmod(a, m)


def mod_distance(a: int, b: int, m: int) -> int:
    """Distance between ``a`` and ``b`` on a circle of circumference ``m``."""
    if m < 1:
        raise DomainError(f"modulus must be at least 1, got {m}")
    return min((a - b) % m, (b - a) % m)


def digit_count(x: int, base: int) -> int:
    """Number of base-``base`` digits of ``x``; zero has no digits.

    Uses exact comparisons against powers of the base (no logarithms).
    """
    if base < 2:
        raise DomainError(f"base must be at least 2, got {base}")
    if x < 0:
        raise DomainError("negative integers have no digit count")
    if base == 2:
        return x.bit_length()
    n = 0
    power = 1
    while power <= x:
        power *= base
        n += 1
    return n


def msd(x: int, d: int, base: int) -> int:
    """The ``d`` most significant base-``base`` digits of ``x``, as an integer."""
    if d < 1:
        raise DomainError(f"need at least one digit, got {d}")
    n = digit_count(x, base)
    if n < d:
        raise DomainError(f"{x} has {n} digits in base {base}, fewer than {d}")
    return x // base ** (n - d)


def exactness_condition(w: int, z: int, m: int) -> bool:
    """True when ``(w*z) // m`` is unaffected by any tail added to ``z``.

    The criterion is ``(w*z) % m < m - w + 1``; for ``w > m`` the right-hand
    side is non-positive and the answer is False.
    """
    if m < 1 or w < 1 or z < 1:
        raise DomainError("exactness_condition needs w, z, m >= 1")
    return (w * z) % m < m - w + 1
