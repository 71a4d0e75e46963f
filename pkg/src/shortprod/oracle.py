"""Brute-force references for the fast routines.

These are deliberately naive: linear scans and direct divisions, built only
on :mod:`shortprod.arith`.  They exist to check the fast paths on small
inputs and to audit individual boundaries on large ones.
"""

from __future__ import annotations

from .arith import digit_count
from .errors import DomainError, InconclusiveScan

EXTREMA_SCAN_LIMIT = 10**7
RANGE_SCAN_LIMIT = 2 * 10**7


def oracle_exact(w: int, z: int, d: int, base: int) -> bool:
    """Do the leading ``d`` digits of ``w*(z + eps)`` agree for all ``eps`` in [0, 1)?

    ``w*(z + eps)`` ranges over ``[w*z, w*z + w - 1]`` once floored, so it is
    enough to compare the two ends after dropping the trailing digits.
    """
    if w < 1 or z < 1 or d < 1 or base < 2:
        raise DomainError("oracle_exact needs w, z, d >= 1 and base >= 2")
    p = w * z
    n = digit_count(p, base)
    if n < d:
        raise DomainError(f"w*z = {p} has fewer than {d} digits in base {base}")
    m = base ** (n - d)
    return p // m == (p + w - 1) // m


def oracle_extrema(
    z: int, m: int, offset: int, w_max: int
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Strict running minima and maxima of ``(offset + w*z) % m`` by linear scan.

    Returns ``(min_points, max_points)`` as ``(location, value)`` pairs;
    ``w = 0`` is in both lists.
    """
    if m < 2:
        raise DomainError(f"modulus must be at least 2, got {m}")
    if w_max > EXTREMA_SCAN_LIMIT:
        raise DomainError(f"w_max {w_max} exceeds scan limit {EXTREMA_SCAN_LIMIT}")
    v = offset % m
    mins = [(0, v)]
    maxs = [(0, v)]
    lo = hi = v
    for w in range(1, w_max + 1):
        v = (offset + w * z) % m
        if v < lo:
            lo = v
            mins.append((w, v))
        if v > hi:
            hi = v
            maxs.append((w, v))
    return mins, maxs


def oracle_range(z: int, d: int, base: int, w_cap: int) -> tuple[int, int] | None:
    """Scan ``w`` upward from the smallest one with a ``d``-digit product.

    Returns ``(lb, ub)`` where ``ub`` is the first failing ``w``, or None if
    ``lb`` itself fails.  Raises :class:`InconclusiveScan` when nothing fails
    up to ``w_cap``.
    """
    if z < 1 or d < 1 or base < 2:
        raise DomainError("oracle_range needs z, d >= 1 and base >= 2")
    if w_cap > RANGE_SCAN_LIMIT:
        raise DomainError(f"w_cap {w_cap} exceeds scan limit {RANGE_SCAN_LIMIT}")
    lb = (base ** (d - 1) + z - 1) // z
    w = lb
    p = w * z
    # m = base**k where p has d + k digits; top = base**(d + k)
    m = base ** (digit_count(p, base) - d)
    top = m * base**d
    while w <= w_cap:
        while p >= top:
            m *= base
            top *= base
        if p // m != (p + w - 1) // m:
            return None if w == lb else (lb, w)
        w += 1
        p += z
    raise InconclusiveScan(f"no failure up to w = {w_cap}")
