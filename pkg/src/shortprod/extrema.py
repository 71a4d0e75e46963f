"""Running extrema of ``w -> (offset + w*z) % m`` in logarithmic time.

Running extrema of ``(w*z) % m`` come in equispaced runs: if the last
minimum sits at ``alpha`` and the last maximum at ``beta``, the next extremum
is at ``alpha + beta``.  :func:`gaps` walks those runs and records the step
used by each one.  Every distance between consecutive extrema, for any
offset, is one of these steps, which is what :func:`find_extrema_with_offset`
relies on.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError


class ExtremumRun(NamedTuple):
    """Equispaced extrema at ``last_location - i*gap`` for ``i = 0..extra_count``.

    ``gap == 0`` marks the sentinel that opens each list (the starting point).
    """

    last_location: int
    extra_count: int
    gap: int

    def locations(self) -> list[int]:
        if self.gap == 0:
            return [self.last_location]
        first = self.last_location - self.extra_count * self.gap
        return list(range(first, self.last_location + 1, self.gap))


def _check_modulus(z: int, m: int) -> None:
    if m < 2:
        raise DomainError(f"modulus must be at least 2, got {m}")
    if z < 0:
        raise DomainError("multiplier must be non-negative")
    if z % m == 0:
        raise DomainError("multiplier is a multiple of the modulus")


def gaps(z: int, m: int) -> list[int]:
    """Steps between the running extrema of ``(w*z) % m`` for ``w = 1, 2, ...``.

    The returned list is strictly increasing, starts at 1 and has
    ``O(log m)`` entries.  ``z`` must not be a multiple of ``m``.
    """
    _check_modulus(z, m)
    z %= m
    w = 1
    steps = []
    a = b = z  # current minimum / maximum values
    alpha = beta = 1  # their locations
    while True:
        v = (a + b) % m
        if v < a:
            # run of minima, each one m - b lower, spaced by beta
            steps.append(w)
            if a % (m - b) == 0:
                # the run ends on zero: the sequence starts repeating
                break
            t = a // (m - b)
            w = w + alpha + (t - 1) * beta
            alpha = w
            a = (a + t * b) % m
        else:
            # run of maxima, each one a higher, spaced by alpha
            t = (m - b - 1) // a
            steps.append(w)
            w = w + beta + (t - 1) * alpha
            beta = w
            b = (b + t * a) % m
    return steps


def find_extrema_with_offset(
    z: int, m: int, offset: int, w_max: int, steps: list[int] | None = None
) -> tuple[list[ExtremumRun], list[ExtremumRun]]:
    """Runs of running minima and maxima of ``(offset + w*z) % m``, ``w = 0..w_max``.

    ``w = 0`` opens both lists as the sentinel ``(0, 0, 0)``.  Candidate
    steps come from :func:`gaps` (pass ``steps`` to reuse a precomputed
    sequence) and are tried in increasing order; once a step can neither
    raise the maximum nor lower the minimum it is never needed again.
    """
    _check_modulus(z, m)
    if w_max < 0:
        raise DomainError(f"w_max must be non-negative, got {w_max}")
    if steps is None:
        steps = gaps(z, m)
    minima = [ExtremumRun(0, 0, 0)]
    maxima = [ExtremumRun(0, 0, 0)]
    lo = hi = offset % m
    w = 0
    i = 0
    while True:
        step = steps[i]
        if w + step > w_max:
            break
        v = (offset + (w + step) * z) % m
        if v < lo:
            w += step
            times = v // (m - (step * z) % m)
            times = min(times, (w_max - w) // step)
            w += step * times
            lo = (offset + w * z) % m
            minima.append(ExtremumRun(w, times, step))
        elif v > hi:
            w += step
            times = (m - 1 - v) // ((step * z) % m)
            times = min(times, (w_max - w) // step)
            w += step * times
            hi = (offset + w * z) % m
            maxima.append(ExtremumRun(w, times, step))
        else:
            i += 1
            if i == len(steps):
                break
    return minima, maxima


def _shift(runs: list[ExtremumRun], by: int) -> list[ExtremumRun]:
    return [ExtremumRun(r.last_location + by, r.extra_count, r.gap) for r in runs]


def find_min_max(
    z: int, m: int, start: int, stop: int, steps: list[int] | None = None
) -> tuple[list[ExtremumRun], list[ExtremumRun]]:
    """Runs of running extrema of ``(w*z) % m`` for ``w = start..stop`` inclusive.

    Locations are absolute; both lists open with ``(start, 0, 0)``.
    """
    if start < 1 or stop < start:
        raise DomainError(f"need 1 <= start <= stop, got {start}, {stop}")
    minima, maxima = find_extrema_with_offset(z, m, start * z, stop - start, steps)
    return _shift(minima, start), _shift(maxima, start)


def decode(runs: list[ExtremumRun]) -> list[int]:
    """Flatten runs into the sorted list of extremum locations."""
    out = []
    for run in runs:
        out.extend(run.locations())
    return out
