"""Layer sizes of the layered disc: exact recurrence and Binet-style closed form."""

from __future__ import annotations

import mpmath

from ..errors import DegreeTooSmall, PrecisionLoss

MAX_DPS = 20000
_GUARD = 10


def layer_counts_recurrence(d: int, k: int) -> list[int]:
    """``[n_0, ..., n_k]`` with ``n_j`` the number of vertices at distance ``j``.

    ``n_0 = 1``, ``n_1 = d``, ``n_2 = d(d-4)`` and ``n_j = (d-4) n_{j-1} - n_{j-2}``
    afterwards.  For ``d = 6`` this reduces to ``n_j = 6j``.  Python ints, so
    no overflow at large ``k``.
    """
    if d < 6:
        raise DegreeTooSmall(f"layer counts need d >= 6, got {d}")
    if k < 0:
        raise ValueError("k must be non-negative")
    counts = [1, d, d * (d - 4)]
    while len(counts) <= k:
        counts.append((d - 4) * counts[-1] - counts[-2])
    return counts[: k + 1]


def total_vertices(d: int, k: int) -> int:
    return sum(layer_counts_recurrence(d, k))


def closed_form_value(d: int, k: int, dps: int | None = None) -> int:
    """``n_k`` from the closed form, rounded to the nearest integer.

    The shifted sequence ``y_0 = 0, y_1 = d`` solves the same recurrence, so
    ``y_k = c (l+^k - l-^k)`` with ``c = d / sqrt((d-6)(d-2))`` and ``l+-`` the
    roots of ``x^2 - (d-4) x + 1``.  Working precision is raised until the
    value is within 1/4 of an integer with at least ``_GUARD`` digits
    below the unit place; :class:`PrecisionLoss` if that never
    happens below ``MAX_DPS`` digits.
    """
    if d < 7:
        raise DegreeTooSmall(f"closed form needs distinct roots (d >= 7), got {d}")
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 1
    if dps is None:
        # digits of the result plus a guard band
        dps = int(k * mpmath.log10(d)) + 20
    while dps <= MAX_DPS:
        with mpmath.workdps(dps):
            disc = mpmath.sqrt((d - 6) * (d - 2))
            lp = (d - 4 + disc) / 2
            lm = (d - 4 - disc) / 2
            y = d / disc * (lp**k - lm**k)
            nearest = mpmath.nint(y)
            err = abs(y - nearest)
            # a value with no digits left below the unit place always looks integral
            digits = int(mpmath.log10(abs(y) + 1)) + 1
            if digits + _GUARD <= dps and err < mpmath.mpf("0.25") and err * 10**8 < 1:
                return int(nearest)
        dps *= 2
    raise PrecisionLoss(f"closed form for d={d}, k={k} ambiguous at {MAX_DPS} digits")


def layer_counts_closed_form(d: int, k: int) -> list[int]:
    """``[n_0, ..., n_k]`` via :func:`closed_form_value` (``n_0 = 1`` by convention)."""
    return [closed_form_value(d, j) for j in range(k + 1)]
