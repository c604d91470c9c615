"""Fundamental solutions of ``X^2 - N Y^2 = 1`` by continued fractions."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import PerfectSquare


@dataclass(frozen=True, slots=True)
class PellSolution:
    X: int
    Y: int
    N: int


def _check(n: int) -> int:
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    a0 = isqrt(n)
    if a0 * a0 == n:
        raise PerfectSquare(f"{n} is a perfect square")
    return a0


def sqrt_continued_fraction(n: int) -> tuple[int, list[int]]:
    """Return ``(a0, period)`` with ``sqrt(n) = [a0; period, period, ...]``.

    Uses the standard recurrence on ``(m, d, a)``; the period ends at the
    first partial quotient equal to ``2*a0``.
    """
    a0 = _check(n)
    period = []
    m, d, a = 0, 1, a0
    while a != 2 * a0:
        m = d * a - m
        d = (n - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return a0, period


def fundamental_solution(n: int) -> PellSolution:
    """Minimal positive solution of ``X^2 - n Y^2 = 1``.

    The convergent just before the end of the period solves the equation
    when the period length is even; for odd length it solves the negative
    equation instead, so the period is walked twice.
    """
    a0, period = sqrt_continued_fraction(n)
    quotients = period[:-1] if len(period) % 2 == 0 else period + period[:-1]
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    for a in quotients:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    assert p * p - n * q * q == 1, (n, p, q)
    return PellSolution(p, q, n)
