"""Exact span membership over F_p, or over Q when p = 0."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def check_char(p: int) -> int:
    if p != 0 and not is_prime(p):
        raise ValueError(f"field characteristic must be 0 or a prime, got {p}")
    return p


def _field(p: int):
    if p == 0:
        return Fraction, lambda x: 1 / x

    def conv(x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    return conv, lambda x: pow(int(x), -1, p)


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    """Row rank over F_p (p prime) or Q (p = 0), by Gaussian elimination."""
    check_char(p)
    conv, inv = _field(p)
    work = [[conv(x) for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, len(work)) if work[k][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        scale = inv(work[r][col])
        work[r] = [conv(x * scale) for x in work[r]]
        for k in range(len(work)):
            if k != r and work[k][col] != 0:
                f = work[k][col]
                work[k] = [conv(a - f * b) for a, b in zip(work[k], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def in_span(target: Sequence[int], rows: Sequence[Sequence[int]], p: int) -> bool:
    """Whether ``target`` lies in the span of ``rows``."""
    conv, _ = _field(check_char(p))
    if not any(conv(x) for x in target):
        return True
    if not rows:
        return False
    return rank(list(rows) + [list(target)], p) == rank(rows, p)
