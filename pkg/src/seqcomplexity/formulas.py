"""Closed-form maximum order complexity of Thue-Morse and pattern sequences.

All index arithmetic is integer-only: a ceiling of ``log2(N / c)`` is the
least ``m`` with ``c * 2^m >= N``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .seqgen import pattern_sequence, thue_morse


class BelowTheoremRange(ValueError):
    pass


@dataclass(frozen=True)
class MocFormulaResult:
    value: int
    ell: Optional[int]
    in_theorem_range: bool


def ceil_log2_ratio(n: int, c: int) -> int:
    """Least ``m >= 0`` with ``c * 2^m >= n``."""
    m = 0
    while c << m < n:
        m += 1
    return m


# M(P_2, N) below the theorem threshold: (first N, last N, value)
RUDIN_SHAPIRO_SMALL = ((1, 3, 0), (4, 9, 3), (10, 24, 6))


def tm_moc_formula(n: int) -> MocFormulaResult:
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    if n == 1:
        return MocFormulaResult(0, None, False)
    if n <= 3:
        return MocFormulaResult(1, None, False)
    ell = ceil_log2_ratio(n, 5)
    return MocFormulaResult((1 << ell) + 1, ell, True)


def pattern_threshold(k: int) -> int:
    """Smallest N covered by the closed form for P_k."""
    return (1 << (k + 3)) - 7


def pattern_moc_formula(k: int, n: int) -> MocFormulaResult:
    """``M(P_k, N)`` for ``k >= 2``; Thue-Morse (``k = 1``) has its own formula."""
    if k < 2:
        raise ValueError("k must be >= 2; use tm_moc_formula for k = 1")
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    if n >= pattern_threshold(k):
        ell = ceil_log2_ratio(n, (1 << k) - 1) - 1
        return MocFormulaResult(((1 << (k - 1)) - 1) * (1 << ell) + 1, ell, True)
    if k == 2:
        for lo, hi, value in RUDIN_SHAPIRO_SMALL:
            if lo <= n <= hi:
                return MocFormulaResult(value, None, False)
    raise BelowTheoremRange(
        f"N = {n} is below {pattern_threshold(k)}, no closed form for k = {k}"
    )


def tm_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Sandwich ``N/5 + 1 <= M(T, N) <= 2(N-1)/5 + 1`` for ``N >= 4``."""
    return Fraction(n, 5) + 1, Fraction(2 * (n - 1), 5) + 1


def pattern_bounds(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Inner sandwich for P_k in the theorem range:
    ``r N/2 + 1 <= M <= r (N-1) + 1`` with ``r = (2^(k-1)-1)/(2^k-1)``."""
    r = Fraction((1 << (k - 1)) - 1, (1 << k) - 1)
    return r * n / 2 + 1, r * (n - 1) + 1


def pattern_outer_bounds(n: int) -> tuple[Fraction, Fraction]:
    """``N/6 + 1 <= M`` and ``M < (N+1)/2``; the upper one is strict."""
    return Fraction(n, 6) + 1, Fraction(n + 1, 2)


def tm_shift_check(ell: int) -> bool:
    """``t_i = t_{i + 3*2^(ell-1)}`` for ``i < 2^ell``, and ``t_{2^ell} != t_{5*2^(ell-1)}``."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    half = 1 << (ell - 1)
    t = thue_morse(5 * half + 1).unpacked()
    span = 1 << ell
    same = bool((t[:span] == t[3 * half : 3 * half + span]).all())
    return same and t[span] != t[5 * half]


def pattern_shift_check(k: int, ell: int) -> bool:
    """``p_i = p_{i + 2^(ell+k-1)}`` for ``i < (2^(k-1)-1) 2^ell``, and
    ``p_{(2^(k-1)-1) 2^ell} != p_{(2^k-1) 2^ell}``."""
    if k < 2 or ell < 0:
        raise ValueError("need k >= 2 and ell >= 0")
    span = ((1 << (k - 1)) - 1) << ell
    offset = 1 << (ell + k - 1)
    far = ((1 << k) - 1) << ell
    p = pattern_sequence(k, far + 1).unpacked()
    same = bool((p[:span] == p[offset : offset + span]).all())
    return same and p[span] != p[far]
