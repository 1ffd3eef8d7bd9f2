"""Truncated power series over F2 and the N-th expansion complexity.

Series and coefficient vectors are Python ints: bit ``i`` is the coefficient
of ``x^i``.  Addition is XOR and truncation mod ``x^N`` is a mask, so every
row operation works on whole machine words.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .bitseq import BitSequence
from .moc import _check_n


@dataclass(frozen=True)
class PowerSeriesF2:
    coeffs: int
    truncation: int

    def __post_init__(self):
        if self.truncation < 1:
            raise ValueError("truncation must be >= 1")
        if self.coeffs < 0 or self.coeffs >> self.truncation:
            raise ValueError("coefficients exceed the truncation")

    @property
    def mask(self) -> int:
        return (1 << self.truncation) - 1

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def __add__(self, other: PowerSeriesF2) -> PowerSeriesF2:
        n = min(self.truncation, other.truncation)
        return PowerSeriesF2((self.coeffs ^ other.coeffs) & ((1 << n) - 1), n)

    def __mul__(self, other: PowerSeriesF2) -> PowerSeriesF2:
        n = min(self.truncation, other.truncation)
        return PowerSeriesF2(clmul(self.coeffs, other.coeffs, n), n)

    def shift(self, i: int) -> PowerSeriesF2:
        """Multiply by ``x^i``."""
        return PowerSeriesF2((self.coeffs << i) & self.mask, self.truncation)

    def terms(self) -> list[int]:
        c, out = self.coeffs, []
        while c:
            low = c & -c
            out.append(low.bit_length() - 1)
            c ^= low
        return out

    def __str__(self) -> str:
        parts = []
        for e in self.terms():
            parts.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(parts) if parts else "0"


def clmul(a: int, b: int, n: int) -> int:
    """Carry-less product of ``a`` and ``b`` modulo ``x^n``."""
    mask = (1 << n) - 1
    a &= mask
    b &= mask
    if a.bit_count() > b.bit_count():
        a, b = b, a
    if a == b:
        return square(a, n)
    acc = 0
    while a:
        low = a & -a
        e = low.bit_length() - 1
        acc ^= b << e
        a ^= low
    return acc & mask


def square(a: int, n: int) -> int:
    """``a(x)^2 = a(x^2)`` in characteristic two, modulo ``x^n``."""
    mask = (1 << n) - 1
    a &= (1 << ((n + 1) // 2)) - 1
    # spread bits through a byte lookup table
    raw = a.to_bytes((a.bit_length() + 7) // 8 or 1, "little")
    out = b"".join(_SPREAD[b] for b in raw)
    return int.from_bytes(out, "little") & mask


_SPREAD = [
    sum(((b >> i) & 1) << (2 * i) for i in range(8)).to_bytes(2, "little") for b in range(256)
]


def series_from(seq: BitSequence, n: int) -> PowerSeriesF2:
    """Generating function ``sum s_i x^i`` truncated mod ``x^n``."""
    _check_n(seq, n)
    return PowerSeriesF2(seq.prefix(n).to_int(), n)


class BivariatePolyF2:
    """Polynomial in F2[x, y] as a set of exponent pairs ``(i, j)`` for ``x^i y^j``."""

    __slots__ = ("monomials",)

    def __init__(self, monomials: Iterable[tuple[int, int]] = ()):
        terms: set[tuple[int, int]] = set()
        for m in monomials:
            i, j = int(m[0]), int(m[1])
            if i < 0 or j < 0:
                raise ValueError("exponents must be non-negative")
            terms ^= {(i, j)}
        self.monomials = frozenset(terms)

    def __add__(self, other: BivariatePolyF2) -> BivariatePolyF2:
        return BivariatePolyF2(self.monomials ^ other.monomials)

    def __mul__(self, other: BivariatePolyF2) -> BivariatePolyF2:
        return BivariatePolyF2(
            (a + c, b + d) for a, b in self.monomials for c, d in other.monomials
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePolyF2) and self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash(self.monomials)

    def __bool__(self) -> bool:
        return bool(self.monomials)

    @property
    def total_degree(self) -> int:
        if not self.monomials:
            return -1
        return max(i + j for i, j in self.monomials)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self.monomials), default=-1)

    def sorted_monomials(self) -> list[tuple[int, int]]:
        return sorted(self.monomials, key=lambda m: (m[0] + m[1], m[0], m[1]))

    def __repr__(self) -> str:
        return f"BivariatePolyF2({self.sorted_monomials()})"

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        parts = []
        for i, j in self.sorted_monomials():
            x = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            y = "" if j == 0 else "y" if j == 1 else f"y^{j}"
            parts.append((x + ("*" if x and y else "") + y) or "1")
        return " + ".join(parts)


def binomial_power(e: int) -> BivariatePolyF2:
    """``(x + 1)^e``: by Lucas, ``C(e, m)`` is odd iff ``m & e == m``."""
    return BivariatePolyF2((m, 0) for m in range(e + 1) if m & e == m)


def monomial(i: int, j: int) -> BivariatePolyF2:
    return BivariatePolyF2([(i, j)])


def witness_tm() -> BivariatePolyF2:
    """Annihilator of the Thue-Morse generating function:
    ``(x+1)^3 y^2 + (x+1)^2 y + x``."""
    return (
        binomial_power(3) * monomial(0, 2)
        + binomial_power(2) * monomial(0, 1)
        + monomial(1, 0)
    )


def witness_pattern(k: int) -> BivariatePolyF2:
    """Annihilator of the P_k generating function:
    ``(x+1)^(2^k+1) y^2 + (x+1)^(2^k) y + x^(2^k-1)``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    q = 1 << k
    return (
        binomial_power(q + 1) * monomial(0, 2)
        + binomial_power(q) * monomial(0, 1)
        + monomial(q - 1, 0)
    )


def _powers(g: int, count: int, n: int) -> list[int]:
    """``[g^0, g^1, ..., g^(count-1)]`` mod ``x^n``."""
    mask = (1 << n) - 1
    out = [1 & mask]
    for j in range(1, count):
        if j % 2 == 0:
            out.append(square(out[j // 2], n))
        else:
            out.append(clmul(out[-1], g, n))
    return out


def eval_bivariate(h: BivariatePolyF2, g: PowerSeriesF2) -> PowerSeriesF2:
    """``h(x, g(x))`` modulo ``x^N`` where ``N`` is the truncation of ``g``."""
    n = g.truncation
    mask = (1 << n) - 1
    powers = _powers(g.coeffs, h.y_degree + 1, n)
    acc = 0
    for i, j in h.monomials:
        if i < n:
            acc ^= (powers[j] << i) & mask
    return PowerSeriesF2(acc, n)


EXCEEDS_DMAX = None


@dataclass(frozen=True)
class ExpansionResult:
    """``value`` is ``None`` when no annihilator of degree <= ``dmax`` exists."""

    value: Optional[int]
    annihilator: Optional[BivariatePolyF2]
    dmax: int

    @property
    def exceeds(self) -> bool:
        return self.value is None


def graded_monomials(d: int) -> list[tuple[int, int]]:
    """Monomials of total degree exactly ``d``, ordered by ``i`` then ``j``."""
    return [(i, d - i) for i in range(d + 1)]


class _XorBasis:
    """Incremental elimination: each inserted vector is reduced against the
    pivots so far; a vector reducing to zero yields a dependency whose
    combination mask names the monomials involved."""

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}

    def insert(self, vec: int, combo: int) -> Optional[int]:
        rows = self.rows
        while vec:
            pivot = vec.bit_length()
            row = rows.get(pivot)
            if row is None:
                rows[pivot] = (vec, combo)
                return None
            vec ^= row[0]
            combo ^= row[1]
        return combo


def expansion_complexity(seq: BitSequence, n: int, dmax: int = 32) -> ExpansionResult:
    """Least total degree of a nonzero ``h`` with ``h(x, G(x)) = 0 mod x^n``.

    Degrees are tried in ascending order; the columns ``x^i G^j`` for each new
    degree are appended to the running elimination rather than starting over.
    """
    _check_n(seq, n)
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    g = seq.prefix(n).to_int()
    if g == 0:
        return ExpansionResult(0, None, dmax)
    mask = (1 << n) - 1
    powers = [1]
    basis = _XorBasis()
    columns: list[tuple[int, int]] = []
    for d in range(dmax + 1):
        if d:
            powers.append(square(powers[d // 2], n) if d % 2 == 0 else clmul(powers[-1], g, n))
        for i, j in graded_monomials(d):
            col = len(columns)
            columns.append((i, j))
            vec = (powers[j] << i) & mask if i < n else 0
            combo = basis.insert(vec, 1 << col)
            if combo is not None:
                h = BivariatePolyF2(columns[b] for b in range(combo.bit_length()) if combo >> b & 1)
                return ExpansionResult(d, h, dmax)
    return ExpansionResult(EXCEEDS_DMAX, None, dmax)


def is_independent(seq: BitSequence, n: int, d: int) -> bool:
    """True when ``{x^i G^j : i + j <= d}`` is linearly independent mod ``x^n``."""
    _check_n(seq, n)
    mask = (1 << n) - 1
    powers = _powers(seq.prefix(n).to_int(), d + 1, n)
    basis = _XorBasis()
    col = 0
    for e in range(d + 1):
        for i, j in graded_monomials(e):
            vec = (powers[j] << i) & mask if i < n else 0
            if basis.insert(vec, 1 << col) is not None:
                return False
            col += 1
    return True
