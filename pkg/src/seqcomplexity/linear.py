"""Linear complexity over F2 by Berlekamp-Massey on bit-packed integers."""
from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitSequence
from .moc import ComplexityProfile, _check_n


@dataclass(frozen=True)
class LfsrFit:
    """Shortest recurrence ``s[i+L] = sum(taps[l] * s[i+l] for l < L)``."""

    length: int
    taps: tuple[int, ...] = ()

    def holds(self, seq: BitSequence, n: int) -> bool:
        """Replay the recurrence over the first ``n`` terms."""
        bits = seq.unpacked()[:n].tolist()
        L = self.length
        if len(self.taps) != L:
            return False
        for i in range(n - L):
            acc = 0
            for l, c in enumerate(self.taps):
                acc ^= c & bits[i + l]
            if acc != bits[i + L]:
                return False
        return True


def _bm(bits, record: bool = False):
    """Run Berlekamp-Massey; returns (L, connection polynomial, profile).

    Polynomials are ints with bit ``i`` the coefficient of ``D^i``; the
    window holds ``s_{N-i}`` at bit ``i`` so the discrepancy is one AND and a
    popcount.
    """
    conn, prev = 1, 1
    L, shift = 0, 1
    window = 0
    profile = [] if record else None
    for N, s in enumerate(bits):
        window = (window << 1) | s
        if (conn & window).bit_count() & 1:
            if 2 * L <= N:
                conn, prev = conn ^ (prev << shift), conn
                L = N + 1 - L
                shift = 1
            else:
                conn ^= prev << shift
                shift += 1
        else:
            shift += 1
        if record:
            profile.append(L)
    return L, conn, profile


def berlekamp_massey(seq: BitSequence, n: int) -> LfsrFit:
    _check_n(seq, n)
    L, conn, _ = _bm(seq.unpacked()[:n].tolist())
    taps = tuple((conn >> (L - l)) & 1 for l in range(L))
    return LfsrFit(L, taps)


def linear_complexity(seq: BitSequence, n: int) -> int:
    return berlekamp_massey(seq, n).length


def lc_profile(seq: BitSequence, nmax: int) -> ComplexityProfile:
    """``L(S, N)`` for ``N = 1 .. nmax`` in one incremental pass."""
    _check_n(seq, nmax)
    _, _, profile = _bm(seq.unpacked()[:nmax].tolist(), record=True)
    return ComplexityProfile(tuple(profile))
