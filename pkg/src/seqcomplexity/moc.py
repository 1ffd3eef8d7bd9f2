"""N-th maximum order complexity.

A binary word has maximum order complexity ``t + 1`` where ``t`` is the length
of the longest factor that occurs at least twice with different successors.
In the suffix automaton of the word, factor ``w`` is followed by both symbols
exactly when the state of ``w`` has two outgoing transitions, and all strings
of a state share their right extensions.  So ``t`` is the largest ``len`` over
branching states, and the automaton gives the complexity in linear time.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bitseq import BitSequence


@dataclass(frozen=True)
class Witness:
    """Two occurrences ``first < second`` of a length-``length`` factor whose
    successors differ."""

    first: int
    second: int
    length: int

    def holds(self, seq: BitSequence) -> bool:
        bits = seq.unpacked()
        j, n, t = self.first, self.second, self.length
        if not 0 <= j < n or n + t >= len(bits):
            return False
        return bool(np.array_equal(bits[j : j + t], bits[n : n + t])) and bits[j + t] != bits[n + t]


@dataclass(frozen=True)
class MocResult:
    value: int
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.witness is not None and self.value != self.witness.length + 1:
            raise ValueError("witness length does not match complexity value")


@dataclass(frozen=True)
class ComplexityProfile:
    """Values of a measure for prefix lengths ``N = 1 .. len(values)``."""

    values: tuple

    def __post_init__(self):
        v = self.values
        if any(a > b for a, b in zip(v, v[1:])):
            raise ValueError("profile is not nondecreasing")

    @property
    def nmax(self) -> int:
        return len(self.values)

    @property
    def entries(self) -> list[tuple[int, int]]:
        return [(n, v) for n, v in enumerate(self.values, start=1)]

    def __getitem__(self, n: int) -> int:
        """Value at prefix length ``n`` (1-based)."""
        if not 1 <= n <= len(self.values):
            raise IndexError(n)
        return self.values[n - 1]


def _check_n(seq: BitSequence, n: int) -> None:
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    if n > len(seq):
        raise ValueError(f"N = {n} exceeds sequence length {len(seq)}")


def _degenerate(bits: np.ndarray, n: int) -> Optional[MocResult]:
    """Constant-prefix convention: s_0 = ... = s_{n-2} = a."""
    if n == 1:
        return MocResult(0)
    head = bits[: n - 1]
    if np.all(head == head[0]):
        if bits[n - 1] == head[0]:
            return MocResult(0)
        return MocResult(n - 1, Witness(0, 1, n - 2))
    return None


class SuffixAutomaton:
    """Online suffix automaton over {0, 1}.

    State arrays are flat Python lists: ``trans[2*v + c]`` is the target of
    state ``v`` on symbol ``c`` (or -1).  ``firstpos[v]`` is the end index of
    the first occurrence of the strings of ``v``.  ``branch_len`` is the
    largest ``length`` of a state with both transitions, or -1.
    """

    def __init__(self, capacity: int = 16):
        cap = 2 * max(capacity, 1) + 1
        self.length = [0] * cap
        self.link = [-1] * cap
        self.firstpos = [-1] * cap
        self.trans = [-1] * (2 * cap)
        self.size = 1
        self.last = 0
        self.n = 0
        self.branch_len = -1

    def _grow(self) -> None:
        extra = len(self.length)
        self.length.extend([0] * extra)
        self.link.extend([-1] * extra)
        self.firstpos.extend([-1] * extra)
        self.trans.extend([-1] * (2 * extra))

    def extend(self, c: int) -> None:
        if self.size + 2 > len(self.length):
            self._grow()
        length, link, trans = self.length, self.link, self.trans
        cur = self.size
        self.size += 1
        length[cur] = length[self.last] + 1
        self.firstpos[cur] = self.n
        p = self.last
        while p != -1 and trans[2 * p + c] == -1:
            trans[2 * p + c] = cur
            # p gained its second transition
            if trans[2 * p + 1 - c] != -1 and length[p] > self.branch_len:
                self.branch_len = length[p]
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = trans[2 * p + c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = self.size
                self.size += 1
                length[clone] = length[p] + 1
                link[clone] = link[q]
                self.firstpos[clone] = self.firstpos[q]
                trans[2 * clone] = trans[2 * q]
                trans[2 * clone + 1] = trans[2 * q + 1]
                while p != -1 and trans[2 * p + c] == q:
                    trans[2 * p + c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        self.last = cur
        self.n += 1

    def feed(self, bits) -> None:
        """Append symbols in order."""
        for c in bits:
            self.extend(c)

    def branching_states(self):
        trans = self.trans
        for v in range(self.size):
            if trans[2 * v] != -1 and trans[2 * v + 1] != -1:
                yield v


def _profile_values(bits) -> list[int]:
    """Max branching length after each prefix, from one online build.

    Same algorithm as :class:`SuffixAutomaton`, with locals hoisted for speed.
    """
    n = len(bits)
    cap = 2 * n + 2
    length = [0] * cap
    link = [-1] * cap
    t0 = [-1] * cap
    t1 = [-1] * cap
    size = 1
    last = 0
    best = -1
    out = [0] * n
    for i, c in enumerate(bits):
        cur = size
        size += 1
        length[cur] = length[last] + 1
        if c:
            tc, to = t1, t0
        else:
            tc, to = t0, t1
        p = last
        while p != -1 and tc[p] == -1:
            tc[p] = cur
            if to[p] != -1 and length[p] > best:
                best = length[p]
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = tc[p]
            lp = length[p] + 1
            if lp == length[q]:
                link[cur] = q
            else:
                clone = size
                size += 1
                length[clone] = lp
                link[clone] = link[q]
                t0[clone] = t0[q]
                t1[clone] = t1[q]
                while p != -1 and tc[p] == q:
                    tc[p] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
        out[i] = best + 1
    return out


def moc_bruteforce(seq: BitSequence, n: int) -> MocResult:
    """Smallest M such that every length-M window with a successor inside the
    prefix determines that successor.  Quadratic; used as an oracle."""
    _check_n(seq, n)
    bits = seq.unpacked()[:n]
    degenerate = _degenerate(bits, n)
    if degenerate is not None:
        return degenerate
    text = bits.tobytes()
    for m in range(1, n):
        successor: dict[bytes, int] = {}
        conflict = False
        for i in range(n - m):
            if successor.setdefault(text[i : i + m], text[i + m]) != text[i + m]:
                conflict = True
                break
        if not conflict:
            break
    t = m - 1
    # earliest occurrence of each window, then its earliest partner
    first: dict[bytes, int] = {}
    best = None
    for k in range(n - t):
        w = text[k : k + t]
        j = first.setdefault(w, k)
        if text[j + t] != text[k + t] and (best is None or (j, k) < best):
            best = (j, k)
    return MocResult(m, Witness(best[0], best[1], t))


def moc_automaton(seq: BitSequence, n: int) -> MocResult:
    """Maximum order complexity of the length-``n`` prefix via a suffix automaton.

    The witness is the lexicographically smallest ``(first, second)`` pair of
    occurrences of a longest conflicting factor.
    """
    _check_n(seq, n)
    bits = seq.unpacked()[:n]
    degenerate = _degenerate(bits, n)
    if degenerate is not None:
        return degenerate
    sam = SuffixAutomaton(n)
    sam.feed(bits.tolist())
    t = sam.branch_len
    trans, firstpos = sam.trans, sam.firstpos
    best = None
    for v in sam.branching_states():
        if sam.length[v] != t:
            continue
        j = firstpos[v] - t + 1
        # the first occurrence is followed by bits[j + t]; the earliest
        # occurrence followed by the other symbol ends one before the first
        # occurrence of w + other
        other = 1 - int(bits[j + t])
        k = firstpos[trans[2 * v + other]] - t
        if best is None or (j, k) < best:
            best = (j, k)
    return MocResult(t + 1, Witness(best[0], best[1], t))


def moc_profile(seq: BitSequence, nmax: int, incremental: bool = True) -> ComplexityProfile:
    """``M(S, N)`` for every ``N = 1 .. nmax``.

    The incremental path extends a single automaton online, O(nmax) overall.
    ``incremental=False`` rebuilds per prefix and exists for cross-checking.
    """
    _check_n(seq, nmax)
    if not incremental:
        return ComplexityProfile(tuple(moc_automaton(seq, n).value for n in range(1, nmax + 1)))
    bits = seq.unpacked()[:nmax]
    values = _profile_values(bits.tolist())
    # the constant-prefix convention overrides the automaton value
    first = bits[0]
    changes = np.flatnonzero(bits != first)
    run = int(changes[0]) if changes.size else nmax
    for n in range(1, min(run + 1, nmax) + 1):
        values[n - 1] = 0 if n <= run else n - 1
    return ComplexityProfile(tuple(values))
