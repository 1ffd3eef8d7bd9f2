"""Generators for Thue-Morse, pattern sequences and their subsequence along squares.

A pattern sequence ``P_k`` has ``p_0 = 0`` and ``p_i = p_{i // 2} + [i = -1 mod 2^k]``.
``P_1`` is Thue-Morse, ``P_2`` is Rudin-Shapiro.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .bitseq import BitSequence, ingest


@dataclass(frozen=True)
class ThueMorse:
    pass


@dataclass(frozen=True)
class Pattern:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"pattern length k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class AlongSquares:
    inner: "SequenceSpec"


@dataclass(frozen=True)
class Literal:
    bits: BitSequence


@dataclass(frozen=True)
class File:
    path: Union[str, os.PathLike]
    format: str = "ascii01"


SequenceSpec = Union[ThueMorse, Pattern, AlongSquares, Literal, File]

RUDIN_SHAPIRO = Pattern(2)


def _pattern_prefix(k: int, n: int) -> np.ndarray:
    """First ``n`` terms of P_k, filled bottom-up one power-of-two block at a time.

    Inside the block ``[2^m, 2^(m+1))`` every index ``i`` reads ``i // 2``, which
    lies in the previous block, so each block is a single vectorized step.
    """
    out = np.zeros(n, dtype=np.uint8)
    mask = (1 << k) - 1
    lo = 1
    while lo < n:
        hi = min(2 * lo, n)
        idx = np.arange(lo, hi, dtype=np.int64)
        out[lo:hi] = out[idx >> 1] ^ ((idx & mask) == mask)
        lo = hi
    return out


def pattern_terms(k: int, indices) -> np.ndarray:
    """Evaluate P_k at arbitrary non-negative indices by repeated halving.

    Costs O(log i) per index; no prefix is materialized.
    """
    idx = np.array(indices, dtype=np.uint64)
    mask = np.uint64((1 << k) - 1)
    acc = np.zeros(idx.shape, dtype=np.uint8)
    while idx.any():
        acc ^= ((idx & mask) == mask).astype(np.uint8)
        idx >>= np.uint64(1)
    return acc


def _terms(spec: SequenceSpec, indices: np.ndarray) -> np.ndarray:
    if isinstance(spec, ThueMorse):
        return pattern_terms(1, indices)
    if isinstance(spec, Pattern):
        return pattern_terms(spec.k, indices)
    if isinstance(spec, AlongSquares):
        idx = np.asarray(indices, dtype=np.uint64)
        if idx.size and int(idx.max()) >= 1 << 32:
            raise OverflowError("squared index does not fit in 64 bits")
        return _terms(spec.inner, idx * idx)
    # finite sources: index directly into the stored bits
    need = int(np.max(indices)) + 1 if len(indices) else 0
    bits = generate(spec, need).unpacked()
    return bits[np.asarray(indices, dtype=np.int64)]


def generate(spec: SequenceSpec, n: int) -> BitSequence:
    """Return the first ``n`` terms of the sequence described by ``spec``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if isinstance(spec, ThueMorse):
        return BitSequence.from_array(_pattern_prefix(1, n))
    if isinstance(spec, Pattern):
        return BitSequence.from_array(_pattern_prefix(spec.k, n))
    if isinstance(spec, AlongSquares):
        return BitSequence.from_array(_terms(spec, np.arange(n, dtype=np.uint64)))
    if isinstance(spec, Literal):
        return _truncate(spec.bits, n)
    if isinstance(spec, File):
        return _truncate(ingest(spec.path, spec.format), n)
    raise TypeError(f"not a sequence spec: {spec!r}")


def _truncate(bits: BitSequence, n: int) -> BitSequence:
    if len(bits) < n:
        raise ValueError(f"sequence has only {len(bits)} bits, {n} requested")
    return bits.prefix(n)


def thue_morse(n: int) -> BitSequence:
    return generate(ThueMorse(), n)


def pattern_sequence(k: int, n: int) -> BitSequence:
    return generate(Pattern(k), n)


def pattern_by_digit_count(k: int, n: int) -> BitSequence:
    """P_k computed from the definition: parity of overlapping occurrences of
    ``1^k`` in the binary expansion of each index."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    occurrence = re.compile("(?=" + "1" * k + ")")
    return BitSequence.from_bits(
        len(occurrence.findall(format(i, "b"))) & 1 for i in range(n)
    )
