"""Packed binary sequences and the ascii01 / hex file formats."""
from __future__ import annotations

import os
from typing import Iterable

import numpy as np

FORMATS = ("ascii01", "hex")

_WHITESPACE_CODES = np.frombuffer(b" \t\r\n\v\f", dtype=np.uint8)


class BitParseError(ValueError):
    """Raised when a bitstring file cannot be decoded."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} at byte offset {offset}"
        super().__init__(message)
        self.offset = offset


class BitSequence:
    """Immutable finite sequence over F2, stored packed (8 bits per byte).

    Bit ``i`` of the sequence lives in byte ``i // 8`` at position ``i % 8``
    (little-endian bit order), which is the layout ``np.packbits`` produces
    with ``bitorder="little"``.
    """

    __slots__ = ("_packed", "_length", "_unpacked")

    def __init__(self, packed: np.ndarray, length: int):
        packed = np.asarray(packed, dtype=np.uint8)
        if length < 0 or packed.size != (length + 7) // 8:
            raise ValueError("packed buffer does not match length")
        packed = packed.copy()
        # clear padding so equality can compare buffers directly
        if length % 8:
            packed[-1] &= (1 << (length % 8)) - 1
        packed.flags.writeable = False
        self._packed = packed
        self._length = length
        self._unpacked = None

    @classmethod
    def from_array(cls, bits) -> BitSequence:
        arr = np.asarray(bits)
        if arr.ndim != 1:
            raise ValueError("bits must be one-dimensional")
        arr = arr.astype(np.uint8, copy=False)
        if arr.size and arr.max() > 1:
            raise ValueError("bits must be 0 or 1")
        return cls(np.packbits(arr, bitorder="little"), arr.size)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitSequence:
        return cls.from_array(np.fromiter((int(b) for b in bits), dtype=np.uint8))

    @classmethod
    def from_str(cls, text: str) -> BitSequence:
        """Build from a string of '0'/'1' characters (no whitespace)."""
        raw = np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")
        return cls.from_array(raw)

    @classmethod
    def from_int(cls, value: int, length: int) -> BitSequence:
        """Bit ``i`` of the sequence is bit ``i`` of ``value``."""
        if value < 0 or value >> length:
            raise ValueError("value does not fit in length bits")
        data = value.to_bytes((length + 7) // 8, "little")
        return cls(np.frombuffer(data, dtype=np.uint8), length)

    def __len__(self) -> int:
        return self._length

    @property
    def length(self) -> int:
        return self._length

    @property
    def packed(self) -> np.ndarray:
        return self._packed

    def bit(self, i: int) -> int:
        if not 0 <= i < self._length:
            raise IndexError(f"bit index {i} out of range for length {self._length}")
        return (int(self._packed[i >> 3]) >> (i & 7)) & 1

    def __getitem__(self, key):
        if isinstance(key, slice):
            return BitSequence.from_array(self.unpacked()[key])
        if key < 0:
            key += self._length
        return self.bit(key)

    def __iter__(self):
        return iter(self.unpacked().tolist())

    def unpacked(self) -> np.ndarray:
        """Read-only uint8 array with one bit per element."""
        if self._unpacked is None:
            arr = np.unpackbits(self._packed, count=self._length, bitorder="little")
            arr.flags.writeable = False
            self._unpacked = arr
        return self._unpacked

    def prefix(self, n: int) -> BitSequence:
        if not 0 <= n <= self._length:
            raise ValueError(f"prefix length {n} exceeds sequence length {self._length}")
        if n == self._length:
            return self
        return BitSequence(self._packed[: (n + 7) // 8], n)

    def to_int(self) -> int:
        """Little-endian integer: bit ``i`` equals ``s_i``."""
        return int.from_bytes(self._packed.tobytes(), "little")

    def to_str(self) -> str:
        return (self.unpacked() + ord("0")).tobytes().decode("ascii")

    def to_hex(self) -> str:
        """Hex digits, 4 bits per digit most-significant first; zero-padded."""
        bits = self.unpacked()
        pad = (-self._length) % 4
        if pad:
            bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
        nibbles = bits.reshape(-1, 4) @ np.array([8, 4, 2, 1])
        return "".join("0123456789abcdef"[v] for v in nibbles.tolist())

    def is_constant(self) -> bool:
        bits = self.unpacked()
        return bits.size == 0 or bool(np.all(bits == bits[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitSequence):
            return NotImplemented
        return self._length == other._length and np.array_equal(self._packed, other._packed)

    def __hash__(self) -> int:
        return hash((self._length, self._packed.tobytes()))

    def __repr__(self) -> str:
        if self._length <= 64:
            return f"BitSequence('{self.to_str()}')"
        return f"BitSequence(length={self._length}, head='{self.prefix(32).to_str()}...')"


def parse_bits(data: bytes, fmt: str = "ascii01") -> BitSequence:
    """Decode file contents in one of the supported formats.

    Whitespace is ignored in both formats.  Any other unexpected byte raises
    :class:`BitParseError` carrying its byte offset.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    raw = np.frombuffer(data, dtype=np.uint8)
    space = np.isin(raw, _WHITESPACE_CODES)
    if fmt == "ascii01":
        valid = (raw == 0x30) | (raw == 0x31)
        _check_valid(raw, valid | space, "invalid character")
        bits = raw[valid] - 0x30
    else:
        digit = (raw >= 0x30) & (raw <= 0x39)
        lower = (raw >= 0x61) & (raw <= 0x66)
        upper = (raw >= 0x41) & (raw <= 0x46)
        _check_valid(raw, digit | lower | upper | space, "invalid hex digit")
        values = np.where(digit, raw - 0x30, (raw | 0x20) - 0x57)[~space].astype(np.uint8)
        bits = np.unpackbits(values[:, None], axis=1)[:, 4:].ravel()
    if bits.size == 0:
        raise BitParseError("no bits found (empty input)")
    return BitSequence.from_array(bits)


def _check_valid(raw: np.ndarray, ok: np.ndarray, what: str) -> None:
    if not ok.all():
        offset = int(np.argmin(ok))
        raise BitParseError(f"{what} {chr(raw[offset])!r}", offset)


def ingest(path: str | os.PathLike, fmt: str = "ascii01") -> BitSequence:
    """Read a bitstring file.  ``OSError`` propagates for unreadable paths."""
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_bits(data, fmt)


def write_bits(seq: BitSequence, fmt: str = "ascii01") -> str:
    if fmt == "ascii01":
        return seq.to_str()
    if fmt == "hex":
        return seq.to_hex()
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
