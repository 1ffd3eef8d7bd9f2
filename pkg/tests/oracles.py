"""Independent oracles used by the tests; none of them calls the code under test."""
import numpy as np

_PARITY = np.unpackbits(np.arange(256, dtype=np.uint8)[:, None], axis=1).sum(axis=1) & 1


def parity(x):
    x = np.asarray(x, dtype=np.uint32)
    p = _PARITY[x & 0xFF] ^ _PARITY[(x >> 8) & 0xFF] ^ _PARITY[(x >> 16) & 0xFF] ^ _PARITY[x >> 24]
    return p.astype(np.uint8)


def exhaustive_linear_complexity(n):
    """Minimal recurrence length of every length-``n`` bitstring, by trying
    every tap vector of every length in increasing order.

    Returns an array indexed by the integer whose bit ``i`` is ``s_i``.
    """
    xs = np.arange(1 << n, dtype=np.uint32)
    result = np.full(1 << n, -1, dtype=np.int64)
    for L in range(n + 1):
        todo = xs[result < 0]
        if todo.size == 0:
            break
        taps = np.arange(1 << L, dtype=np.uint32)
        ok = np.ones((todo.size, taps.size), dtype=bool)
        mask = np.uint32((1 << L) - 1)
        for i in range(n - L):
            window = (todo >> np.uint32(i)) & mask
            target = ((todo >> np.uint32(i + L)) & np.uint32(1)).astype(np.uint8)
            ok &= parity(window[:, None] & taps[None, :]) == target[:, None]
        found = ok.any(axis=1)
        result[todo[found]] = L
    return result


def replay_lfsr(bits, taps):
    L = len(taps)
    return all(
        sum(c * bits[i + l] for l, c in enumerate(taps)) % 2 == bits[i + L]
        for i in range(len(bits) - L)
    )
