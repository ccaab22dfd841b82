"""Small bit-twiddling helpers shared by the table code."""

import numpy as np


def parity(a) -> np.ndarray:
    """Parity of each entry as int64 (``np.bitwise_count`` returns uint8)."""
    return (np.bitwise_count(np.asarray(a, dtype=np.int64)) & 1).astype(np.int64)


def signs(bits) -> np.ndarray:
    """Map 0/1 to +1/-1."""
    return 1 - 2 * np.asarray(bits, dtype=np.int64)


def log2_exact(size: int) -> int:
    if size < 1 or size & (size - 1):
        raise ValueError(f"{size} is not a power of two")
    return size.bit_length() - 1


def two_adic_valuation(x: int) -> int:
    x = abs(int(x))
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    return (x & -x).bit_length() - 1


def rank_gf2(rows) -> int:
    """Rank over F_2 of a list of row bit masks."""
    pivots: dict[int, int] = {}
    for r in rows:
        r = int(r)
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                break
            r ^= pivots[top]
    return len(pivots)
