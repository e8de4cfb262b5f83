"""Exact linear algebra over GF(2) on bitmask-encoded vectors.

A vector of Z_2^n is an unsigned int: bit i set means the coefficient of
e_{i+1} is 1 (e1 = 0b1, e2 = 0b10, ...). Width is capped at 16 bits; every
instance this library targets fits in a handful of bits.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

MAX_WIDTH = 16


def _check(vectors: Iterable[int], n: int) -> None:
    if not 1 <= n <= MAX_WIDTH:
        raise ValueError(f"vector width must be in [1, {MAX_WIDTH}], got {n}")
    for i, v in enumerate(vectors):
        if v < 0 or v >> n:
            raise ValueError(f"vector {i} = {v} does not fit in {n} bits")


def _insert(pivots: dict[int, int], v: int) -> int:
    """Reduce v against the pivot rows; install it if a new pivot survives.

    Returns the reduced vector (0 iff v was in the span already).
    """
    while v:
        p = v.bit_length() - 1
        if p not in pivots:
            pivots[p] = v
            return v
        v ^= pivots[p]
    return 0


def rank(vectors: Sequence[int], n: int) -> int:
    """GF(2) rank of the vectors, by Gaussian elimination on bitmasks."""
    _check(vectors, n)
    pivots: dict[int, int] = {}
    for v in vectors:
        _insert(pivots, v)
    return len(pivots)


def is_independent(vectors: Sequence[int], n: int) -> bool:
    """True iff the vectors are linearly independent over GF(2)."""
    return rank(vectors, n) == len(vectors)


def in_span(v: int, vectors: Sequence[int], n: int) -> bool:
    """True iff v lies in the GF(2) span of the given vectors."""
    _check([v], n)
    _check(vectors, n)
    pivots: dict[int, int] = {}
    for w in vectors:
        _insert(pivots, w)
    while v:
        p = v.bit_length() - 1
        if p not in pivots:
            return False
        v ^= pivots[p]
    return True


def parity(v: int) -> int:
    """Weight parity of v: 1 for an odd number of set bits, 0 for even."""
    return v.bit_count() & 1


def circuits(vectors: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """All inclusion-minimal index subsets whose vectors XOR to zero.

    Exhaustive subset enumeration: inputs are vertex-sized (at most a handful
    of vectors), so this is trivially correct and fast enough. Zero vectors
    are rejected; each would be a singleton circuit and never occurs in a
    characteristic map.
    """
    vecs = list(vectors)
    _check(vecs, n)
    for i, v in enumerate(vecs):
        if v == 0:
            raise ValueError(f"zero vector at index {i}")
    found: list[tuple[int, ...]] = []
    for size in range(2, len(vecs) + 1):
        for combo in itertools.combinations(range(len(vecs)), size):
            acc = 0
            for i in combo:
                acc ^= vecs[i]
            if acc:
                continue
            cset = set(combo)
            # scanning by increasing size, so earlier hits are the minimal ones
            if any(set(c) <= cset for c in found):
                continue
            found.append(combo)
    return sorted(found)


def vector_str(v: int) -> str:
    """Human-readable form of a bitmask, e.g. 5 -> 'e1+e3'."""
    if v == 0:
        return "0"
    return "+".join(f"e{i + 1}" for i in range(v.bit_length()) if (v >> i) & 1)
