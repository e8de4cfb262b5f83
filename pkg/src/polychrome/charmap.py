"""Characteristic maps over Z_2^n: storage, failure detection, colorings.

A characteristic map assigns a nonzero vector of Z_2^n to each facet; it is
non-singular at a vertex when the n vectors meeting there are independent.
The oriented flavor additionally requires every vector to have odd weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import gf2
from .polytope import InvariantError, Polytope, facet_adjacency

MODES = ("general", "oriented")

PRESET_NAMES = ("paper-example", "odd-bijection", "identity-first")

# the reference decoration of the 15-facet neighborly 4-polytope, facet order
# F0..F14: e1, e1+e2, e3, e4, e1+e4, e1+e2+e4, e2+e4, e2, e2+e3, e1+e2+e3,
# e1+e3, e1+e3+e4, e3+e4, e2+e3+e4, e1+e2+e3+e4
PAPER_EXAMPLE_VECTORS = (1, 3, 4, 8, 9, 11, 10, 2, 6, 7, 5, 13, 12, 14, 15)


@dataclass(frozen=True)
class CharMap:
    n: int
    vectors: tuple[int, ...]
    mode: str = "general"

    def __post_init__(self) -> None:
        object.__setattr__(self, "vectors", tuple(self.vectors))
        if self.mode not in MODES:
            raise InvariantError(f"mode: expected one of {MODES}, got {self.mode!r}")
        if not 1 <= self.n <= gf2.MAX_WIDTH:
            raise InvariantError(f"n: width must be in [1, {gf2.MAX_WIDTH}], got {self.n}")
        for i, v in enumerate(self.vectors):
            if v == 0:
                raise InvariantError(f"vectors[{i}]: zero vector is not allowed")
            if v < 0 or v >> self.n:
                raise InvariantError(f"vectors[{i}]: {v} does not fit in {self.n} bits")
            if self.mode == "oriented" and not gf2.parity(v):
                raise InvariantError(
                    f"vectors[{i}]: {v} has even weight; oriented maps need odd weights"
                )

    def extended(self, v: int) -> "CharMap":
        """The same map with one more facet vector appended."""
        return CharMap(self.n, self.vectors + (v,), self.mode)


@dataclass(frozen=True)
class BadFace:
    """A face whose facet vectors form a minimal GF(2)-dependent circuit."""

    face: tuple[int, ...]
    circuit_size: int
    witness_vertex: tuple[int, ...]


class Coloring(NamedTuple):
    colors: tuple[int, ...]
    proper: bool
    colors_used: int


def _check_aligned(P: Polytope, L: CharMap) -> None:
    if len(L.vectors) != P.num_facets:
        raise ValueError(
            f"map has {len(L.vectors)} vectors but the polytope has {P.num_facets} facets"
        )
    if L.n != P.dim:
        raise ValueError(f"map width {L.n} != polytope dimension {P.dim}")


def is_nonsingular_at(P: Polytope, L: CharMap, V) -> bool:
    """True iff the n facet vectors at vertex V are GF(2)-independent."""
    _check_aligned(P, L)
    key = tuple(sorted(V))
    if not P.is_vertex(key):
        raise ValueError(f"{list(key)} is not a vertex of the polytope")
    return gf2.is_independent([L.vectors[i] for i in key], L.n)


def bad_faces(P: Polytope, L: CharMap) -> list[BadFace]:
    """Every face whose vectors form a minimal dependent circuit.

    Works vertex by vertex: a singular vertex contains at least one circuit,
    and each circuit of its vectors spans a face. The same face is usually
    seen from several vertices, so results are deduplicated, keeping the
    lexicographically smallest witness vertex. Sorted by (circuit size, face).
    """
    _check_aligned(P, L)
    hits: dict[tuple[int, ...], tuple[int, ...]] = {}
    for V in P.vertices:
        vecs = [L.vectors[i] for i in V]
        if gf2.rank(vecs, L.n) == P.dim:
            continue
        for circuit in gf2.circuits(vecs, L.n):
            face = tuple(V[i] for i in circuit)
            witness = hits.get(face)
            if witness is None or V < witness:
                hits[face] = V
    out = [BadFace(face, len(face), witness) for face, witness in hits.items()]
    out.sort(key=lambda b: (b.circuit_size, b.face))
    return out


def induced_coloring(P: Polytope, L: CharMap) -> Coloring:
    """Facet coloring that uses each facet's vector as its color id."""
    _check_aligned(P, L)
    adj = facet_adjacency(P)
    m = P.num_facets
    proper = all(
        L.vectors[i] != L.vectors[j]
        for i in range(m)
        for j in range(i + 1, m)
        if adj[i][j]
    )
    return Coloring(L.vectors, proper, len(set(L.vectors)))


def oriented_valid(L: CharMap) -> bool:
    """True iff every vector has an odd number of nonzero coordinates."""
    return all(gf2.parity(v) for v in L.vectors)


class LiftReport(NamedTuple):
    determinants: tuple[int, ...]
    non_unimodular: tuple[tuple[int, ...], ...]

    @property
    def all_unimodular(self) -> bool:
        return not self.non_unimodular


def _det_bareiss(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [row[:] for row in rows]
    size = len(a)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[size - 1][size - 1]


def lift_determinant_report(P: Polytope, L: CharMap) -> LiftReport:
    """Integer determinants of the naive 0/1 lift, one per vertex.

    The GF(2) data determines each vertex matrix only mod 2; this reports
    whether the all-{0,1} integer lift happens to be unimodular as well.
    Informational only: |det| > 1 (always odd at a GF(2)-nonsingular vertex)
    means the naive lift would need entry adjustments, not that no lift exists.
    """
    _check_aligned(P, L)
    if L.n > 5:
        raise ValueError(f"lift report supports n <= 5, got {L.n}")
    dets = []
    failing = []
    for V in P.vertices:
        rows = [[(L.vectors[j] >> r) & 1 for j in V] for r in range(L.n)]
        d = _det_bareiss(rows)
        dets.append(d)
        if abs(d) != 1:
            failing.append(V)
    return LiftReport(tuple(dets), tuple(failing))


def odd_vectors(n: int) -> list[int]:
    """The odd-weight bitmasks of width n in increasing order."""
    return [v for v in range(1, 1 << n) if gf2.parity(v)]


def preset(name: str, P: Polytope) -> CharMap:
    """One of the named facet decorations, sized for the given polytope.

    paper-example: the reference decoration of the dual of C^4(15).
    odd-bijection: facets in index order onto the odd-weight vectors of
    Z_2^n in increasing bitmask order (oriented; needs m = 2^(n-1) facets).
    identity-first: facet i -> e_{i+1} for i < n, then the smallest unused
    nonzero bitmask for each remaining facet (needs m <= 2^n - 1).
    """
    n, m = P.dim, P.num_facets
    if name == "paper-example":
        if (n, m) != (4, 15):
            raise ValueError(f"paper-example needs a 4-polytope with 15 facets, got ({n}, {m})")
        return CharMap(4, PAPER_EXAMPLE_VECTORS, "general")
    if name == "odd-bijection":
        odd = odd_vectors(n)
        if m != len(odd):
            raise ValueError(f"odd-bijection needs m = 2^(n-1) = {len(odd)} facets, got {m}")
        return CharMap(n, tuple(odd), "oriented")
    if name == "identity-first":
        if m > (1 << n) - 1:
            raise ValueError(f"identity-first needs m <= 2^n - 1 = {(1 << n) - 1}, got {m}")
        vectors = [1 << i for i in range(min(n, m))]
        used = set(vectors)
        w = 1
        while len(vectors) < m:
            while w in used:
                w += 1
            vectors.append(w)
            used.add(w)
        return CharMap(n, tuple(vectors), "general")
    raise ValueError(f"unknown preset {name!r}; expected one of {PRESET_NAMES}")


def stack(L1: CharMap, L2: CharMap) -> CharMap:
    """Characteristic map on a product polytope: block-diagonal vector join.

    Aligned with generators.product: the left factor's facets come first, and
    the right factor's vectors are shifted into the fresh high coordinates.
    """
    mode = "oriented" if L1.mode == L2.mode == "oriented" else "general"
    return CharMap(
        L1.n + L2.n,
        L1.vectors + tuple(v << L1.n for v in L2.vectors),
        mode,
    )


def segment_map(mode: str = "general") -> CharMap:
    """The unique characteristic map of the segment: both facets map to e1."""
    return CharMap(1, (1, 1), mode)
