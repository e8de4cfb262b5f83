"""Truncate-and-decorate loop removing every bad face of a characteristic map."""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .charmap import CharMap, bad_faces
from .polytope import InvariantError, Polytope, is_face, truncate_face

TERMINATED = ("success", "budget_exhausted", "no_vector_found")

DEFAULT_BUDGET = 1000


class NoVectorFound(RuntimeError):
    """No candidate vector keeps all vertices created by a truncation nonsingular."""

    def __init__(self, face: tuple[int, ...]):
        super().__init__(f"no resolution vector exists for face {list(face)}")
        self.face = face


@dataclass(frozen=True)
class Step:
    face: tuple[int, ...]
    circuit_size: int
    new_facet_index: int
    chosen_vector: int
    vertices_removed: int
    vertices_added: int


@dataclass(frozen=True)
class ResolutionReport:
    initial_bad_count: int
    steps: tuple[Step, ...]
    final_polytope: Polytope
    final_map: CharMap
    terminated: str


def resolution_vector(P: Polytope, L: CharMap, S) -> int:
    """Smallest vector decorating the facet that truncating S would create.

    Truncating S turns each vertex V over S into the vertices (V - {s}) + F'
    for s in S, so the candidate must complete each retained (n-1)-set of
    vectors to full rank. Candidates are tried in increasing bitmask order,
    restricted to odd-weight vectors when the map is oriented.
    """
    face = tuple(sorted(set(S)))
    if not is_face(P, face):
        raise ValueError(f"{list(face)} is not a face of the polytope")
    hosts = [V for V in P.vertices if set(face) <= set(V)]
    retained = [
        [L.vectors[i] for i in V if i != s] for V in hosts for s in face
    ]
    for w in range(1, 1 << L.n):
        if L.mode == "oriented" and not gf2.parity(w):
            continue
        if all(gf2.is_independent(vecs + [w], L.n) for vecs in retained):
            return w
    raise NoVectorFound(face)


def resolve(P: Polytope, L: CharMap, budget: int = DEFAULT_BUDGET) -> ResolutionReport:
    """Repeatedly truncate the worst bad face until none remain.

    Selection order is smallest circuit first (so edges go before vertices),
    ties broken by lexicographically smallest face. Each round removes the
    selected face's vertices and creates only nonsingular ones, so the
    bad-face count strictly decreases; that is re-checked every step. On
    budget exhaustion or a failed vector search the partial state is returned
    in the report rather than raised.
    """
    if budget < 1:
        raise ValueError(f"budget must be at least 1, got {budget}")
    bad = bad_faces(P, L)
    initial = len(bad)
    steps: list[Step] = []
    terminated = "success"
    while bad:
        if len(steps) >= budget:
            terminated = "budget_exhausted"
            break
        target = bad[0]
        try:
            w = resolution_vector(P, L, target.face)
        except NoVectorFound:
            terminated = "no_vector_found"
            break
        removed = sum(1 for V in P.vertices if set(target.face) <= set(V))
        next_P, new_index = truncate_face(P, target.face)
        next_L = L.extended(w)
        added = len(next_P.vertices) - (len(P.vertices) - removed)
        steps.append(
            Step(target.face, target.circuit_size, new_index, w, removed, added)
        )
        next_bad = bad_faces(next_P, next_L)
        if len(next_bad) >= len(bad):
            raise InvariantError(
                f"bad-face count failed to decrease at step {len(steps)}: "
                f"{len(bad)} -> {len(next_bad)}"
            )
        P, L, bad = next_P, next_L, next_bad
    return ResolutionReport(initial, tuple(steps), P, L, terminated)
