"""Constructors for the standard starting polytopes."""

from __future__ import annotations

import itertools

from .polytope import InvariantError, Polytope, default_labels, validate


def segment() -> Polytope:
    """The 1-dimensional polytope: two facets, each a vertex on its own."""
    return Polytope(1, default_labels(2), ((0,), (1,)))


def _gale(subset: tuple[int, ...], m: int) -> bool:
    """Gale's evenness condition for a sorted subset of {0, ..., m-1}.

    Equivalent to the pairwise form (any two non-members enclose an even
    number of members): every maximal run of consecutive members touching
    neither 0 nor m-1 must have even length.
    """
    run_start = run_end = None
    for x in subset:
        if run_end is not None and x == run_end + 1:
            run_end = x
            continue
        if run_start is not None and run_start > 0 and run_end < m - 1:
            if (run_end - run_start + 1) % 2:
                return False
        run_start = run_end = x
    if run_start is not None and run_start > 0 and run_end < m - 1:
        if (run_end - run_start + 1) % 2:
            return False
    return True


def dual_cyclic(n: int, m: int) -> Polytope:
    """The simple polytope dual to the cyclic polytope C^n(m).

    Facet i corresponds to the i-th point along the moment curve; the
    vertices are exactly the n-subsets of {0, ..., m-1} satisfying Gale's
    evenness condition.
    """
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    if m <= n:
        raise ValueError(f"need more facets than the dimension, got m={m} <= n={n}")
    verts = tuple(c for c in itertools.combinations(range(m), n) if _gale(c, m))
    P = Polytope(n, default_labels(m), verts)
    diags = validate(P)
    if diags:
        raise InvariantError(f"dual_cyclic({n}, {m}) is broken: " + "; ".join(diags))
    return P


def product(P: Polytope, Q: Polytope) -> Polytope:
    """Cartesian product: P's facets first, then Q's shifted by P's count."""
    for name, X in (("left", P), ("right", Q)):
        diags = validate(X)
        if diags:
            raise InvariantError(f"{name} factor is invalid: " + "; ".join(diags))
    offset = P.num_facets
    verts = tuple(
        VP + tuple(q + offset for q in VQ)
        for VP in P.vertices
        for VQ in Q.vertices
    )
    result = Polytope(P.dim + Q.dim, P.facet_labels + Q.facet_labels, verts)
    diags = validate(result)
    if diags:
        raise InvariantError("product is broken: " + "; ".join(diags))
    return result
