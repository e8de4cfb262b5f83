"""End-to-end builds of the three headline constructions.

Each target generates its starting polytope, decorates it, resolves every
bad face by truncation, and certifies the chromatic number of the result.
Computed values are never replaced by quoted ones: where the reference
example's bookkeeping disagrees with the arithmetic, both numbers are
reported and the mismatch is flagged in the notes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import gf2
from .charmap import (
    BadFace,
    CharMap,
    bad_faces,
    induced_coloring,
    oriented_valid,
    preset,
    segment_map,
    stack,
)
from .chromatic import ChromaticCertificate, chromatic_number
from .generators import dual_cyclic, product, segment
from .polytope import InvariantError, Polytope, f_vector, truncate_face, validate
from .resolution import ResolutionReport, resolve

TARGETS = ("main", "main2", "main3")

# counts quoted by the reference example for the 15-facet run; kept as data so
# reports can show quoted-vs-computed side by side
REFERENCE_MAIN = {
    "bad_edges": 13,
    "bad_vertices": 17,
    "steps": 30,
    "f_vector": [193, 386, 228, 45],
}


@dataclass
class ReproduceResult:
    target: str
    summary: dict
    polytope: Polytope
    charmap: CharMap
    report: ResolutionReport
    certificate: ChromaticCertificate
    ok: bool
    failures: list[str] = field(default_factory=list)


def replay_bad_history(
    P0: Polytope, L0: CharMap, report: ResolutionReport
) -> list[list[BadFace]]:
    """Bad faces before each recorded step (and after the last), by replay.

    Also a determinism check: the replayed end state must equal the report's.
    """
    history = []
    P, L = P0, L0
    for step in report.steps:
        history.append(bad_faces(P, L))
        P, _ = truncate_face(P, step.face)
        L = L.extended(step.chosen_vector)
    history.append(bad_faces(P, L))
    if P != report.final_polytope or L != report.final_map:
        raise InvariantError("replay diverged from the recorded resolution")
    return history


def _euler_sum(fv: list[int]) -> int:
    return sum(f if d % 2 == 0 else -f for d, f in enumerate(fv))


def _euler_expected(n: int) -> int:
    return 0 if n % 2 == 0 else 2


def _hosts_disjoint(P: Polytope, faces: list[tuple[int, ...]]) -> bool:
    seen: set[tuple[int, ...]] = set()
    for face in faces:
        for V in P.vertices:
            if set(face) <= set(V):
                if V in seen:
                    return False
                seen.add(V)
    return True


def _certified_summary(
    result: dict, failures: list[str], P: Polytope, L: CharMap, cert: ChromaticCertificate,
    expected_chi: int,
) -> None:
    col = induced_coloring(P, L)
    result["chi"] = cert.chi
    result["chi_status"] = cert.status
    result["chi_lower"] = cert.lower
    result["chi_upper"] = cert.upper
    result["clique_size"] = len(cert.clique)
    result["colors_used"] = col.colors_used
    result["coloring_proper"] = col.proper
    if not col.proper:
        failures.append("final induced coloring is not proper")
    if cert.status != "exact":
        failures.append(f"chromatic number not certified exactly: {cert.lower}..{cert.upper}")
    elif cert.chi != expected_chi:
        failures.append(f"chi = {cert.chi}, expected {expected_chi}")


def _resolved_base(target: str, P0: Polytope, L0: CharMap) -> tuple[dict, list, ResolutionReport, list]:
    report = resolve(P0, L0)
    failures: list[str] = []
    if report.terminated != "success":
        failures.append(f"resolution terminated with {report.terminated}")
    history = replay_bad_history(P0, L0, report)
    if history and any(
        len(later) >= len(earlier) for earlier, later in zip(history, history[1:])
    ):
        failures.append("bad-face count did not strictly decrease at every step")
    final = report.final_polytope
    diags = validate(final)
    if diags:
        failures.append("final polytope invalid: " + "; ".join(diags))
    if history[-1]:
        failures.append(f"{len(history[-1])} bad faces remain")
    fv = f_vector(final)
    summary = {
        "target": target,
        "initial_bad_count": report.initial_bad_count,
        "steps": len(report.steps),
        "terminated": report.terminated,
        "final_facets": final.num_facets,
        "f_vector": fv,
        "euler_alternating_sum": _euler_sum(fv),
        "euler_consistent": _euler_sum(fv) == _euler_expected(final.dim),
    }
    if not summary["euler_consistent"]:
        failures.append("Euler relation violated by the final f-vector")
    return summary, failures, report, history


def _reproduce_main() -> ReproduceResult:
    P0 = dual_cyclic(4, 15)
    L0 = preset("paper-example", P0)
    summary, failures, report, history = _resolved_base("main", P0, L0)
    initial = history[0]
    edges = [b.face for b in initial if b.circuit_size == 3]
    verts = [b.face for b in initial if b.circuit_size == 4]
    summary["initial_bad_edges"] = len(edges)
    summary["initial_bad_vertices"] = len(verts)
    summary["bad_edges_vertex_disjoint"] = _hosts_disjoint(P0, [b.face for b in initial])
    summary["reference"] = dict(REFERENCE_MAIN)

    notes = []
    if len(edges) != REFERENCE_MAIN["bad_edges"] or len(verts) != REFERENCE_MAIN["bad_vertices"]:
        ref_edges = {
            (2, 7, 8), (1, 2, 9), (3, 10, 11), (2, 3, 12), (4, 5, 7), (7, 9, 10),
            (7, 12, 13), (0, 3, 4), (0, 5, 6), (0, 8, 9), (0, 11, 12), (0, 13, 14),
            (0, 1, 7),
        }
        missed = sorted(set(edges) - ref_edges)
        notes.append(
            f"bad faces: computed {len(edges)} edges and {len(verts)} vertices; the "
            f"reference example lists {REFERENCE_MAIN['bad_edges']} edges and "
            f"{REFERENCE_MAIN['bad_vertices']} vertices, omitting "
            + ", ".join(
                "{" + ",".join(P0.facet_labels[i] for i in face) + "} = "
                + " + ".join(gf2.vector_str(L0.vectors[i]) for i in face)
                for face in missed
            )
        )
    ref_fv = REFERENCE_MAIN["f_vector"]
    euler_ref = ref_fv[0] - ref_fv[1] + ref_fv[2] - ref_fv[3]
    notes.append(
        f"ridge count: the reference example prints {ref_fv[2]} ridges, violating the "
        f"Euler relation (alternating sum {euler_ref}, expected 0); its own "
        f"vertex/edge/facet counts {ref_fv[0]}/{ref_fv[1]}/{ref_fv[3]} would force "
        f"{ref_fv[1] - ref_fv[0] + ref_fv[3]} ridges, and the corrected construction "
        f"here has f_vector {summary['f_vector']}"
    )
    notes.append(
        "bad edges pairwise vertex-disjoint: "
        + ("true" if summary["bad_edges_vertex_disjoint"] else "false")
        + " (observed, not assumed)"
    )
    summary["notes"] = notes

    cert = chromatic_number(report.final_polytope, hint=report.final_map)
    _certified_summary(summary, failures, report.final_polytope, report.final_map, cert, 15)
    summary["ok"] = not failures
    summary["failures"] = failures
    return ReproduceResult(
        "main", summary, report.final_polytope, report.final_map, report, cert,
        not failures, failures,
    )


def _oriented_checks(
    summary: dict, failures: list[str], L0: CharMap, report: ResolutionReport,
    history: list[list[BadFace]], forbidden_sizes: tuple[int, ...],
) -> None:
    maps = [L0]
    for step in report.steps:
        maps.append(maps[-1].extended(step.chosen_vector))
    oriented_throughout = all(m.mode == "oriented" and oriented_valid(m) for m in maps)
    summary["oriented"] = oriented_throughout
    if not oriented_throughout:
        failures.append("an intermediate map broke the odd-weight condition")
    observed = Counter(b.circuit_size for state in history for b in state)
    summary["observed_circuit_sizes"] = {str(k): v for k, v in sorted(observed.items())}
    for size in forbidden_sizes:
        summary[f"size{size}_circuits_observed"] = observed.get(size, 0)
        if observed.get(size, 0):
            failures.append(f"a size-{size} circuit appeared in an oriented run")


def _reproduce_main2() -> ReproduceResult:
    P0 = dual_cyclic(4, 8)
    L0 = preset("odd-bijection", P0)
    summary, failures, report, history = _resolved_base("main2", P0, L0)
    _oriented_checks(summary, failures, L0, report, history, forbidden_sizes=(3,))
    summary["notes"] = [
        "intermediate step counts are recorded, not asserted: no reference values exist"
    ]
    cert = chromatic_number(report.final_polytope, hint=report.final_map)
    _certified_summary(summary, failures, report.final_polytope, report.final_map, cert, 8)
    summary["ok"] = not failures
    summary["failures"] = failures
    return ReproduceResult(
        "main2", summary, report.final_polytope, report.final_map, report, cert,
        not failures, failures,
    )


def _reproduce_main3() -> ReproduceResult:
    P0 = dual_cyclic(5, 16)
    L0 = preset("odd-bijection", P0)
    summary, failures, report, history = _resolved_base("main3", P0, L0)
    _oriented_checks(summary, failures, L0, report, history, forbidden_sizes=(3, 5))
    summary["notes"] = [
        "interpretation: the oriented 5-dimensional run starts from dual_cyclic(5, 16); "
        "the quoted starting polytope (the 15-facet 4-dimensional dual) cannot carry "
        "16 facet vectors of width 5 and is recorded here as a misprint",
    ]
    cert = chromatic_number(report.final_polytope, hint=report.final_map)
    _certified_summary(summary, failures, report.final_polytope, report.final_map, cert, 16)
    summary["ok"] = not failures
    summary["failures"] = failures
    return ReproduceResult(
        "main3", summary, report.final_polytope, report.final_map, report, cert,
        not failures, failures,
    )


def reproduce(target: str) -> ReproduceResult:
    """Run one of the scripted pipelines end to end."""
    if target == "main":
        return _reproduce_main()
    if target == "main2":
        return _reproduce_main2()
    if target == "main3":
        return _reproduce_main3()
    raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")


def product_with_segment(
    base: ReproduceResult | None = None,
) -> tuple[Polytope, CharMap, ChromaticCertificate]:
    """The 5-dimensional product of the resolved 15-color polytope with a segment.

    Both segment facets take the fresh fifth coordinate vector, so the product
    map stays non-singular and adds exactly one new color.
    """
    if base is None:
        base = reproduce("main")
    P5 = product(base.polytope, segment())
    L5 = stack(base.charmap, segment_map())
    cert = chromatic_number(P5, hint=L5)
    return P5, L5, cert
