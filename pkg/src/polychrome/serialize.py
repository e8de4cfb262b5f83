"""Canonical JSON persistence for polytopes, characteristic maps, and reports.

Files are UTF-8 JSON with sorted keys, two-space indent, and a trailing
newline; integers only, never floats. Loading normalizes vertex order, so
save(load(x)) is byte-identical for canonical files.
"""

from __future__ import annotations

import json
from pathlib import Path

from .charmap import CharMap
from .polytope import InvariantError, Polytope, validate
from .resolution import TERMINATED, ResolutionReport, Step


class SchemaError(ValueError):
    """A JSON document does not match the expected shape."""


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def save_json(data, path) -> None:
    Path(path).write_text(dumps(data), encoding="utf-8")


def load_json(path):
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _expect_keys(d, keys: tuple[str, ...], what: str) -> None:
    if not isinstance(d, dict):
        raise SchemaError(f"{what}: expected a JSON object")
    missing = sorted(set(keys) - set(d))
    extra = sorted(set(d) - set(keys))
    if missing:
        raise SchemaError(f"{what}: missing fields {missing}")
    if extra:
        raise SchemaError(f"{what}: unexpected fields {extra}")


def _expect_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{what}: expected an integer, got {x!r}")
    return x


def _expect_str(x, what: str) -> str:
    if not isinstance(x, str):
        raise SchemaError(f"{what}: expected a string, got {x!r}")
    return x


def _expect_list(x, what: str) -> list:
    if not isinstance(x, list):
        raise SchemaError(f"{what}: expected a list, got {x!r}")
    return x


# -- Polytope ---------------------------------------------------------------

def polytope_to_dict(P: Polytope) -> dict:
    return {
        "dim": P.dim,
        "facets": list(P.facet_labels),
        "vertices": [list(v) for v in P.vertices],
    }


def polytope_from_dict(d) -> Polytope:
    _expect_keys(d, ("dim", "facets", "vertices"), "polytope")
    dim = _expect_int(d["dim"], "polytope.dim")
    labels = tuple(
        _expect_str(x, f"polytope.facets[{i}]")
        for i, x in enumerate(_expect_list(d["facets"], "polytope.facets"))
    )
    rows = []
    for i, row in enumerate(_expect_list(d["vertices"], "polytope.vertices")):
        rows.append(
            tuple(
                _expect_int(x, f"polytope.vertices[{i}]")
                for x in _expect_list(row, f"polytope.vertices[{i}]")
            )
        )
    P = Polytope(dim, labels, tuple(rows))
    diags = validate(P)
    if diags:
        raise InvariantError("polytope: " + "; ".join(diags))
    return P


def save_polytope(P: Polytope, path) -> None:
    save_json(polytope_to_dict(P), path)


def load_polytope(path) -> Polytope:
    return polytope_from_dict(load_json(path))


# -- CharMap ----------------------------------------------------------------

def charmap_to_dict(L: CharMap) -> dict:
    return {"n": L.n, "mode": L.mode, "vectors": list(L.vectors)}


def charmap_from_dict(d) -> CharMap:
    _expect_keys(d, ("n", "mode", "vectors"), "charmap")
    n = _expect_int(d["n"], "charmap.n")
    mode = _expect_str(d["mode"], "charmap.mode")
    vectors = tuple(
        _expect_int(x, f"charmap.vectors[{i}]")
        for i, x in enumerate(_expect_list(d["vectors"], "charmap.vectors"))
    )
    return CharMap(n, vectors, mode)


def save_charmap(L: CharMap, path) -> None:
    save_json(charmap_to_dict(L), path)


def load_charmap(path) -> CharMap:
    return charmap_from_dict(load_json(path))


# -- ResolutionReport ---------------------------------------------------------

_REPORT_KEYS = ("final_map", "final_polytope", "initial_bad_count", "steps", "terminated")
_STEP_KEYS = (
    "chosen_vector",
    "circuit_size",
    "face",
    "new_facet_index",
    "vertices_added",
    "vertices_removed",
)


def report_to_dict(r: ResolutionReport) -> dict:
    return {
        "initial_bad_count": r.initial_bad_count,
        "steps": [
            {
                "face": list(s.face),
                "circuit_size": s.circuit_size,
                "new_facet_index": s.new_facet_index,
                "chosen_vector": s.chosen_vector,
                "vertices_removed": s.vertices_removed,
                "vertices_added": s.vertices_added,
            }
            for s in r.steps
        ],
        "final_polytope": polytope_to_dict(r.final_polytope),
        "final_map": charmap_to_dict(r.final_map),
        "terminated": r.terminated,
    }


def report_from_dict(d) -> ResolutionReport:
    _expect_keys(d, _REPORT_KEYS, "report")
    steps = []
    for i, sd in enumerate(_expect_list(d["steps"], "report.steps")):
        _expect_keys(sd, _STEP_KEYS, f"report.steps[{i}]")
        steps.append(
            Step(
                face=tuple(
                    _expect_int(x, f"report.steps[{i}].face")
                    for x in _expect_list(sd["face"], f"report.steps[{i}].face")
                ),
                circuit_size=_expect_int(sd["circuit_size"], f"report.steps[{i}].circuit_size"),
                new_facet_index=_expect_int(
                    sd["new_facet_index"], f"report.steps[{i}].new_facet_index"
                ),
                chosen_vector=_expect_int(
                    sd["chosen_vector"], f"report.steps[{i}].chosen_vector"
                ),
                vertices_removed=_expect_int(
                    sd["vertices_removed"], f"report.steps[{i}].vertices_removed"
                ),
                vertices_added=_expect_int(
                    sd["vertices_added"], f"report.steps[{i}].vertices_added"
                ),
            )
        )
    terminated = _expect_str(d["terminated"], "report.terminated")
    if terminated not in TERMINATED:
        raise SchemaError(f"report.terminated: expected one of {TERMINATED}, got {terminated!r}")
    return ResolutionReport(
        initial_bad_count=_expect_int(d["initial_bad_count"], "report.initial_bad_count"),
        steps=tuple(steps),
        final_polytope=polytope_from_dict(d["final_polytope"]),
        final_map=charmap_from_dict(d["final_map"]),
        terminated=terminated,
    )


def save_report(r: ResolutionReport, path) -> None:
    save_json(report_to_dict(r), path)


def load_report(path) -> ResolutionReport:
    return report_from_dict(load_json(path))
