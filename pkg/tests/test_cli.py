import json

import pytest

from polychrome.cli import main
from polychrome.serialize import load_charmap, load_polytope, load_report


@pytest.fixture()
def simplex_flow(tmp_path):
    poly = tmp_path / "poly.json"
    cmap = tmp_path / "map.json"
    assert main(["gen", "dual-cyclic", "--dim", "4", "--facets", "5", "-o", str(poly)]) == 0
    assert main(["decorate", str(poly), "--preset", "identity-first", "-o", str(cmap)]) == 0
    return tmp_path, poly, cmap


def test_gen_writes_valid_file(simplex_flow):
    _, poly, _ = simplex_flow
    P = load_polytope(poly)
    assert (P.dim, P.num_facets, len(P.vertices)) == (4, 5, 5)


def test_gen_segment_and_product(tmp_path, capsys):
    seg = tmp_path / "seg.json"
    out = tmp_path / "sq.json"
    assert main(["gen", "segment", "-o", str(seg)]) == 0
    assert main(["gen", "product", str(seg), str(seg), "-o", str(out)]) == 0
    P = load_polytope(out)
    assert (P.dim, P.num_facets, len(P.vertices)) == (2, 4, 4)


def test_check_finds_bad_faces_and_exits_2(simplex_flow, capsys):
    _, poly, cmap = simplex_flow
    assert main(["check", str(poly), str(cmap)]) == 2
    out = capsys.readouterr().out
    assert "{F0,F1,F4}" in out
    assert main(["check", str(poly), str(cmap), "--format", "json"]) == 2
    data = json.loads(capsys.readouterr().out)
    assert data == [
        {"face": [0, 1, 4], "circuit_size": 3, "witness_vertex": [0, 1, 2, 4]}
    ]


def test_resolve_then_check_clean(simplex_flow, capsys):
    tmp, poly, cmap = simplex_flow
    rpoly, rmap, trace = tmp / "r.json", tmp / "rm.json", tmp / "t.json"
    assert main([
        "resolve", str(poly), str(cmap),
        "-o", str(rpoly), str(rmap), "--trace", str(trace),
    ]) == 0
    assert main(["check", str(rpoly), str(rmap)]) == 0
    out = capsys.readouterr().out
    assert "non-singular at every vertex" in out
    report = load_report(trace)
    assert report.terminated == "success"
    assert load_polytope(rpoly) == report.final_polytope
    assert load_charmap(rmap) == report.final_map


def test_fvector_output(simplex_flow, capsys):
    _, poly, _ = simplex_flow
    assert main(["fvector", str(poly)]) == 0
    out = capsys.readouterr().out
    assert "f = [5, 10, 10, 5]" in out
    assert main(["fvector", str(poly), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["f_vector"] == [5, 10, 10, 5]
    assert data["euler_consistent"] is True


def test_chromatic_command(simplex_flow, capsys):
    _, poly, _ = simplex_flow
    assert main(["chromatic", str(poly), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["chi"] == 5
    assert data["status"] == "exact"


def test_chromatic_bounds_only_exits_2(tmp_path, capsys):
    poly = tmp_path / "pent.json"
    main(["gen", "dual-cyclic", "--dim", "2", "--facets", "5", "-o", str(poly)])
    assert main(["chromatic", str(poly), "--time-budget", "0"]) == 2


def test_lift_check(simplex_flow, capsys):
    tmp, poly, cmap = simplex_flow
    # the unresolved identity-first simplex has a singular vertex: det 0 there
    assert main(["lift-check", str(poly), str(cmap), "--format", "json"]) == 2
    data = json.loads(capsys.readouterr().out)
    assert data["all_unimodular"] is False
    rpoly, rmap = tmp / "r.json", tmp / "rm.json"
    main(["resolve", str(poly), str(cmap), "-o", str(rpoly), str(rmap)])
    capsys.readouterr()
    code = main(["lift-check", str(rpoly), str(rmap), "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert data["all_odd"] is True
    assert code in (0, 2)  # unimodularity of the naive lift is reported, not promised


def test_reproduce_main2(capsys):
    assert main(["reproduce", "main2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["chi"] == 8
    assert data["oriented"] is True
    assert data["ok"] is True


def test_reproduce_writes_summary(tmp_path, capsys):
    out = tmp_path / "summary.json"
    assert main(["reproduce", "main2", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["chi"] == 8


def test_usage_and_io_errors_exit_1(tmp_path, capsys):
    assert main(["frobnicate"]) == 1
    assert main(["gen", "dual-cyclic", "--dim", "4", "--facets", "4",
                 "-o", str(tmp_path / "x.json")]) == 1
    assert main(["fvector", str(tmp_path / "missing.json")]) == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert main(["fvector", str(bad)]) == 1


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
