import time

import pytest

from polychrome.charmap import CharMap, preset, segment_map, stack
from polychrome.generators import dual_cyclic, product, segment
from polychrome.pipelines import reproduce
from polychrome.polytope import truncate_face


@pytest.fixture(scope="session")
def main_run():
    """(ReproduceResult, wall seconds) for the 15-facet 4-dimensional target."""
    t0 = time.perf_counter()
    result = reproduce("main")
    return result, time.perf_counter() - t0


@pytest.fixture(scope="session")
def main2_run():
    t0 = time.perf_counter()
    result = reproduce("main2")
    return result, time.perf_counter() - t0


@pytest.fixture(scope="session")
def main3_run():
    t0 = time.perf_counter()
    result = reproduce("main3")
    return result, time.perf_counter() - t0


@pytest.fixture(scope="session")
def corpus(main_run, main2_run, main3_run):
    """Every generated or surgered polytope the property suites run over."""
    seg = segment()
    square = product(seg, seg)
    cube = product(square, seg)
    pentagon = dual_cyclic(2, 5)
    simplex4 = dual_cyclic(4, 5)
    items = [
        ("segment", seg),
        ("square", square),
        ("cube", cube),
        ("tesseract", product(cube, seg)),
        ("pentagon", pentagon),
        ("hexagon", dual_cyclic(2, 6)),
        ("dc(3,5)", dual_cyclic(3, 5)),
        ("dc(3,6)", dual_cyclic(3, 6)),
        ("dc(3,7)", dual_cyclic(3, 7)),
        ("dc(4,5)", simplex4),
        ("dc(4,6)", dual_cyclic(4, 6)),
        ("dc(4,7)", dual_cyclic(4, 7)),
        ("dc(4,8)", dual_cyclic(4, 8)),
        ("dc(4,9)", dual_cyclic(4, 9)),
        ("dc(4,15)", dual_cyclic(4, 15)),
        ("dc(5,6)", dual_cyclic(5, 6)),
        ("dc(5,7)", dual_cyclic(5, 7)),
        ("dc(5,16)", dual_cyclic(5, 16)),
        ("pentagonal-prism", product(pentagon, seg)),
        ("pentagon-x-pentagon", product(pentagon, pentagon)),
        ("simplex-trunc-vertex", truncate_face(simplex4, (0, 1, 2, 3))[0]),
        ("simplex-trunc-edge", truncate_face(simplex4, (0, 1, 2))[0]),
        ("simplex-trunc-ridge", truncate_face(simplex4, (0, 1))[0]),
        ("cube-trunc-vertex", truncate_face(cube, cube.vertices[0])[0]),
        ("resolved-main", main_run[0].polytope),
        ("resolved-main2", main2_run[0].polytope),
        ("resolved-main3", main3_run[0].polytope),
        ("resolved-main-x-segment", product(main_run[0].polytope, seg)),
    ]
    return items


@pytest.fixture(scope="session")
def decorated(main2_run):
    """(name, polytope, map) pairs for bad-face oracle cross-checks."""
    seg_sq = product(segment(), segment())
    items = [
        ("dc(4,15)+paper-example", dual_cyclic(4, 15), preset("paper-example", dual_cyclic(4, 15))),
        ("dc(4,8)+odd-bijection", dual_cyclic(4, 8), preset("odd-bijection", dual_cyclic(4, 8))),
        ("square+stacked-segments", seg_sq, stack(segment_map(), segment_map())),
        ("resolved-main2", main2_run[0].polytope, main2_run[0].charmap),
    ]
    for m in (5, 6, 7):
        P = dual_cyclic(4, m)
        items.append((f"dc(4,{m})+identity-first", P, preset("identity-first", P)))
    for m in (5, 6):
        P = dual_cyclic(3, m)
        items.append((f"dc(3,{m})+identity-first", P, preset("identity-first", P)))
    # a deliberately dependent decoration: many circuits to cross-check
    P = dual_cyclic(4, 6)
    items.append(("dc(4,6)+dependent", P, CharMap(4, (1, 2, 3, 4, 5, 6))))
    return items
