import json

import pytest

from tangleforge.corpus import poincare, running_example
from tangleforge.diagram import (Component, Dash, Diagram, component_census, from_json,
                                 homology_matrix, is_cut_system, read_off, to_json)
from tangleforge.realize import realize
from tangleforge.surface import SurfaceSignature
from tangleforge.words import EMPTY, Word, a, b, h


def single_curve_diagram():
    sig = SurfaceSignature(1, 0)
    return Diagram(sig, (Component(1, "closed", h(1)),), (Dash("a1", 0, h(1), 1, 1),), (), (), ())


def test_read_off_single_dash():
    phi = read_off(single_curve_diagram())
    assert phi[a(1)] == Word.parse("h1") and phi[b(1)] == EMPTY


def test_read_off_empty():
    phi = read_off(Diagram(SurfaceSignature(0, 0), (), (), (), (), ()))
    assert phi.images == {} or all(not w for w in phi.images.values())


def test_read_off_rejects_mislabeled_dash():
    d = single_curve_diagram()
    bad = Diagram(d.sig, d.components, (Dash("a1", 0, h(2), 1, 1),), (), (), ())
    with pytest.raises(ValueError):
        read_off(bad)


def test_component_validation():
    with pytest.raises(ValueError):
        Component(1, "arc", h(1))
    with pytest.raises(ValueError):
        Component(1, "loop", h(1))


def test_homology_rows():
    assert homology_matrix(single_curve_diagram()) == [[0, 1]]
    d = realize(poincare()).diagram
    # columns are (b1, a1, b2, a2) crossings, i.e. exponent sums of the images
    assert homology_matrix(d) == [[3, -1, 0, 5], [5, 0, 1, 8]]
    assert is_cut_system(d)


def test_rank_deficient_toy():
    sig = SurfaceSignature(1, 0)
    d = Diagram(sig, (Component(1, "closed", h(1)),), (), (), (), ())
    assert homology_matrix(d) == [[0, 0]]
    assert not is_cut_system(d)


def test_running_example_homology():
    d = realize(running_example()).diagram
    assert homology_matrix(d) == [[1, 1]]
    assert is_cut_system(d)


def test_census():
    res = realize(running_example())
    final = component_census(res.diagram)
    assert final.closed == {"h1": 1}
    assert final.arcs == {"t1": 1, "t2": 1}
    assert final.endpoints == {"t1": [(1, 3)], "t2": [(2, 4)]}
    assert component_census(Diagram(SurfaceSignature(0, 0), (), (), (), (), ())).closed_total == 0


def test_json_round_trip():
    for phi in (running_example(), poincare()):
        d = realize(phi).diagram
        text = json.dumps(to_json(d))
        assert from_json(text) == d
        assert from_json(to_json(d)) == d


def test_json_schema_keys():
    data = to_json(realize(running_example()).diagram)
    assert {"genus", "bridges", "components", "dashes", "bands"} <= set(data)
    assert set(data["dashes"][0]) == {"owner", "pos", "letter", "sign", "component"}
    assert set(data["bands"][0]) == {"from", "to", "result", "case"}


def test_json_rejects_bad_owner():
    data = to_json(single_curve_diagram())
    data["dashes"][0]["owner"] = "a2"
    with pytest.raises(ValueError):
        from_json(data)
    with pytest.raises(ValueError):
        from_json({"genus": 1})
