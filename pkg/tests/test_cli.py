import json

import pytest

from tangleforge.cli import main, run


def report(argv):
    code, text = run([str(x) for x in argv])
    return code, json.loads(text)


def test_verify_running_example(fixtures_dir):
    code, rep = report(["verify", fixtures_dir / "rp2cp2.hom"])
    assert code == 0 and rep["status"] == "ok"
    p = rep["payload"]
    assert p["surjective"] and p["cond1"] and p["cond2"]
    assert p["f"] == {"p1": "t1", "p2": "t2", "p3": "t1^-1", "p4": "t2^-1"}


def test_roundtrip(fixtures_dir):
    code, rep = report(["roundtrip", fixtures_dir / "rp2cp2.hom"])
    assert code == 0 and rep["payload"]["checks"]["readOffMatches"]


def test_invariants_rp2(fixtures_dir):
    code, rep = report(["invariants", fixtures_dir / "rp2_minus.tuple"])
    p = rep["payload"]
    assert code == 0
    assert p["linkComponents"] == {"1,2": 1, "2,3": 1, "3,1": 1}
    assert p["eulerCharacteristic"] == 1 and p["spherical"] is False
    assert p["tuplePushoutAbelianization"]["text"] == "Z/2"


def test_realize_readoff_render(fixtures_dir, tmp_path):
    diagram, svg, back = tmp_path / "d.json", tmp_path / "d.svg", tmp_path / "back.hom"
    code, rep = report(["realize", fixtures_dir / "rp2cp2.hom", "--out", diagram, "--svg", svg])
    assert code == 0 and rep["payload"]["trace"]["bandCount"] == 1
    assert json.loads(diagram.read_text())["genus"] == 1
    assert svg.read_text().startswith("<svg")
    code, rep = report(["readoff", diagram, "--out", back])
    assert code == 0
    assert back.read_text() == (fixtures_dir / "rp2cp2.hom").read_text()
    out = tmp_path / "e.svg"
    code, rep = report(["render", diagram, "--svg", out])
    assert code == 0 and rep["payload"]["bands"] == 1 and out.exists()


def test_fold(fixtures_dir, tmp_path):
    code, rep = report(["fold", fixtures_dir / "poincare.hom", "--seed", 7])
    assert code == 0 and rep["payload"]["rose"] and rep["payload"]["randomOrderAgrees"]
    words = tmp_path / "w.words"
    words.write_text("h1 h2 h1^-1\n")
    code, rep = report(["fold", words])
    assert code == 1 and rep["status"] == "fail"


def test_pushout(fixtures_dir):
    code, rep = report(["pushout", fixtures_dir / "rp2_plus.tuple", "--pair", "1,2"])
    p = rep["payload"]
    assert code == 0 and p["simplified"]["relators"] == [] and len(p["simplified"]["generators"]) == 1
    code, rep = report(["pushout", fixtures_dir / "rp2_plus.tuple", "--pair", "1,4"])
    assert code == 2


def test_move_kinds(fixtures_dir, tmp_path):
    out = tmp_path / "moved.tuple"
    code, rep = report(["move", fixtures_dir / "rp2_minus.tuple", "--kind", "sb1", "--out", out])
    assert code == 0 and rep["payload"]["bridges"] == 3
    code, rep = report(["verify", out])
    assert code == 0
    code, rep = report(["move", fixtures_dir / "genus_three.tuple", "--kind", "c"])
    assert code == 0
    code, rep = report(["move", fixtures_dir / "poincare.tuple", "--kind", "s"])
    assert code == 0 and rep["payload"]["genus"] == 3
    code, rep = report(["move", fixtures_dir / "poincare.tuple", "--kind", "h"])
    assert code == 2


def test_move_with_automorphism_file(fixtures_dir, tmp_path):
    aut = tmp_path / "swap.aut"
    aut.write_text("h1 -> h2\nh2 -> h1\n[inverse]\nh1 -> h2\nh2 -> h1\n")
    code, rep = report(["move", fixtures_dir / "poincare.tuple", aut, "--kind", "h", "--side", "2"])
    assert code == 0
    flip = tmp_path / "flip.aut"
    flip.write_text("a1 -> b1\nb1 -> a1\n[inverse]\na1 -> b1\nb1 -> a1\n")
    code, rep = report(["move", fixtures_dir / "poincare.tuple", flip, "--kind", "m"])
    assert code == 3 and rep["status"] == "unknown"


def test_exit_codes_for_bad_input(tmp_path):
    bad = tmp_path / "bad.hom"
    bad.write_text("genus = 0\nbridges = 1\np1 => t1\n")
    code, rep = report(["verify", bad])
    assert code == 2 and "line 3" in rep["diagnostics"][0]
    code, rep = report(["verify", tmp_path / "missing.hom"])
    assert code == 2
    ill = tmp_path / "ill.hom"
    ill.write_text("genus = 0\nbridges = 1\np1 -> t1\np2 -> t1\n")
    code, rep = report(["verify", ill])
    assert code == 1 and rep["payload"]["wellDefined"] is False
    with pytest.raises(SystemExit) as info:
        run(["frobnicate", "x"])
    assert info.value.code == 2


def test_budget_zero_is_unknown(fixtures_dir):
    code, rep = report(["verify", fixtures_dir / "rp2_minus.tuple", "--budget", "0"])
    assert code == 3 and rep["status"] == "unknown"


def test_output_is_deterministic(fixtures_dir, capsys):
    main(["realize", str(fixtures_dir / "rp2cp2.hom")])
    first = capsys.readouterr().out
    main(["realize", str(fixtures_dir / "rp2cp2.hom")])
    assert capsys.readouterr().out == first
