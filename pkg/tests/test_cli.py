import json
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "conelab"]


def run(*args, expect=0):
    proc = subprocess.run(
        CMD + list(args), capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == expect, proc.stderr
    return proc


def out_json(*args):
    return json.loads(run(*args).stdout)


def test_catalog_lists_builtins():
    doc = out_json("catalog")
    assert "U" in doc["lattices"] and "K3" in doc["lattices"]


def test_signature_matches_documented_shape():
    assert out_json("signature", "--lattice", "K3") == {
        "pos": 1, "neg": 21, "zero": 0,
    }
    assert out_json("signature", "--lattice", "U") == {
        "pos": 1, "neg": 1, "zero": 0,
    }


def test_pair_value():
    doc = out_json(
        "pair", "--lattice", "U+<-2>", "--x", "1,1,-1", "--y", "3,2,1"
    )
    assert doc["value"] == 7


def test_quad_value():
    doc = out_json("quad", "--lattice", "U+<-2>", "--x", "3,2,1")
    assert doc["value"] == 10


def test_walls_box():
    doc = out_json("walls", "--lattice", "U", "--bound", "1")
    assert doc["count"] == 2
    assert doc["vectors"] == [[-1, 1], [1, -1]]


def test_separating_pinned():
    doc = out_json(
        "separating", "--lattice", "U+<-2>", "--x=1,1,-1", "--h", "3,2,1"
    )
    assert doc["walls"] == [[0, 0, -1], [0, 1, -1], [1, 0, -1]]
    assert doc["nef"] is False


def test_isotropic_find_and_lines():
    doc = out_json("isotropic", "--lattice", "diag(1,-3)", "--bound", "100")
    assert doc["vector"] is None
    doc = out_json("isotropic", "--lattice", "U", "--bound", "2", "--lines")
    assert doc["lines"] == [[0, 1], [1, 0]]


def test_cusps_single_orbit():
    doc = out_json(
        "cusps", "--lattice", "U", "--iso-bound", "1", "--wall-bound", "1",
        "--depth", "4",
    )
    assert len(doc["orbits"]) == 1
    assert doc["upper_bound_only"] is True
    assert doc["orbits"][0]["members"] == [[0, 1], [1, 0]]


def test_nef_walk_pinned():
    doc = out_json(
        "nef-walk", "--lattice", "U+<-2>", "--x=1,1,-1", "--h", "3,2,1"
    )
    assert doc["final"] == [1, 0, 0]
    assert [s["pairing"] for s in doc["steps"]] == [2]


def test_chambers_counts():
    doc = out_json(
        "chambers", "--lattice", "<2>+<-2>", "--h0", "2,1", "--radius", "1.5"
    )
    assert len(doc["nodes"]) == 2
    assert len(doc["edges"]) == 1


def test_render_svg(tmp_path):
    out = tmp_path / "walls.svg"
    doc = out_json(
        "render", "--lattice", "U+<-2>", "--out", str(out),
        "--wall", "0,0,1", "--wall=1,0,-1", "--wall=0,1,-1",
    )
    assert doc["walls"] == 3
    svg = out.read_text(encoding="utf-8")
    assert svg.count('class="geodesic"') == 3


def test_lattice_from_file(tmp_path):
    p = tmp_path / "lat.json"
    p.write_text(json.dumps({"name": "mine", "gram": [[0, 1], [1, 0]]}))
    doc = out_json("signature", "--lattice", str(p))
    assert doc == {"pos": 1, "neg": 1, "zero": 0}


def test_validation_errors_exit_2():
    proc = run("signature", "--lattice", "nosuch", expect=2)
    assert "nosuch" in proc.stderr
    run("nef-walk", "--lattice", "U+<-2>", "--x", "1,1,0", "--h", "3,2,1",
        expect=2)  # non-isotropic x
    run(expect=2)  # no subcommand


def test_byte_determinism_across_invocations():
    for args in (
        ("nef-walk", "--lattice", "U+<-2>", "--x=1,1,-1", "--h", "3,2,1"),
        ("cusps", "--lattice", "U", "--iso-bound", "1", "--wall-bound", "1",
         "--depth", "4"),
        ("separating", "--lattice", "U+<-2>", "--x=1,1,-1", "--h", "3,2,1"),
    ):
        assert run(*args).stdout == run(*args).stdout
