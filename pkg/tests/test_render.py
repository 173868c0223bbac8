import xml.etree.ElementTree as ET

import pytest

from conelab import Scene, get_lattice, nef_walk, render_disk
from conelab.errors import InvalidArgument, RankNotThree, UnwritablePath

U = get_lattice("U")
U2 = get_lattice("U+<-2>")

THREE_WALLS = ((0, 0, 1), (1, 0, -1), (0, 1, -1))


def test_rank_gate():
    with pytest.raises(RankNotThree):
        Scene(lattice=U)
    with pytest.raises(RankNotThree):
        Scene(lattice=get_lattice("K3"))


def test_empty_scene_is_just_the_boundary_circle():
    svg = render_disk(Scene(lattice=U2))
    assert svg.count("<circle") == 1
    assert 'class="boundary"' in svg
    assert "<path" not in svg


def test_three_wall_scene_has_three_geodesics_one_diameter():
    svg = render_disk(Scene(lattice=U2, walls=THREE_WALLS))
    assert svg.count('class="geodesic"') == 3
    # (0,0,1) passes through the frame origin: drawn as a 2-point diameter;
    # the other two are arc polylines with many segments
    paths = [ln for ln in svg.splitlines() if 'class="geodesic"' in ln]
    seg_counts = sorted(ln.count(" L ") for ln in paths)
    assert seg_counts[0] == 1
    assert seg_counts[1] > 10 and seg_counts[2] > 10


def test_output_is_byte_deterministic():
    scene = Scene(
        lattice=U2,
        walls=THREE_WALLS,
        points=(("h", (3, 2, 1)),),
        cusps=(("c", (1, 0, 0)),),
        trace=nef_walk(U2, (1, 1, -1), (3, 2, 1)),
    )
    assert render_disk(scene) == render_disk(scene)


def test_output_is_well_formed_xml_with_expected_elements():
    scene = Scene(
        lattice=U2,
        walls=THREE_WALLS,
        points=(("base", (3, 2, 1)),),
        cusps=(("cusp", (1, 0, 0)),),
        trace=nef_walk(U2, (1, 1, -1), (3, 2, 1)),
    )
    svg = render_disk(scene)
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    classes = [el.attrib.get("class") for el in root.iter() if "class" in el.attrib]
    assert classes.count("geodesic") == 3
    assert classes.count("boundary") == 1
    assert classes.count("trace") == 1
    assert classes.count("point") == 1
    assert classes.count("cusp") == 1
    texts = [el.text for el in root.iter(ns + "text")]
    assert "base" in texts and "cusp" in texts


def test_label_escaping():
    svg = render_disk(Scene(lattice=U2, points=(("a<b&c>", (3, 2, 1)),)))
    assert "a&lt;b&amp;c&gt;" in svg
    ET.fromstring(svg)  # still well-formed


def test_file_output(tmp_path):
    p = tmp_path / "scene.svg"
    text = render_disk(Scene(lattice=U2, walls=THREE_WALLS), out=str(p))
    assert p.read_text(encoding="utf-8") == text
    with pytest.raises(UnwritablePath):
        render_disk(Scene(lattice=U2), out=str(tmp_path / "no" / "dir.svg"))


def test_wall_must_be_negative():
    with pytest.raises(InvalidArgument):
        render_disk(Scene(lattice=U2, walls=((1, 1, 0),)))


def test_point_must_be_on_positive_side():
    with pytest.raises(InvalidArgument):
        render_disk(Scene(lattice=U2, points=(("w", (0, 0, 1)),)))
