import xml.etree.ElementTree as ET

import pytest

from braidword.braids import parse_braid, process_word_geometric
from braidword.errors import PathValidationError
from braidword.paths import Link, PathList, parse_gbase, parse_path, standard_gbase
from braidword.render import render_svg

SVG = "{http://www.w3.org/2000/svg}"


def test_standard_gbase_figure():
    svg = render_svg(standard_gbase(4).paths, 4)
    root = ET.fromstring(svg)
    polylines = root.findall(f"{SVG}polyline")
    assert len(polylines) == 4
    # straight drops: base point and terminal only
    assert all(len(p.get("points").split()) == 2 for p in polylines)
    assert [t.text for t in root.findall(f"{SVG}text")] == ["1", "2", "3", "4", "u"]


def test_single_path_figure():
    svg = render_svg((parse_path("(-1,0),(3,1),(2,0)", 3),), 3)
    root = ET.fromstring(svg)
    (polyline,) = root.findall(f"{SVG}polyline")
    xs_ys = [tuple(float(v) for v in point.split(",")) for point in polyline.get("points").split()]
    assert len(xs_ys) == 3
    # above point 3, then onto point 2 on the axis
    assert xs_ys[1][0] > xs_ys[2][0]
    assert xs_ys[1][1] < xs_ys[2][1]


def test_winding_gets_a_side_waypoint():
    svg = render_svg((parse_path("(-1,0),(2,1),(2,-1),(1,0)", 2),), 2)
    (polyline,) = ET.fromstring(svg).findall(f"{SVG}polyline")
    assert len(polyline.get("points").split()) == 5


def test_gbase_figure_has_one_curve_per_path():
    gbase = process_word_geometric(parse_braid("1 -2 1", 3))
    root = ET.fromstring(render_svg(gbase.paths, 3))
    assert len(root.findall(f"{SVG}polyline")) == 3


def test_four_strand_example_figure():
    gbase = parse_gbase("(-1,0),(1,1),(2,0),(-1,0),(1,0),(-1,0),(4,0),(-1,0),(4,1),(3,0),(-1,0)", 4)
    root = ET.fromstring(render_svg(gbase.paths, 4))
    polylines = root.findall(f"{SVG}polyline")
    assert [len(p.get("points").split()) for p in polylines] == [3, 2, 2, 3]
    assert len({p.get("stroke") for p in polylines}) == 4
    assert [t.text for t in root.findall(f"{SVG}text")] == ["1", "2", "3", "4", "u"]


def test_render_rejects_invalid_paths():
    with pytest.raises(PathValidationError):
        render_svg((PathList((Link(2, 1), Link(1, 0)), 2),), 2)
