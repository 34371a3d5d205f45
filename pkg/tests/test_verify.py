from fractions import Fraction

import pytest

from mckay_lab import (
    parse_group_spec,
    shape_lengths,
    verify_group,
    verify_reids_recipe_theorem,
    verify_shape_correspondence,
)
from mckay_lab.errors import ShapeUnrecognized

f = Fraction


def test_verify_group_passes_fixtures(p3, p4):
    for pipe, chars in ((p3, 3), (p4, 4)):
        report = verify_group(pipe.group)
        assert report["pass"] is True
        assert len(report["per_character"]) == chars
        assert all(e["pass"] for e in report["per_character"])


def test_verify_trivial_group_is_vacuous(trivial_group):
    report = verify_group(trivial_group)
    assert report["pass"] is True
    assert report["per_character"] == [] and report["per_divisor"] == []


def test_reids_recipe_theorem_wrapper(p4):
    result = verify_reids_recipe_theorem(p4.fan)
    assert result["pass"] is True
    classes = {e["character"]: e["marking_class"] for e in result["per_character"]}
    assert classes == {
        "chi_0": "nothing",
        "chi_1": "curves",
        "chi_2": "curves",
        "chi_3": "divisor",
    }


def test_shape_correspondence_wrapper(p4):
    p_ray = p4.ray((f(1, 4), f(1, 4), f(1, 2)))
    entry = verify_shape_correspondence(p4.fan, p_ray)
    assert entry["pass"] is True
    assert entry["shape"] == "B" and entry["case"] == "case2"
    assert entry["checks"]["valency_matches_divisibility"]


def test_shape_lengths_accessor(p3, p4):
    ss = p3.qa.sink_source_graph(p3.ray((f(1, 3),) * 3))
    assert shape_lengths(ss) == {"a": 1, "b": 1, "c": 1}
    q_ray = p4.ray((f(1, 2), f(1, 2), 0))
    with pytest.raises(ShapeUnrecognized):
        shape_lengths(p4.qa.sink_source_graph(q_ray))


def test_case3_shape_assignment_recorded(p33):
    center = p33.ray((f(1, 3),) * 3)
    entry = verify_shape_correspondence(p33.fan, center)
    assert entry["pass"] is True
    assert entry["shape"] == "C"
    lengths = entry["lengths"]
    assert lengths["a"] == lengths["b"] == lengths["c"] == 2


def test_report_summary_block():
    report = verify_group(parse_group_spec("6:1,2,3"))
    summary = report["summary"]
    assert summary["pass"] is True
    assert summary["characters"] == 6
    assert summary["shape_histogram"] == {"B": 1}
    assert summary["marking_histogram"] == {
        "curve": 2,
        "curves": 2,
        "divisor": 1,
        "nothing": 1,
    }


def test_redundant_generator_presentations_verify():
    # the extra factors already lie in the subgroup generated by the first
    g = parse_group_spec("4:1,1,2+2:1,1,0")
    assert g.order == 4
    assert verify_group(g)["pass"] is True
    g2 = parse_group_spec("3:1,2,0+3:0,1,2+3:1,1,1")
    assert g2.order == 9
    assert verify_group(g2)["pass"] is True


def test_transversal_sl2_type_group():
    """1/5(0,1,4) fixes the x-axis; its junior points all sit on one side of
    the simplex and the classical one-curve-per-character picture appears:
    each nontrivial character marks exactly one compact fiber curve."""
    from mckay_lab import build_fan

    group = parse_group_spec("5:0,1,4")
    report = verify_group(group)
    assert report["pass"] is True
    assert report["interior_divisors"] == 0
    fan = build_fan(group)
    corner_x = next(ri for ri, r in enumerate(fan.rays) if r.coords == (1, 0, 0))
    for entry in report["per_character"]:
        if entry["character"] == "chi_0":
            assert entry["degree"] == -2 and len(entry["components"]) == 4
        else:
            assert entry["marking_class"] == "curve" and entry["degree"] == 0
            ((kind, pair),) = entry["components"]
            assert kind == "curve" and corner_x in pair


def test_rotated_shape_b_coordinates():
    """1/7(1,2,4) has shape-B divisors with axis x and axis y; the coordinate
    formula applies through the rotation's permutation."""
    from mckay_lab import QuiverAnalysis, build_fan

    group = parse_group_spec("7:1,2,4")
    fan = build_fan(group)
    qa = QuiverAnalysis(fan)
    axes = {}
    for ri in fan.exceptional_ray_indices():
        ss = qa.sink_source_graph(ri)
        axes[ss.shape_axis] = (ri, ss.lengths)
    assert set(axes) == {"x", "y", "z"}
    ri, lengths = axes["x"]
    a, b, c = lengths["a"], lengths["b"], lengths["c"]
    o1, o2, axis = lengths["orientations"]
    assert (o1, o2, axis) == ("y", "z", "x")
    assert fan.rays[ri].scaled(7) == (7 - b * c - a * c, b * c, a * c)
    assert verify_shape_correspondence(fan, ri)["pass"]
