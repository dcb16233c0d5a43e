import random
import xml.etree.ElementTree as ET

import pytest

from prefixnormal import (RegionProfile, build_index, build_pnf_a,
                          build_pnf_b, query, region, region_csv, render_svg,
                          word_path)

from _oracles import random_word, words_up_to

EXAMPLE_WORD = "ababbaabaabbbaaabbab"


def test_word_path_examples():
    assert word_path("") == [(0, 0)]
    assert word_path("ab") == [(0, 0), (1, 1), (2, 0)]
    assert word_path("aab") == [(0, 0), (1, 1), (2, 2), (3, 1)]


def test_region_examples():
    reg = region(EXAMPLE_WORD)
    assert reg.upper[5] == 2 * 4 - 5 == 3
    assert reg.lower[5] == 2 * 2 - 5 == -1
    reg = region("aaaa")
    assert reg.upper == reg.lower == (0, 1, 2, 3, 4)
    reg = region("ab")
    assert reg.upper == (0, 1, 0)
    assert reg.lower == (0, -1, 0)


def test_region_validation():
    with pytest.raises(ValueError):
        RegionProfile(upper=(0, 2), lower=(0, -1))
    with pytest.raises(ValueError):
        RegionProfile(upper=(0, -1), lower=(0, 1))
    with pytest.raises(ValueError):
        RegionProfile(upper=(1, 0), lower=(1, 0))
    with pytest.raises(ValueError):
        RegionProfile(upper=(0, 1), lower=(0,))


def test_membership_matches_queries():
    for w in words_up_to(10):
        reg = region(w)
        ix = build_index(w)
        for x in range(len(w) + 1):
            for y in range(-x - 1, x + 2):
                inside = reg.contains(x, y)
                if (x - y) % 2:
                    assert not inside
                    continue
                assert inside == query(ix, ((x + y) // 2, (x - y) // 2))


def test_parikh_at():
    reg = region("aabb")
    assert reg.parikh_at(3, 1) == (2, 1)
    with pytest.raises(ValueError):
        reg.parikh_at(3, 0)


def test_boundaries_are_normal_form_paths():
    rng = random.Random(2501)
    words = list(words_up_to(8)) + [
        random_word(rng, rng.randint(0, 120)) for _ in range(40)]
    for w in words:
        reg = region(w)
        assert list(reg.upper) == [y for _, y in word_path(build_pnf_a(w))]
        assert list(reg.lower) == [y for _, y in word_path(build_pnf_b(w))]


def test_suffix_paths_stay_inside_region():
    for w in words_up_to(9):
        reg = region(w)
        for start in range(len(w) + 1):
            for x, y in word_path(w[start:]):
                assert reg.lower[x] <= y <= reg.upper[x]


def test_csv_output():
    csv = region_csv("ab")
    assert csv == ("k,upper_y,lower_y,F_a,f_a\n"
                   "0,0,0,0,0\n"
                   "1,1,-1,1,0\n"
                   "2,0,0,1,1\n")


def test_svg_deterministic_and_well_formed():
    first = render_svg(EXAMPLE_WORD, suffix_paths=True)
    second = render_svg(EXAMPLE_WORD, suffix_paths=True)
    assert first == second
    assert render_svg(EXAMPLE_WORD) == render_svg(EXAMPLE_WORD)
    assert render_svg(EXAMPLE_WORD) != first  # options change the bytes
    root = ET.fromstring(first)
    assert root.tag.endswith("svg")


def test_svg_polygon_vertex_count():
    for w in ("", "a", "ab", "aabbab", EXAMPLE_WORD):
        root = ET.fromstring(render_svg(w))
        polygons = [el for el in root.iter()
                    if el.tag.endswith("polygon")]
        assert len(polygons) == 1
        points = polygons[0].attrib["points"].split()
        assert len(points) == 2 * (len(w) + 1)


def test_svg_empty_word_has_origin_marker():
    root = ET.fromstring(render_svg(""))
    circles = [el for el in root.iter() if el.tag.endswith("circle")]
    assert len(circles) == 1


def test_render_bounds():
    with pytest.raises(ValueError):
        render_svg("ab" * 6000)
    with pytest.raises(ValueError):
        render_svg("ab", unit=0)
