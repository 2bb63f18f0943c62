import pytest

from tetraposet import (
    Color,
    admissibility_violations,
    all_admissible_sets,
    format_colors,
    is_admissible,
    parse_colors,
    require_admissible,
    sort_colors,
)


def test_admissible_census_by_size():
    sets = all_admissible_sets()
    assert len(sets) == 40
    by_size = {}
    for s in sets:
        by_size[len(s)] = by_size.get(len(s), 0) + 1
    assert by_size == {0: 1, 1: 6, 2: 11, 3: 11, 4: 7, 5: 3, 6: 1}


def test_admissible_census_is_sorted_and_unique():
    sets = all_admissible_sets()
    keys = [(len(s), format_colors(s)) for s in sets]
    assert keys == sorted(keys)
    assert len(set(sets)) == len(sets)


def test_specific_memberships():
    assert is_admissible("rbg")
    assert is_admissible("bgs")
    assert is_admissible("rgy")
    assert is_admissible("")
    assert not is_admissible("rb")
    assert not is_admissible("rbs")
    assert not is_admissible("rbgos")
    five = [s for s in all_admissible_sets() if len(s) == 5]
    assert sorted(format_colors(s) for s in five) == ["bgoys", "rbgoy", "rbgys"]


def test_violation_messages():
    assert admissibility_violations("rb") == ["{rb} requires g"]
    assert admissibility_violations("os") == ["{os} requires b"]
    assert admissibility_violations("sy") == ["{ys} requires g"]
    assert admissibility_violations("ro") == ["{ro} requires y"]
    assert set(admissibility_violations("rbos")) == {
        "{rb} requires g",
        "{ro} requires y",
    }
    assert admissibility_violations("osy") == ["{os} requires b", "{ys} requires g"]


def test_parse_and_format():
    assert parse_colors("gybo") == frozenset(
        {Color.GREEN, Color.YELLOW, Color.BLUE, Color.ORANGE}
    )
    assert format_colors(parse_colors("gybo")) == "bgoy"
    assert format_colors(Color) == "rbgoys"
    assert sort_colors([Color.SILVER, Color.RED]) == (Color.RED, Color.SILVER)


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError, match="unknown color"):
        parse_colors("gx")
    with pytest.raises(ValueError, match="repeated color"):
        parse_colors("gg")
    with pytest.raises(ValueError, match="not a Color"):
        parse_colors([Color.RED, "g"])


def test_require_admissible_names_the_rule():
    with pytest.raises(ValueError, match=r"\{rb\} requires g"):
        require_admissible("rb")
    assert require_admissible("rbg") == frozenset(
        {Color.RED, Color.BLUE, Color.GREEN}
    )
