import pytest

from isoring.errors import InvalidPermutation, NotAGroup
from isoring.poly import parse
from isoring.polya import (
    CycleIndicator,
    PermGroup,
    count_colorings,
    cycle_indicator,
    cycle_type,
    parse_cycles,
    parse_multiset,
    pattern_count,
    pattern_inventory,
)

from oracles import count_orbits, count_orbits_with_content, cube_vertex_group


def test_cycle_type():
    assert cycle_type((1, 2, 3, 0)) == (4,)
    assert cycle_type((1, 0, 3, 2)) == (2, 2)
    assert cycle_type((0, 1, 2)) == (1, 1, 1)
    with pytest.raises(InvalidPermutation):
        cycle_type((0, 0, 1))


def test_parse_cycles():
    assert parse_cycles("(1 2 3 4)") == (1, 2, 3, 0)
    assert parse_cycles("(1 3)(2 4)") == (2, 3, 0, 1)
    assert parse_cycles("(1 2)", degree=3) == (1, 0, 2)
    with pytest.raises(InvalidPermutation):
        parse_cycles("(1 2)(2 3)")


def test_square_indicator():
    ci = cycle_indicator(PermGroup.dihedral(4))
    assert ci.order == 8
    assert ci.in_t() == parse("t1^4 + 2*t1^2*t2 + 3*t2^2 + 2*t4")
    assert ci.polynomial == parse("1/8*G1^4 + 1/4*G1^2*G2 + 3/8*G2^2 + 1/4*G4")
    assert CycleIndicator.from_json(ci.to_json()) == ci


def test_square_colourings():
    assert count_colorings(PermGroup.dihedral(4), 2) == 6
    assert count_colorings(PermGroup.dihedral(4), 3) == 21
    assert count_colorings(PermGroup.cyclic(3), 2) == 4


def test_square_patterns():
    square = PermGroup.dihedral(4)
    assert pattern_count(square, {"x": 2, "y": 2}) == 2
    assert pattern_count(square, {"x": 3, "y": 1}) == 1
    inv = pattern_inventory(square, ["x", "y"])
    assert inv == parse("x1^4 + x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3 + x2^4")


def test_generated_group_from_cycles():
    g = PermGroup.from_cycles("(1 2 3 4);(1 3)")
    assert g.order == 8
    assert cycle_indicator(g).class_counts == cycle_indicator(PermGroup.dihedral(4)).class_counts


def test_group_validation():
    with pytest.raises(NotAGroup):
        PermGroup([(1, 2, 0)])
    with pytest.raises(NotAGroup):
        PermGroup([(0, 1, 2), (1, 0, 2), (0, 2, 1)])
    with pytest.raises(ValueError):
        PermGroup.parse("hexagon:4")


def groups():
    yield "trivial:3", PermGroup.trivial(3)
    for n in range(2, 9):
        yield f"cyclic:{n}", PermGroup.cyclic(n)
    for n in range(3, 9):
        yield f"dihedral:{n}", PermGroup.dihedral(n)
    for n in range(2, 5):
        yield f"symmetric:{n}", PermGroup.symmetric(n)
    yield "cube", PermGroup(cube_vertex_group())


@pytest.mark.parametrize("name,group", list(groups()), ids=[g[0] for g in groups()])
def test_colourings_match_brute_force(name, group):
    for m in range(1, 4):
        assert count_colorings(group, m) == count_orbits(group.elements, group.degree, m)


def test_pattern_count_matches_brute_force():
    for group in [PermGroup.dihedral(6), PermGroup(cube_vertex_group())]:
        n = group.degree
        for a in range(n + 1):
            content = (a, n - a)
            assert pattern_count(group, {"x": a, "y": n - a}) == count_orbits_with_content(group.elements, content)


def test_parse_multiset():
    assert parse_multiset("x:2,y:2") == {"x": 2, "y": 2}
    with pytest.raises(ValueError):
        parse_multiset("x2")
    with pytest.raises(ValueError):
        pattern_count(PermGroup.dihedral(4), {"x": 3})
