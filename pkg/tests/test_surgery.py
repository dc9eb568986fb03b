import random

import pytest
from hypothesis import given, settings, strategies as st

from primtree.errors import EmptyPattern, PreconditionLoops
from primtree.surgery import (IntersectionPattern, Loop, arc_sides, innermost_loop,
                              outermost_arc_avoiding, pattern_from_dict, pattern_report,
                              pattern_to_dict, random_pattern, reduce_step, reduce_to_disjoint)


def pattern(boundary, arcs=(), loops=()):
    return IntersectionPattern(tuple(boundary), "z", tuple(enumerate(arcs)), tuple(loops))


def crosses(P, a, b):
    """Two chords cross iff exactly one end of one lies strictly inside the other."""
    pos = {x: i for i, x in enumerate(P.boundary)}
    i, j = sorted(pos[x] for x in P.arc_map[a])
    inside = [i < pos[x] < j for x in P.arc_map[b]]
    return inside[0] != inside[1]


def ancestors(P, lid):
    loops, out = P.loop_map, set()
    while loops[lid].parent is not None:
        lid = loops[lid].parent
        out.add(lid)
    return out


def test_innermost_of_nested_pair():
    P = pattern(["z"], loops=[Loop("A", None, "z"), Loop("B", "A")])
    assert innermost_loop(P) == "B"


def test_no_loops():
    assert innermost_loop(pattern(["z", 0, 1], [(0, 1)])) is None


def test_innermost_of_random_forest_is_a_leaf():
    rng = random.Random(5)
    for _ in range(50):
        loops = []
        for i in range(30):
            parent = rng.choice(loops).id if loops and rng.random() < 0.7 else None
            loops.append(Loop(i, parent, None if parent is not None else "z"))
        P = pattern(["z"], loops=loops)
        lid = innermost_loop(P)
        assert all(lid not in ancestors(P, lp.id) for lp in P.loops)


def test_single_chord():
    P = pattern(["z", 0, 1], [(0, 1)])
    assert outermost_arc_avoiding(P) == 0
    trace = reduce_to_disjoint(P)
    assert trace[0].region == () and "z" not in trace[0].region


def test_nested_chords_pick_inner():
    P = pattern(["z", 0, 1, 2, 3], [(0, 3), (1, 2)])
    assert outermost_arc_avoiding(P) == 1


def test_arc_with_loops_raises():
    P = pattern(["z", 0, 1], [(0, 1)], [Loop("A", None, 0)])
    with pytest.raises(PreconditionLoops):
        outermost_arc_avoiding(P)


def test_empty_pattern():
    with pytest.raises(EmptyPattern):
        reduce_step(pattern(["z"]))
    assert reduce_to_disjoint(pattern(["z"])) == []


def test_one_component_patterns():
    assert reduce_step(pattern(["z"], loops=[Loop("A", None, "z")])).components() == 0
    assert reduce_step(pattern(["z", 0, 1], [(0, 1)])).components() == 0


def test_ten_loops_ten_arcs():
    rng = random.Random(1)
    for _ in range(20):
        P = random_pattern(rng, 50)
        if len(P.arcs) == 10 and len(P.loops) == 10:
            break
    else:
        boundary = ["z"] + list(range(20))
        P = pattern(boundary, [(2 * i, 2 * i + 1) for i in range(10)],
                    [Loop(f"L{i}", None, "z") for i in range(10)])
    after = reduce_step(P)
    assert after.components() == 19 and len(after.loops) == 9
    kinds = [s.kind for s in reduce_to_disjoint(P)]
    assert kinds == ["loop"] * 10 + ["arc"] * 10


def test_three_nested_loops():
    P = pattern(["z"], loops=[Loop("A", None, "z"), Loop("B", "A"), Loop("C", "B")])
    trace = reduce_to_disjoint(P)
    assert [(s.kind, s.component) for s in trace] == [("loop", "C"), ("loop", "B"), ("loop", "A")]


def test_report_flags_crossing_and_bad_loops():
    P = pattern(["z", 0, 1, 2, 3], [(0, 2), (1, 3)])
    assert any("crosses" in m for m in pattern_report(P))
    P = pattern(["z"], loops=[Loop("A", "B"), Loop("B", "A")])
    assert any("cycle" in m for m in pattern_report(P))
    assert any("marked" in m for m in pattern_report(pattern(["z", 0, 1], [(0, "z")])))


def test_round_trip():
    P = random_pattern(random.Random(3), 30)
    assert pattern_from_dict(pattern_to_dict(P)) == P


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_reduction_properties(seed):
    P = random_pattern(random.Random(seed), 50)
    assert pattern_report(P) == []
    arcs = [a for a, _ in P.arcs]
    assert not any(crosses(P, a, b) for a in arcs for b in arcs if a != b)
    trace = reduce_to_disjoint(P)
    assert len(trace) == P.components()
    assert (trace[-1].after if trace else P).components() == 0
    kinds = [s.kind for s in trace]
    assert kinds == sorted(kinds, key=lambda k: k == "arc")
    prev = P
    for s in trace:
        Q = s.after
        assert pattern_report(Q) == [] and Q.components() == prev.components() - 1
        if s.kind == "loop":
            lid = s.component
            assert all(lid not in ancestors(prev, lp.id) for lp in prev.loops)
        else:
            # the removed side holds neither z nor an endpoint of another arc
            assert "z" not in s.region and not s.region
            assert s.region in arc_sides(prev, s.component)
        prev = Q
