"""Innermost-loop / outermost-arc reduction of an intersection pattern.

A pattern records how a disk meets its image: arcs are non-crossing chords
between points on the boundary circle, loops are closed curves in the
interior arranged in a nesting forest, and one extra boundary point (the
marked point) must never be cut off by an arc surgery.

Each surgery step removes exactly one component. Loops go first, innermost
first; then arcs, always one that cuts off an empty boundary region on the
side away from the marked point.
"""

from dataclasses import dataclass, field

from .errors import EmptyPattern, PreconditionLoops


def _key(x):
    return (0, x, "") if isinstance(x, int) else (1, 0, str(x))


@dataclass(frozen=True)
class Loop:
    id: object
    parent: object = None
    face: object = None  # boundary point opening the chord face (top-level loops)


@dataclass(frozen=True)
class IntersectionPattern:
    boundary: tuple = ("z",)
    marked: object = "z"
    arcs: tuple = ()  # ((arc_id, (e1, e2)), ...)
    loops: tuple = ()

    @property
    def arc_map(self):
        return dict(self.arcs)

    @property
    def loop_map(self):
        return {lp.id: lp for lp in self.loops}

    def components(self):
        return len(self.arcs) + len(self.loops)

    def children(self, loop_id):
        return [lp.id for lp in self.loops if lp.parent == loop_id]


@dataclass(frozen=True)
class Step:
    kind: str  # "loop" or "arc"
    component: object
    region: tuple  # boundary points strictly inside the cut-off side (arcs)
    after: IntersectionPattern = field(repr=False, compare=False)


def pattern_report(P):
    """Every violated pattern invariant; empty iff ``P`` is valid."""
    report = []
    pos = {}
    for i, x in enumerate(P.boundary):
        if x in pos:
            report.append(f"boundary point {x!r} repeated")
        pos[x] = i
    if P.marked not in pos:
        report.append("marked point missing from boundary")
    used = {}
    for aid, (a, b) in P.arcs:
        for x in (a, b):
            if x == P.marked:
                report.append(f"arc {aid} ends at the marked point")
            elif x not in pos:
                report.append(f"arc {aid}: endpoint {x!r} not on boundary")
            elif x in used:
                report.append(f"point {x!r} used by arcs {used[x]} and {aid}")
            used[x] = aid
        if a == b:
            report.append(f"arc {aid} is degenerate")
    for x in P.boundary:
        if x != P.marked and x not in used:
            report.append(f"boundary point {x!r} is not an arc endpoint")
    if len({aid for aid, _ in P.arcs}) != len(P.arcs):
        report.append("repeated arc id")
    if not report:
        stack = []
        for x in P.boundary:
            if x == P.marked:
                continue
            aid = used[x]
            if stack and stack[-1] == aid:
                stack.pop()
            else:
                if aid in stack:
                    report.append(f"arc {aid} crosses arc {stack[-1]}")
                    break
                stack.append(aid)
    loops = P.loop_map
    if len(loops) != len(P.loops):
        report.append("repeated loop id")
    for lp in P.loops:
        if lp.parent is None:
            if lp.face not in pos:
                report.append(f"loop {lp.id}: face point {lp.face!r} not on boundary")
        elif lp.parent not in loops:
            report.append(f"loop {lp.id}: parent {lp.parent!r} missing")
        seen, x = set(), lp
        while x is not None and x.parent is not None:
            if x.id in seen:
                report.append(f"loop {lp.id}: nesting cycle")
                break
            seen.add(x.id)
            x = loops.get(x.parent)
    return report


def innermost_loop(P):
    leaves = [lp.id for lp in P.loops if not P.children(lp.id)]
    return min(leaves, key=_key) if leaves else None


def arc_sides(P, aid):
    """The two boundary point runs strictly between the ends of arc ``aid``."""
    a, b = P.arc_map[aid]
    i, j = sorted((P.boundary.index(a), P.boundary.index(b)))
    return P.boundary[i + 1:j], P.boundary[j + 1:] + P.boundary[:i]


def _empty_side(P, aid):
    for side in arc_sides(P, aid):
        if not side:
            return side
    return None


def outermost_arc_avoiding(P):
    """Lowest-id arc cutting off an empty region away from the marked point.

    With no loops, every point on a side of an arc is either another arc's
    endpoint or the marked point, so the admissible region is an empty side.
    """
    if P.loops:
        raise PreconditionLoops("loops must be removed before arcs")
    if not P.arcs:
        raise EmptyPattern("pattern has no arcs")
    for aid, _ in sorted(P.arcs, key=lambda item: _key(item[0])):
        if _empty_side(P, aid) is not None:
            return aid
    raise AssertionError("non-crossing arcs always have an outermost one")


def _next_step(P):
    if P.loops:
        lid = innermost_loop(P)
        rest = tuple(lp for lp in P.loops if lp.id != lid)
        return "loop", lid, (), IntersectionPattern(P.boundary, P.marked, P.arcs, rest)
    if P.arcs:
        aid = outermost_arc_avoiding(P)
        a, b = P.arc_map[aid]
        region = _empty_side(P, aid)
        boundary = tuple(x for x in P.boundary if x not in (a, b))
        arcs = tuple(item for item in P.arcs if item[0] != aid)
        return "arc", aid, region, IntersectionPattern(boundary, P.marked, arcs, P.loops)
    raise EmptyPattern("pattern has no components")


def reduce_step(P):
    return _next_step(P)[3]


def reduce_to_disjoint(P):
    trace = []
    while P.components():
        kind, cid, region, P = _next_step(P)
        trace.append(Step(kind, cid, region, P))
    return trace


def random_pattern(rng, max_components=50):
    """Random valid pattern with at most ``max_components`` arcs plus loops."""
    total = rng.randint(0, max_components)
    m = rng.randint(0, total)
    k = total - m
    pairs = []

    def match(points):
        while points:
            j = rng.randrange(1, len(points), 2)
            pairs.append((points[0], points[j]))
            match(points[1:j])
            points = points[j + 1:]

    match(list(range(2 * m)))
    boundary = list(range(2 * m))
    boundary.insert(rng.randint(0, len(boundary)), "z")
    rng.shuffle(pairs)
    arcs = tuple((i, pair) for i, pair in enumerate(pairs))
    loops = []
    for i in range(k):
        if loops and rng.random() < 0.6:
            loops.append(Loop(i, rng.choice(loops).id))
        else:
            loops.append(Loop(i, None, rng.choice(boundary)))
    order = list(range(k))
    rng.shuffle(order)
    return IntersectionPattern(tuple(boundary), "z", arcs, tuple(loops[i] for i in order))


def pattern_to_dict(P):
    return {
        "boundary": list(P.boundary),
        "marked": P.marked,
        "arcs": [list(pair) for _, pair in P.arcs],
        "arc_ids": [aid for aid, _ in P.arcs],
        "loops": [{"id": lp.id, "parent": lp.parent, "face": lp.face} for lp in P.loops],
    }


def pattern_from_dict(d):
    arcs = d.get("arcs", [])
    ids = d.get("arc_ids") or list(range(len(arcs)))
    return IntersectionPattern(
        tuple(d.get("boundary", [d.get("marked", "z")])),
        d.get("marked", "z"),
        tuple((aid, tuple(pair)) for aid, pair in zip(ids, arcs)),
        tuple(Loop(lp["id"], lp.get("parent"), lp.get("face")) for lp in d.get("loops", [])),
    )

