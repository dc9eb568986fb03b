"""Seeded generator for finite truncations of primitive disk complexes.

The complexes being modeled are locally infinite, so generation is bounded
two ways: ``branching`` stands in for "infinitely many" at every vertex and
``radius`` bounds the graph distance from the root vertex 0. Vertices at
the radius are flagged ``frontier`` and are never expanded; the structure
validator skips every check that would need their missing neighborhood.

Growth rules per case:

* tree cases (C1a, C1b, C1c, and each component in C3): every interior
  vertex ends up with ``branching`` incident edges of each required type;
* C2a: every interior vertex lies in ``branching`` triangles, triangles
  meet only at vertices;
* C2b: every interior vertex lies on ``branching`` strips, consecutive
  strip vertices joined by type0 edges and every second one by type1;
* C2c: isolated triangles (one type1 edge each) plus free type1 edges;
* C3: a root tree component and ``branching`` satellite components, each
  satellite hanging off the root component by one bridge strip.
"""

import random
from collections import Counter, deque
from dataclasses import dataclass

from .lens import StructureCase, TREE_CASES, TWO_DIM_CASES, as_lens, classify
from .simplicial import LabeledComplex, Vertex, edge_key, strip_triangles, tri_edges, tri_key


@dataclass(frozen=True)
class GenConfig:
    radius: int = 2
    branching: int = 2
    bridge_length: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError(f"radius must be >= 1, got {self.radius}")
        if self.branching < 1:
            raise ValueError(f"branching must be >= 1, got {self.branching}")
        if self.bridge_length < 2:
            raise ValueError(f"bridge_length must be >= 2, got {self.bridge_length}")
        if not -(1 << 63) <= self.seed < (1 << 64):
            raise ValueError("seed must fit in 64 bits")


def module_rng(seed, stream):
    """Named, independent PRNG stream derived from one integer seed."""
    return random.Random(f"{stream}:{seed}")


class Builder:
    """Mutable accumulator; ``freeze`` yields the immutable complex."""

    def __init__(self):
        self.vertices = {}
        self.edges = {}
        self.triangles = set()
        self.bridges = []
        self.next_id = 0

    def vertex(self, primitive=True, frontier=False):
        vid = self.next_id
        self.next_id += 1
        self.vertices[vid] = Vertex(vid, primitive, frontier, "black" if primitive else "none")
        return vid

    def set_frontier(self, vid, frontier=True):
        rec = self.vertices[vid]
        self.vertices[vid] = Vertex(vid, rec.primitive, frontier, rec.color)

    def edge(self, u, v, label):
        e = edge_key(u, v)
        old = self.edges.get(e)
        if old is not None and old != label:
            raise ValueError(f"edge {e} relabeled {old} -> {label}")
        self.edges[e] = label

    def triangle(self, a, b, c, labels):
        """Add a triangle; ``labels`` maps each of its edges to a label."""
        t = tri_key(a, b, c)
        for e in tri_edges(t):
            self.edge(*e, labels[e])
        self.triangles.add(t)
        return t

    def strip(self, path, label_of):
        """Add the strip on ``path``; ``label_of(i, j)`` labels path[i]-path[j]."""
        for i in range(len(path) - 2):
            labels = {}
            for a, b in ((i, i + 1), (i, i + 2), (i + 1, i + 2)):
                labels[edge_key(path[a], path[b])] = label_of(a, b)
            self.triangle(*path[i:i + 3], labels)

    def paste(self, C, root_to):
        """Copy ``C`` in with fresh ids, gluing its vertex 0 onto ``root_to``.

        Returns the id map from ``C`` to this builder. The glued vertex keeps
        the flags it already has here.
        """
        f = {0: root_to}
        for vid in sorted(C.vertices):
            if vid == 0:
                continue
            rec = C.vertices[vid]
            f[vid] = self.vertex(rec.primitive, rec.frontier)
        for (u, v), lab in C.edges.items():
            self.edge(f[u], f[v], lab)
        for t in C.triangles:
            self.triangles.add(tri_key(*(f[v] for v in t)))
        for path in C.bridges:
            self.bridges.append(tuple(f[v] for v in path))
        return f

    def freeze(self, lens=None):
        return LabeledComplex(
            (self.vertices[v] for v in sorted(self.vertices)),
            dict(sorted(self.edges.items())),
            self.triangles,
            self.bridges,
            lens,
        )


def _grow_tree(b, rng, root, radius, branching, mixed, single_label="type1"):
    todo = deque([(root, 0, None)])
    while todo:
        v, d, parent_label = todo.popleft()
        if d >= radius:
            b.set_frontier(v)
            continue
        if mixed:
            labels = []
            for lab in ("type0", "type1"):
                labels += [lab] * (branching - (parent_label == lab))
            rng.shuffle(labels)
        else:
            labels = [single_label] * (branching - (parent_label is not None))
        for lab in labels:
            c = b.vertex()
            b.edge(v, c, lab)
            todo.append((c, d + 1, lab))


def _grow_c2a(b, rng, radius, branching):
    todo = deque([(0, 0, 0)])
    while todo:
        v, d, inherited = todo.popleft()
        if d >= radius:
            b.set_frontier(v)
            continue
        for _ in range(branching - inherited):
            x, y = b.vertex(), b.vertex()
            b.triangle(v, x, y, dict.fromkeys(tri_edges(tri_key(v, x, y)), "type1"))
            todo.append((x, d + 1, 1))
            todo.append((y, d + 1, 1))


def _strip_label(i, j):
    return "type0" if j - i == 1 else "type1"


def _grow_c2b(b, rng, radius, branching):
    todo = deque([(0, 0, 0)])
    while todo:
        v, d, inherited = todo.popleft()
        if d >= radius:
            b.set_frontier(v)
            continue
        reach = 2 * (radius - d)
        for _ in range(branching - inherited):
            # strip positions -reach..reach with v at position 0; position k
            # sits at distance d + ceil(|k|/2) from the root
            left = [b.vertex() for _ in range(reach)]
            right = [b.vertex() for _ in range(reach)]
            if rng.random() < 0.5:
                left, right = right, left
            path = left[::-1] + [v] + right
            b.strip(path, _strip_label)
            for k in range(1, reach + 1):
                dist = d + (k + 1) // 2
                for w in (right[k - 1], left[k - 1]):
                    todo.append((w, dist, 1))


def _grow_c2c(b, rng, radius, branching):
    todo = deque([(0, 0, None)])
    while todo:
        v, d, via = todo.popleft()
        if d >= radius:
            b.set_frontier(v)
            continue
        n_tri = branching - (via == "tri")
        if via == "free":
            n_free = rng.randint(0, branching - 1)
        else:
            n_free = rng.randint(1, branching)
        for _ in range(n_tri):
            x, y = b.vertex(), b.vertex()
            t = tri_key(v, x, y)
            odd = rng.choice(tri_edges(t))
            b.triangle(v, x, y, {e: "type1" if e == odd else "type0" for e in tri_edges(t)})
            todo.append((x, d + 1, "tri"))
            todo.append((y, d + 1, "tri"))
        for _ in range(n_free):
            c = b.vertex()
            b.edge(v, c, "type1")
            todo.append((c, d + 1, "free"))


def add_bridge(b, D, E, length):
    """Join D and E by a strip of ``length`` triangles with fresh interior."""
    inner = [b.vertex(primitive=False) for _ in range(length)]
    path = (D, *inner, E)
    b.strip(path, lambda i, j: "bridgeInterior")
    b.bridges.append(path)
    return path


def _grow_c3(b, rng, cfg):
    _grow_tree(b, rng, 0, cfg.radius, cfg.branching, mixed=True)
    anchors = sorted(v for v, rec in b.vertices.items() if not rec.frontier)
    for _ in range(cfg.branching):
        D = rng.choice(anchors)
        E = b.vertex()
        add_bridge(b, D, E, cfg.bridge_length)
        _grow_tree(b, rng, E, cfg.radius, cfg.branching, mixed=True)


def generate(lens, cfg=GenConfig()):
    """Deterministic truncation of the primitive disk complex of ``lens``."""
    L = as_lens(lens)
    case = classify(L)
    rng = module_rng(cfg.seed, f"generator/{L.p}/{L.q}")
    b = Builder()
    b.vertex()
    if case is StructureCase.C1a:
        _grow_tree(b, rng, 0, cfg.radius, cfg.branching, mixed=False, single_label="type2")
    elif case is StructureCase.C1b:
        _grow_tree(b, rng, 0, cfg.radius, cfg.branching, mixed=False, single_label="type1")
    elif case is StructureCase.C1c:
        _grow_tree(b, rng, 0, cfg.radius, cfg.branching, mixed=True)
    elif case is StructureCase.C2a:
        _grow_c2a(b, rng, cfg.radius, cfg.branching)
    elif case is StructureCase.C2b:
        _grow_c2b(b, rng, cfg.radius, cfg.branching)
    elif case is StructureCase.C2c:
        _grow_c2c(b, rng, cfg.radius, cfg.branching)
    else:
        _grow_c3(b, rng, cfg)
    return b.freeze(L)


ALLOWED_LABELS = {
    StructureCase.C1a: {"type2"},
    StructureCase.C1b: {"type1"},
    StructureCase.C1c: {"type0", "type1"},
    StructureCase.C2a: {"type1"},
    StructureCase.C2b: {"type0", "type1"},
    StructureCase.C2c: {"type0", "type1"},
    StructureCase.C3: {"type0", "type1"},
}


def _components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    comps = {}
    for v in vertices:
        comps.setdefault(find(v), []).append(v)
    return list(comps.values())


def _forest_report(vertices, edges, what, connected):
    report = []
    comps = _components(vertices, edges)
    if len(edges) != len(vertices) - len(comps):
        report.append(f"{what} is not acyclic")
    if connected and len(comps) != 1:
        report.append(f"{what} is not connected ({len(comps)} components)")
    return report, comps


def validate_structure(lens, C, branching=1):
    """Check the case rules for ``classify(lens)`` at every interior simplex.

    ``branching`` is the lower bound asserted wherever the modeled complex
    has infinitely many simplices; the default 1 only asserts presence.
    """
    L = as_lens(lens)
    case = classify(L)
    report = []
    allowed = ALLOWED_LABELS[case]
    interior = [v for v, rec in sorted(C.vertices.items()) if not rec.frontier]
    tri_count = Counter({e: len(ts) for e, ts in C.edge_triangles.items()})
    bridge_vertices = {v for path in C.bridges for v in path[1:-1]}

    for (u, v), lab in C.edges.items():
        if lab == "type2" and L.p != 2:
            report.append(f"edge ({u}, {v}): type2 edge with p = {L.p} != 2")
        if lab == "bridgeInterior":
            if case is not StructureCase.C3:
                report.append(f"edge ({u}, {v}): edge type forbidden for case {case}: {lab}")
            elif u not in bridge_vertices and v not in bridge_vertices:
                report.append(f"edge ({u}, {v}): bridgeInterior edge outside every bridge")
        elif lab not in allowed:
            report.append(f"edge ({u}, {v}): edge type forbidden for case {case}: {lab}")
    for vid, rec in sorted(C.vertices.items()):
        if not rec.primitive and vid not in bridge_vertices:
            report.append(f"vertex {vid}: non-primitive vertex outside every bridge")
    if C.bridges and case is not StructureCase.C3:
        report.append(f"bridges present in case {case}")

    if case in TREE_CASES:
        if C.triangles:
            report.append(f"case {case} complex has triangles")
        r, _ = _forest_report(list(C.vertices), list(C.edges), "complex", connected=True)
        report += r
        for v in interior:
            counts = Counter(C.label(v, w) for w in C.neighbors(v))
            if case is StructureCase.C1c:
                for lab in ("type0", "type1"):
                    if counts[lab] < branching:
                        report.append(f"vertex {v}: {counts[lab]} {lab} edges < {branching}")
            elif sum(counts.values()) < branching:
                report.append(f"vertex {v}: valency {sum(counts.values())} < {branching}")

    elif case in TWO_DIM_CASES:
        r, _ = _forest_report(list(C.vertices), list(C.edges), "1-skeleton", connected=True)
        report += [m for m in r if "connected" in m]
        euler = len(C.vertices) - len(C.edges) + len(C.triangles)
        if euler != 1:
            report.append(f"Euler characteristic {euler} != 1 (not contractible)")
        for v in interior:
            n = len(C.vertex_triangles.get(v, ()))
            if n < branching:
                report.append(f"vertex {v}: meets {n} triangles < {branching}")
        if case is not StructureCase.C2a:
            for t in sorted(C.triangles):
                pattern = sorted(C.edges.get(e) for e in tri_edges(t))
                if pattern != ["type0", "type0", "type1"]:
                    report.append(f"triangle {t}: triangle type pattern {pattern}")
        free_type1 = 0
        for e, lab in sorted(C.edges.items()):
            n = tri_count[e]
            if lab == "type1" and n == 0:
                free_type1 += 1
            if C.is_frontier_edge(e):
                continue
            if case is StructureCase.C2a and n != 1:
                report.append(f"edge {e}: in {n} triangles, expected exactly 1")
            elif case is StructureCase.C2b:
                want = 2 if lab == "type0" else 1
                if n != want:
                    report.append(f"edge {e}: {lab} edge in {n} triangles, expected {want}")
            elif case is StructureCase.C2c:
                if lab == "type0" and n != 1:
                    report.append(f"edge {e}: type0 edge in {n} triangles, expected 1")
                if lab == "type1" and n > 1:
                    report.append(f"edge {e}: type1 edge in {n} triangles, expected at most 1")
        if case is StructureCase.C2c and interior:
            in_tri = sum(1 for e, lab in C.edges.items() if lab == "type1" and tri_count[e] == 1)
            if not free_type1 or not in_tri:
                report.append("type1 edges do not occur in both flavors (in a triangle / free)")

    else:
        report += _c3_report(C, interior, bridge_vertices, branching)
    return report


def _c3_report(C, interior, bridge_vertices, branching):
    report = []
    prim = sorted(C.primitive_ids())
    prim_edges = list(C.primitive_edges())
    r, comps = _forest_report(prim, prim_edges, "primitive subcomplex", connected=False)
    report += r
    if len(comps) < 2:
        report.append(f"primitive subcomplex has {len(comps)} component(s), expected >= 2")
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
    for v in interior:
        if v in bridge_vertices:
            continue
        counts = Counter(C.label(v, w) for w in C.neighbors(v) if C.vertices[w].primitive)
        for lab in ("type0", "type1"):
            if counts[lab] < branching:
                report.append(f"vertex {v}: {counts[lab]} {lab} edges < {branching}")
    in_bridge = set()
    lengths = set()
    joined = Counter()
    for path in C.bridges:
        D, E = path[0], path[-1]
        tris = strip_triangles(path)
        in_bridge.update(tris)
        lengths.add(len(tris))
        if not (C.vertices[D].primitive and C.vertices[E].primitive):
            report.append(f"bridge {path}: endpoint not primitive")
            continue
        if any(C.vertices[v].primitive for v in path[1:-1]):
            report.append(f"bridge {path}: interior primitive vertex")
        for t in tris:
            for e in tri_edges(t):
                if C.edges.get(e) != "bridgeInterior":
                    report.append(f"bridge {path}: edge {e} not labeled bridgeInterior")
        if comp_of[D] == comp_of[E]:
            report.append(f"bridge {path}: both endpoints in one tree component")
        joined[frozenset((comp_of[D], comp_of[E]))] += 1
    if len(lengths) > 1:
        report.append(f"bridges are not isomorphic (lengths {sorted(lengths)})")
    for pair, n in joined.items():
        if n > 1:
            report.append(f"components {sorted(pair)} joined by {n} bridges")
    for t in sorted(C.triangles - in_bridge):
        report.append(f"triangle {t} outside every bridge")
    for i, a in enumerate(C.bridges):
        for bpath in C.bridges[i + 1:]:
            common = set(a) & set(bpath)
            ends = {a[0], a[-1]} & {bpath[0], bpath[-1]}
            if len(common) > 1 or common - ends:
                report.append(f"bridges {a} and {bpath} meet in {sorted(common)}")
    if len(comps) != len(C.bridges) + 1:
        report.append(f"{len(comps)} components but {len(C.bridges)} bridges; "
                      "components and bridges do not form a tree")
    return report
