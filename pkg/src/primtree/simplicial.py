"""Finite labeled 2-dimensional simplicial complexes.

Vertices are integers. Edges are stored as sorted pairs and triangles as
sorted triples, so ``(u, v)`` and ``(v, u)`` name the same edge.

Bridges are stored as *strips*: a vertex path ``s0, s1, ..., s(n+1)`` whose
consecutive triples ``(s_i, s_(i+1), s_(i+2))`` are the triangles of the
corridor, so the endpoints are ``s0`` and ``s(n+1)``.
"""

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import AdjacentEndpoints, NoPath, NotUnique

EDGE_LABELS = ("type0", "type1", "type2", "bridgeInterior", "plain")
COLORS = ("black", "white", "none")


def edge_key(u, v):
    return (u, v) if u <= v else (v, u)


def tri_key(a, b, c):
    return tuple(sorted((a, b, c)))


def tri_edges(t):
    a, b, c = t
    return ((a, b), (a, c), (b, c))


def strip_triangles(path):
    """Triangles of the strip encoded by a vertex path."""
    return tuple(tri_key(*path[i:i + 3]) for i in range(len(path) - 2))


@dataclass(frozen=True)
class Vertex:
    id: int
    primitive: bool = True
    frontier: bool = False
    color: str = "none"


class LabeledComplex:
    """Immutable labeled simplicial complex of dimension at most two.

    ``lens`` is optional metadata naming the lens space the complex was
    generated for; it travels with the JSON form.
    """

    def __init__(self, vertices=(), edges=None, triangles=(), bridges=(), lens=None):
        self.vertices = {v.id: v for v in vertices}
        self.edges = {edge_key(*e): lab for e, lab in (edges or {}).items()}
        self.triangles = frozenset(tri_key(*t) for t in triangles)
        self.bridges = tuple(tuple(b) for b in bridges)
        self.lens = lens

    def __eq__(self, other):
        if not isinstance(other, LabeledComplex):
            return NotImplemented
        return (self.vertices == other.vertices and self.edges == other.edges
                and self.triangles == other.triangles and self.bridges == other.bridges
                and self.lens == other.lens)

    def __repr__(self):
        return (f"LabeledComplex({len(self.vertices)} vertices, {len(self.edges)} edges, "
                f"{len(self.triangles)} triangles, {len(self.bridges)} bridges)")

    @cached_property
    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return adj

    @cached_property
    def edge_triangles(self):
        """Map each edge to the triangles containing it."""
        out = defaultdict(list)
        for t in sorted(self.triangles):
            for e in tri_edges(t):
                out[e].append(t)
        return out

    @cached_property
    def vertex_triangles(self):
        out = defaultdict(list)
        for t in sorted(self.triangles):
            for v in t:
                out[v].append(t)
        return out

    def label(self, u, v):
        return self.edges[edge_key(u, v)]

    def neighbors(self, v):
        return self.adjacency.get(v, set())

    def is_frontier_edge(self, e):
        u, v = e
        return self.vertices[u].frontier or self.vertices[v].frontier

    def primitive_ids(self):
        return {v for v, rec in self.vertices.items() if rec.primitive}

    def primitive_edges(self):
        """Edges of the full subcomplex spanned by primitive vertices."""
        prim = self.primitive_ids()
        return {e: lab for e, lab in self.edges.items() if e[0] in prim and e[1] in prim}


def validate(C):
    """List every violated closure or label invariant (empty iff valid)."""
    report = []
    for vid, rec in C.vertices.items():
        if rec.id != vid:
            report.append(f"vertex record {rec.id} stored under id {vid}")
        if rec.color not in COLORS:
            report.append(f"vertex {vid}: unknown color {rec.color!r}")
    for (u, v), lab in C.edges.items():
        if u == v:
            report.append(f"edge ({u}, {v}) is a loop")
        for w in (u, v):
            if w not in C.vertices:
                report.append(f"edge ({u}, {v}): endpoint {w} missing")
        if lab not in EDGE_LABELS:
            report.append(f"edge ({u}, {v}): unknown label {lab!r}")
    for t in sorted(C.triangles):
        if len(set(t)) != 3:
            report.append(f"triangle {t} is degenerate")
            continue
        for e in tri_edges(t):
            if e not in C.edges:
                report.append(f"triangle {t}: edge {e} missing")
    for path in C.bridges:
        if len(path) < 4:
            report.append(f"bridge {path}: fewer than two triangles")
            continue
        if len(set(path)) != len(path):
            report.append(f"bridge {path}: repeated vertex")
        for t in strip_triangles(path):
            if t not in C.triangles:
                report.append(f"bridge {path}: triangle {t} missing")
    return report


@dataclass
class DualTree:
    """Dual graph of a complex: one node per edge and per triangle.

    Nodes are ``("edge", (u, v))`` or ``("tri", (a, b, c))``; every link
    joins a triangle node to one of its three edge nodes.
    """

    nodes: list
    links: list
    adjacency: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.adjacency:
            adj = {n: [] for n in self.nodes}
            for a, b in self.links:
                adj[a].append(b)
                adj[b].append(a)
            self.adjacency = adj

    def components(self):
        seen, comps = set(), []
        for n in self.nodes:
            if n in seen:
                continue
            comp, todo = [], [n]
            seen.add(n)
            while todo:
                x = todo.pop()
                comp.append(x)
                for y in self.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            comps.append(comp)
        return comps

    def is_forest(self):
        return len(self.links) == len(self.nodes) - len(self.components())

    def is_tree(self):
        return len(self.nodes) > 0 and self.is_forest() and len(self.components()) == 1

    def path(self, a, b):
        """Node path from ``a`` to ``b`` (BFS), or None."""
        prev = {a: None}
        todo = deque([a])
        while todo:
            x = todo.popleft()
            if x == b:
                out = []
                while x is not None:
                    out.append(x)
                    x = prev[x]
                return out[::-1]
            for y in self.adjacency[x]:
                if y not in prev:
                    prev[y] = x
                    todo.append(y)
        return None


def dual_tree(C):
    nodes = [("edge", e) for e in sorted(C.edges)] + [("tri", t) for t in sorted(C.triangles)]
    links = [(("tri", t), ("edge", e)) for t in sorted(C.triangles) for e in tri_edges(t)]
    return DualTree(nodes, links)


@dataclass(frozen=True)
class Corridor:
    triangles: tuple
    start: int
    end: int

    def __len__(self):
        return len(self.triangles)

    @property
    def vertices(self):
        return {v for t in self.triangles for v in t}

    @property
    def interior_vertices(self):
        return self.vertices - {self.start, self.end}

    def reversed(self):
        return Corridor(self.triangles[::-1], self.end, self.start)


def corridor(C, D, E):
    """Triangle sequence dual to the shortest dual-tree path between D and E."""
    if D == E or E in C.neighbors(D):
        raise AdjacentEndpoints(f"corridor endpoints {D} and {E} are equal or adjacent")
    starts = C.vertex_triangles.get(D, [])
    targets = set(C.vertex_triangles.get(E, []))
    if not starts or not targets:
        raise NoPath(f"vertex {D if not starts else E} lies in no triangle")
    dual = dual_tree(C)
    if not dual.is_forest():
        raise NotUnique("dual graph has a cycle; corridor is not well defined")
    prev = {("tri", t): None for t in starts}
    dist = dict.fromkeys(prev, 0)
    todo = deque(prev)
    while todo:
        x = todo.popleft()
        for y in dual.adjacency[x]:
            if y not in prev:
                prev[y] = x
                dist[y] = dist[x] + 1
                todo.append(y)
    hits = [("tri", t) for t in targets if ("tri", t) in dist]
    if not hits:
        raise NoPath(f"no dual path between the links of {D} and {E}")
    best = min(dist[h] for h in hits)
    hits = [h for h in hits if dist[h] == best]
    if len(hits) > 1:
        raise NotUnique(f"several shortest dual paths between {D} and {E}")
    seq = []
    x = hits[0]
    while x is not None:
        if x[0] == "tri":
            seq.append(x[1])
        x = prev[x]
    seq.reverse()
    return Corridor(tuple(seq), D, E)


def is_bridge(C, c):
    return not any(C.vertices[v].primitive for v in c.interior_vertices)


def automorphism_report(C, f):
    """Check that a vertex map preserves every part of the labeled complex."""
    report = []
    if set(f) != set(C.vertices) or set(f.values()) != set(C.vertices):
        return ["map is not a bijection of the vertex set"]
    for vid, rec in C.vertices.items():
        img = C.vertices[f[vid]]
        if (rec.primitive, rec.frontier, rec.color) != (img.primitive, img.frontier, img.color):
            report.append(f"vertex {vid} -> {f[vid]} changes flags")
    for (u, v), lab in C.edges.items():
        e = edge_key(f[u], f[v])
        if e not in C.edges:
            report.append(f"edge ({u}, {v}) maps to non-edge {e}")
        elif C.edges[e] != lab:
            report.append(f"edge ({u}, {v}) label {lab} maps to {C.edges[e]}")
    for t in C.triangles:
        if tri_key(*(f[v] for v in t)) not in C.triangles:
            report.append(f"triangle {t} maps to a non-triangle")
    bridges = {b for path in C.bridges for b in (path, path[::-1])}
    for path in C.bridges:
        if tuple(f[v] for v in path) not in bridges:
            report.append(f"bridge {path} maps to a non-bridge")
    return report
