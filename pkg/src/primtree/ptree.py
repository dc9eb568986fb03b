"""Primitive trees extracted from primitive disk complexes.

``PrimitiveTree`` doubles as the generic finite tree used by the automorphism
code: any vertex-colored, edge-labeled graph can be wrapped in one.
"""

from collections import deque
from functools import cached_property

from .errors import StructureMismatch
from .generator import validate_structure
from .lens import StructureCase, TREE_CASES, as_lens, classify
from .simplicial import edge_key

TREE_LABELS = ("type0", "type1", "type2", "bridge", "spoke")

# edges of the source complex each case keeps
CASE_LABELS = {
    StructureCase.C1a: {"type2"},
    StructureCase.C1b: {"type1"},
    StructureCase.C1c: {"type0", "type1"},
    StructureCase.C2a: {"spoke"},
    StructureCase.C2b: {"type0"},
    StructureCase.C2c: {"type0", "type1"},
    StructureCase.C3: {"type0", "type1", "bridge"},
}


class PrimitiveTree:
    """Colored, labeled graph expected to be a tree.

    ``sources`` maps a vertex id or an edge key to the tuple of complex
    vertices it came from (a vertex, an edge, a triangle or a bridge path).
    """

    def __init__(self, colors, edges, frontier=(), sources=None, case=None):
        self.colors = dict(colors)
        self.edges = {edge_key(*e): lab for e, lab in edges.items()}
        self.frontier = frozenset(frontier)
        self.sources = dict(sources or {})
        self.case = StructureCase(case) if case is not None else None

    def __repr__(self):
        return f"PrimitiveTree({len(self.colors)} vertices, {len(self.edges)} edges, case={self.case})"

    def __eq__(self, other):
        if not isinstance(other, PrimitiveTree):
            return NotImplemented
        return (self.colors == other.colors and self.edges == other.edges
                and self.frontier == other.frontier and self.sources == other.sources
                and self.case == other.case)

    @property
    def vertices(self):
        return self.colors.keys()

    @cached_property
    def adjacency(self):
        adj = {v: [] for v in self.colors}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def label(self, u, v):
        return self.edges[edge_key(u, v)]

    def components(self):
        seen, comps = set(), []
        for s in sorted(self.colors):
            if s in seen:
                continue
            comp, todo = [], [s]
            seen.add(s)
            while todo:
                x = todo.pop()
                comp.append(x)
                for y in self.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            comps.append(comp)
        return comps

    def is_tree(self):
        return len(self.colors) > 0 and len(self.edges) == len(self.colors) - 1 and len(self.components()) == 1

    @cached_property
    def rooting(self):
        """BFS parents and depths from the smallest vertex."""
        root = min(self.colors)
        parent, depth = {root: None}, {root: 0}
        todo = deque([root])
        while todo:
            x = todo.popleft()
            for y in self.adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    todo.append(y)
        if len(parent) != len(self.colors) or len(self.edges) != len(self.colors) - 1:
            raise ValueError("graph is not a tree")
        return parent, depth

    def path(self, u, v):
        """The unique vertex path from ``u`` to ``v``."""
        parent, depth = self.rooting
        left, right = [u], [v]
        while depth[left[-1]] > depth[right[-1]]:
            left.append(parent[left[-1]])
        while depth[right[-1]] > depth[left[-1]]:
            right.append(parent[right[-1]])
        while left[-1] != right[-1]:
            left.append(parent[left[-1]])
            right.append(parent[right[-1]])
        return left + right[-2::-1]


def build_primitive_tree(lens, C):
    L = as_lens(lens)
    report = validate_structure(L, C)
    if report:
        raise StructureMismatch(f"complex does not match the structure of {L}", report)
    case = classify(L)
    prim = sorted(C.primitive_ids())
    colors = dict.fromkeys(prim, "black")
    frontier = {v for v in prim if C.vertices[v].frontier}
    sources = {v: (v,) for v in prim}
    edges = {}

    if case in TREE_CASES or case is StructureCase.C3:
        for e, lab in C.primitive_edges().items():
            edges[e] = lab
    elif case is StructureCase.C2a:
        top = max(C.vertices) + 1
        for i, t in enumerate(sorted(C.triangles)):
            w = top + i
            colors[w] = "white"
            sources[w] = t
            if any(C.vertices[v].frontier for v in t):
                frontier.add(w)
            for v in t:
                edges[edge_key(v, w)] = "spoke"
                sources[edge_key(v, w)] = t
    elif case is StructureCase.C2b:
        edges = {e: lab for e, lab in C.edges.items() if lab == "type0"}
    else:
        edges = {e: lab for e, lab in C.edges.items()
                 if lab == "type0" or (lab == "type1" and not C.edge_triangles.get(e))}

    if case is StructureCase.C3:
        for path in C.bridges:
            e = edge_key(path[0], path[-1])
            edges[e] = "bridge"
            sources[e] = tuple(path)
    for e in edges:
        sources.setdefault(e, e)
    return PrimitiveTree(colors, dict(sorted(edges.items())), frontier, sources, case)


def validate_ptree(T):
    report = []
    if not T.colors:
        return ["tree has no vertices"]
    comps = T.components()
    if len(T.edges) != len(T.colors) - len(comps):
        report.append("acyclic: graph has a cycle")
    if len(comps) != 1:
        report.append(f"connected: {len(comps)} components")
    allowed = CASE_LABELS.get(T.case, set(TREE_LABELS))
    for e, lab in sorted(T.edges.items()):
        if lab not in allowed:
            report.append(f"edge {e}: label {lab} not allowed for case {T.case}")
    for v, col in sorted(T.colors.items()):
        if col not in ("black", "white"):
            report.append(f"vertex {v}: color {col!r}")
    whites = [v for v, c in T.colors.items() if c == "white"]
    if whites and T.case not in (None, StructureCase.C2a):
        report.append(f"white vertices in case {T.case}")
    if T.case is StructureCase.C2a or whites:
        for (u, v) in sorted(T.edges):
            if T.colors[u] == T.colors[v]:
                report.append(f"bipartite rule: edge ({u}, {v}) joins two {T.colors[u]} vertices")
        for w in sorted(whites):
            if w not in T.frontier and len(T.adjacency[w]) != 3:
                report.append(f"white vertex {w}: valency {len(T.adjacency[w])} != 3")
    return report


def tri_lookup(T):
    """Triangle -> white vertex id for a C2a tree."""
    return {T.sources[w]: w for w, c in T.colors.items() if c == "white"}


def induced_map(C, T, f):
    """Restrict a complex vertex map to the tree, extending it to white vertices."""
    g = {v: f[v] for v in T.colors if T.colors[v] == "black"}
    whites = tri_lookup(T)
    for t, w in whites.items():
        image = tuple(sorted(f[v] for v in t))
        if image not in whites:
            raise ValueError(f"triangle {t} maps to {image}, which is not a triangle")
        g[w] = whites[image]
    return g

