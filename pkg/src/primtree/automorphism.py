"""Finite-order automorphisms of finite trees and their fixed loci.

An involution of a tree maps the path from ``v`` to ``f(v)`` onto itself
reversed, so the midpoint of that path is fixed: a vertex when the path has
even length, the barycenter of an edge (whose ends are swapped) otherwise.
"""

from dataclasses import dataclass
from math import lcm

from .errors import LabelViolation, NotAdjacencyPreserving, NotBijective
from .ptree import PrimitiveTree
from .simplicial import edge_key


@dataclass(frozen=True, order=True)
class FixedVertex:
    v: int

    kind = "vertex"

    def to_dict(self):
        return {"kind": "FixedVertex", "vertex": self.v}


@dataclass(frozen=True, order=True)
class SwappedEdge:
    u: int
    v: int

    kind = "edge"

    def __post_init__(self):
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def to_dict(self):
        return {"kind": "SwappedEdge", "edge": [self.u, self.v]}


def check_automorphism(T, f):
    """Order of ``f`` if it is a color- and label-preserving automorphism."""
    verts = set(T.colors)
    if set(f) != verts:
        raise NotBijective("map is not defined exactly on the tree's vertices")
    if set(f.values()) != verts or len(set(f.values())) != len(f):
        raise NotBijective("map is not a bijection of the vertex set")
    for v, c in T.colors.items():
        if T.colors[f[v]] != c:
            raise LabelViolation(f"vertex {v} ({c}) maps to {f[v]} ({T.colors[f[v]]})")
    for (u, v), lab in T.edges.items():
        image = edge_key(f[u], f[v])
        if image not in T.edges:
            raise NotAdjacencyPreserving(f"edge ({u}, {v}) maps to non-edge {image}")
        if T.edges[image] != lab:
            raise LabelViolation(f"edge ({u}, {v}) labeled {lab} maps to {image} labeled {T.edges[image]}")
    order, seen = 1, set()
    for v in f:
        if v in seen:
            continue
        n, x = 0, v
        while True:
            seen.add(x)
            x = f[x]
            n += 1
            if x == v:
                break
        order = lcm(order, n)
    return order


def fixed_point(T, f, start=None):
    """Midpoint of the path from ``start`` to ``f(start)``.

    ``f`` must be an automorphism of order 1 or 2 (see ``check_automorphism``).
    ``start`` defaults to the smallest vertex.
    """
    v = min(T.colors) if start is None else start
    if f[f[v]] != v:
        raise ValueError(f"map has order > 2 at vertex {v}")
    path = T.path(v, f[v])
    n = len(path) - 1
    if n % 2 == 0:
        return FixedVertex(path[n // 2])
    return SwappedEdge(path[n // 2], path[n // 2 + 1])


def brute_force_fixed(T, f):
    out = {FixedVertex(v) for v in T.colors if f[v] == v}
    out |= {SwappedEdge(u, v) for (u, v) in T.edges if f[u] == v and f[v] == u}
    return out


def random_tree(rng, n, labels=("type0", "type1")):
    """Random labeled tree on ``0..n-1``; shape varies from bushy to path-like."""
    window = rng.choice([None, 1, 3, 10])
    edges = {}
    for i in range(1, n):
        lo = 0 if window is None else max(0, i - window)
        edges[(rng.randrange(lo, i), i)] = rng.choice(labels)
    return edges


def random_involution(rng, max_vertices=2000, labels=("type0", "type1")):
    """Random tree with an involution of known shape.

    A pointwise-fixed core tree carries pairs of isomorphic subtrees that the
    involution exchanges; with an empty core, two copies are joined by one
    edge whose ends are swapped. Vertex ids are shuffled at the end.
    """
    edges, f = {}, {}
    n = 0

    def reserve(size):
        nonlocal n
        n += size
        return n - size

    if rng.random() < 0.3:
        half = rng.randint(1, max_vertices // 2)
        shape = random_tree(rng, half, labels)
        for copy in (0, half):
            for (a, b), lab in shape.items():
                edges[(copy + a, copy + b)] = lab
        edges[(0, half)] = rng.choice(labels)
        n = 2 * half
        f = {i: (i + half) % n for i in range(n)}
    else:
        core = rng.randint(1, max(1, max_vertices // 4))
        edges.update(random_tree(rng, core, labels))
        reserve(core)
        f = {i: i for i in range(core)}
        budget = max_vertices - core
        while budget >= 2 and rng.random() < 0.9:
            size = rng.randint(1, max(1, min(budget // 2, max_vertices // 8)))
            shape = random_tree(rng, size, labels)
            anchor = rng.randrange(core)
            lab = rng.choice(labels)
            a = reserve(size)
            b = reserve(size)
            for (x, y), elab in shape.items():
                edges[(a + x, a + y)] = elab
                edges[(b + x, b + y)] = elab
            edges[(anchor, a)] = lab
            edges[(anchor, b)] = lab
            for i in range(size):
                f[a + i] = b + i
                f[b + i] = a + i
            budget -= 2 * size
    relabel = list(range(n))
    rng.shuffle(relabel)
    tree = PrimitiveTree(
        {relabel[i]: "black" for i in range(n)},
        {(relabel[u], relabel[v]): lab for (u, v), lab in edges.items()},
    )
    return tree, {relabel[i]: relabel[j] for i, j in f.items()}
