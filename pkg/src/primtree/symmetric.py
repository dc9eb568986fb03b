"""Complexes with a built-in involution, for exercising the case analysis.

Each construction glues two copies of a generated complex ``H`` (at its
root vertex 0) onto a small symmetric gadget; the involution swaps the two
copies and acts on the gadget by its own symmetry.
"""

from .generator import Builder, GenConfig, add_bridge, generate, module_rng
from .lens import StructureCase, as_lens, classify
from .ptree import build_primitive_tree, induced_map
from .simplicial import automorphism_report, tri_edges, tri_key

# which fixed-locus shapes each case admits, by gadget name
REALIZABLE = {
    StructureCase.C1a: ("identity", "vertex", "type2"),
    StructureCase.C1b: ("identity", "vertex", "type1"),
    StructureCase.C1c: ("identity", "vertex", "type0", "type1"),
    StructureCase.C2a: ("identity", "vertex", "white"),
    StructureCase.C2b: ("identity", "vertex", "type0"),
    StructureCase.C2c: ("identity", "vertex", "type1"),
    StructureCase.C3: ("identity", "vertex", "type0", "type1", "bridge"),
}


def _mirror(H, b, g, pairs):
    f = dict(g)
    for a, a2 in pairs:
        fa = b.paste(H, a)
        fb = b.paste(H, a2)
        for x in H.vertices:
            if x:
                f[fa[x]] = fb[x]
                f[fb[x]] = fa[x]
    return b.freeze(H.lens), f


def mirror_at_vertex(H):
    b = Builder()
    c = b.vertex()
    return _mirror(H, b, {c: c}, [(c, c)])


def mirror_across_edge(H, label):
    b = Builder()
    r, r2 = b.vertex(), b.vertex()
    b.edge(r, r2, label)
    return _mirror(H, b, {r: r2, r2: r}, [(r, r2)])


def mirror_across_bridge(H, length):
    b = Builder()
    r, r2 = b.vertex(), b.vertex()
    path = add_bridge(b, r, r2, length)
    return _mirror(H, b, dict(zip(path, path[::-1])), [(r, r2)])


def mirror_about_triangle(H):
    """Triangle ``{a, b, c}`` with ``a <-> b`` swapped and ``c`` fixed."""
    b = Builder()
    x, y, c = b.vertex(), b.vertex(), b.vertex()
    b.triangle(x, y, c, dict.fromkeys(tri_edges(tri_key(x, y, c)), "type1"))
    return _mirror(H, b, {x: y, y: x, c: c}, [(x, y), (c, c)])


def mirror_along_strip(H, reach=2):
    """Strip ``x(-reach) .. x(reach+1)`` reversed about its edge ``x0 x1``."""
    b = Builder()
    pos = {k: b.vertex() for k in range(-reach, reach + 2)}
    path = [pos[k] for k in sorted(pos)]
    b.strip(path, lambda i, j: "type0" if j - i == 1 else "type1")
    for k in (-reach, -reach + 1, reach, reach + 1):
        b.set_frontier(pos[k])
    g = {pos[k]: pos[1 - k] for k in pos}
    return _mirror(H, b, g, [(pos[k], pos[1 - k]) for k in range(-reach + 2, 1)])


def build_instance(lens, cfg, gadget):
    """Symmetric complex for ``gadget`` plus its involution on the complex."""
    L = as_lens(lens)
    case = classify(L)
    if gadget not in REALIZABLE[case]:
        raise ValueError(f"gadget {gadget!r} is not realizable in case {case}")
    H = generate(L, cfg)
    if gadget == "identity":
        return H, {v: v for v in H.vertices}
    if gadget == "vertex":
        return mirror_at_vertex(H)
    if gadget == "white":
        return mirror_about_triangle(H)
    if gadget == "bridge":
        return mirror_across_bridge(H, cfg.bridge_length)
    if case is StructureCase.C2b:
        return mirror_along_strip(H, max(2, cfg.radius))
    return mirror_across_edge(H, gadget)


def symmetric_instance(lens, cfg=GenConfig(), gadget="vertex"):
    """Return ``(C, T, f_tree, start)`` with ``f_tree`` an involution of ``T``.

    The complex-level map is checked to be a label-preserving automorphism
    before it is pushed down to the tree. ``start`` is a vertex whose path
    to its image runs through the gadget.
    """
    C, fC = build_instance(lens, cfg, gadget)
    report = automorphism_report(C, fC)
    if report:
        raise AssertionError(f"constructed map is not an automorphism: {report[:3]}")
    T = build_primitive_tree(lens, C)
    f = induced_map(C, T, fC)
    if gadget == "white":
        start = 0
    else:
        rng = module_rng(cfg.seed, f"symmetric/{gadget}")
        start = rng.choice(sorted(T.colors))
    return C, T, f, start
