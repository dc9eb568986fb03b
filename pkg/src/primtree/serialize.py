"""JSON and DOT forms of complexes, primitive trees and automorphisms."""

import json

from .lens import LensSpace
from .ptree import PrimitiveTree
from .simplicial import LabeledComplex, Vertex

_SHAPES = {"black": "circle", "white": "doublecircle", "none": "square"}
_STYLES = {
    "type0": 'style=dashed',
    "type1": 'style=solid',
    "type2": 'style=bold',
    "bridgeInterior": 'style=dotted, color=gray40',
    "plain": 'style=solid, color=gray',
    "bridge": 'style=bold, color=red',
    "spoke": 'style=solid, color=gray30',
}


def complex_to_dict(C):
    d = {}
    if C.lens is not None:
        d["p"], d["q"] = C.lens.p, C.lens.q
        d["case"] = C.lens.case.value
    d["vertices"] = [
        {"id": v.id, "primitive": v.primitive, "frontier": v.frontier, "color": v.color}
        for _, v in sorted(C.vertices.items())
    ]
    d["edges"] = [{"u": u, "v": v, "label": lab} for (u, v), lab in sorted(C.edges.items())]
    d["triangles"] = [list(t) for t in sorted(C.triangles)]
    d["bridges"] = [list(path) for path in C.bridges]
    return d


def complex_from_dict(d):
    lens = LensSpace(d["p"], d["q"]) if "p" in d and "q" in d else None
    return LabeledComplex(
        [Vertex(r["id"], r.get("primitive", True), r.get("frontier", False), r.get("color", "none"))
         for r in d.get("vertices", [])],
        {(r["u"], r["v"]): r.get("label", "plain") for r in d.get("edges", [])},
        [tuple(t) for t in d.get("triangles", [])],
        [tuple(path) for path in d.get("bridges", [])],
        lens,
    )


def tree_to_dict(T):
    d = {"case": T.case.value if T.case is not None else None}
    d["vertices"] = []
    for v, col in sorted(T.colors.items()):
        rec = {"id": v, "color": col, "frontier": v in T.frontier}
        if v in T.sources:
            rec["source"] = list(T.sources[v])
        d["vertices"].append(rec)
    d["edges"] = []
    for (u, v), lab in sorted(T.edges.items()):
        rec = {"u": u, "v": v, "label": lab}
        if (u, v) in T.sources:
            rec["source"] = list(T.sources[(u, v)])
        d["edges"].append(rec)
    return d


def tree_from_dict(d):
    colors, frontier, sources, edges = {}, set(), {}, {}
    for r in d.get("vertices", []):
        colors[r["id"]] = r.get("color", "black")
        if r.get("frontier"):
            frontier.add(r["id"])
        if "source" in r:
            sources[r["id"]] = tuple(r["source"])
    for r in d.get("edges", []):
        u, v = sorted((r["u"], r["v"]))
        edges[(u, v)] = r.get("label", "type1")
        if "source" in r:
            sources[(u, v)] = tuple(r["source"])
    return PrimitiveTree(colors, edges, frontier, sources, d.get("case"))


def map_to_dict(f):
    return {"map": [[v, f[v]] for v in sorted(f)]}


def map_from_dict(d):
    return {int(v): int(w) for v, w in d["map"]}


def dumps(obj):
    """Canonical JSON text: fixed key order, no trailing spaces."""
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


def complex_to_dot(C, name="complex"):
    lines = [f"graph {name} {{"]
    for v, rec in sorted(C.vertices.items()):
        fill = ', style=dashed' if rec.frontier else ''
        lines.append(f'  {v} [shape={_SHAPES.get(rec.color, "circle")}{fill}];')
    for (u, v), lab in sorted(C.edges.items()):
        lines.append(f'  {u} -- {v} [{_STYLES.get(lab, "style=solid")}, label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(T, name="ptree"):
    lines = [f"graph {name} {{"]
    for v, col in sorted(T.colors.items()):
        lines.append(f'  {v} [shape={_SHAPES[col]}];')
    for (u, v), lab in sorted(T.edges.items()):
        lines.append(f'  {u} -- {v} [{_STYLES.get(lab, "style=solid")}, label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
