"""Command-line entry point: ``primtree <subcommand> ...``.

Exit codes: 0 on success, 1 on a validation failure (error JSON on stderr),
2 on malformed arguments.
"""

import argparse
import json
import os
import sys

from .automorphism import check_automorphism, fixed_point
from .errors import PrimtreeError, StructureMismatch
from .generator import GenConfig, generate
from .involution import analyze, outcome_to_dict
from .lens import classify, normalize
from .ptree import build_primitive_tree, tri_lookup
from .serialize import (complex_from_dict, complex_to_dict, complex_to_dot, dumps,
                        map_from_dict, tree_from_dict, tree_to_dict, tree_to_dot)
from .surgery import pattern_from_dict, pattern_report, pattern_to_dict, reduce_to_disjoint
from .verify import run_verify


class ValidationFailure(Exception):
    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details


def _compact(obj):
    return json.dumps(obj, separators=(",", ":"))


def _seed(args):
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("PTREE_SEED", "0"))


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _lens_of(args, data):
    if getattr(args, "p", None) is not None and getattr(args, "q", None) is not None:
        return normalize(args.p, args.q)
    if "p" in data and "q" in data:
        return normalize(data["p"], data["q"])
    raise ValidationFailure("lens space unknown: pass p and q or use a complex written by 'generate'")


def cmd_classify(args):
    L = normalize(args.p, args.q)
    print(_compact({"p": L.p, "q": L.q, "case": classify(L).value}))


def cmd_generate(args):
    L = normalize(args.p, args.q)
    cfg = GenConfig(args.radius, args.branching, args.bridge_length, _seed(args))
    C = generate(L, cfg)
    _emit(complex_to_dot(C) if args.format == "dot" else dumps(complex_to_dict(C)), args.out)


def cmd_ptree(args):
    data = _read_json(args.complex)
    C = complex_from_dict(data)
    T = build_primitive_tree(_lens_of(args, data), C)
    _emit(tree_to_dot(T) if args.format == "dot" else dumps(tree_to_dict(T)), args.out)


def cmd_fixpoint(args):
    T = tree_from_dict(_read_json(args.tree))
    f = map_from_dict(_read_json(args.auto))
    order = check_automorphism(T, f)
    if order > 2:
        raise ValidationFailure(f"automorphism has order {order}; an involution is required")
    locus = fixed_point(T, f, args.start)
    print(_compact({"order": order, **locus.to_dict()}))


def cmd_analyze(args):
    L = normalize(args.p, args.q)
    C = complex_from_dict(_read_json(args.complex))
    T = build_primitive_tree(L, C)
    raw = map_from_dict(_read_json(args.auto))
    # white vertices may be omitted: their images follow from their triangles
    g = {v: raw[v] for v in T.colors if v in raw}
    whites = tri_lookup(T)
    for t, w in whites.items():
        if w not in g:
            try:
                g[w] = whites[tuple(sorted(raw[v] for v in t))]
            except KeyError as exc:
                raise ValidationFailure(f"map does not carry triangle {t} to a triangle") from exc
    print(_compact(outcome_to_dict(analyze(L, T, C, g, args.start))))


def cmd_surgery(args):
    P = pattern_from_dict(_read_json(args.pattern))
    report = pattern_report(P)
    if report:
        raise ValidationFailure("invalid intersection pattern", report)
    trace = reduce_to_disjoint(P)
    out = {
        "components": P.components(),
        "steps": len(trace),
        "final": pattern_to_dict(trace[-1].after if trace else P),
    }
    if args.trace:
        out["trace"] = [{"kind": s.kind, "component": s.component, "region": list(s.region)}
                        for s in trace]
    print(_compact(out))


def cmd_verify(args):
    summary = run_verify(args.pmax, _seed(args), args.trials)
    print(dumps(summary), end="")
    if not summary["passed"]:
        raise ValidationFailure("verification failed",
                                [k for k, s in summary["suites"].items() if not s["passed"]])


def build_parser():
    parser = argparse.ArgumentParser(prog="primtree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="normalize (p, q) and print its structure case")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="generate a truncated primitive disk complex")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--branching", type=int, default=2)
    p.add_argument("--bridge-length", type=int, default=2)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("ptree", help="build the primitive tree of a complex JSON file")
    p.add_argument("complex")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ptree)

    p = sub.add_parser("fixpoint", help="fixed vertex or swapped edge of a tree involution")
    p.add_argument("tree")
    p.add_argument("auto")
    p.add_argument("--start", type=int)
    p.set_defaults(func=cmd_fixpoint)

    p = sub.add_parser("analyze", help="run the involution case analysis")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("complex")
    p.add_argument("auto")
    p.add_argument("--start", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("surgery", help="reduce an intersection pattern to the empty pattern")
    p.add_argument("pattern")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("verify", help="run every property suite on a parameter grid")
    p.add_argument("--pmax", type=int, default=30)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (PrimtreeError, ValidationFailure, ValueError, KeyError, OSError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        details = getattr(exc, "details", None) or getattr(exc, "report", None)
        if isinstance(exc, StructureMismatch) or details:
            err["details"] = list(details or [])[:20]
        sys.stderr.write(_compact(err) + "\n")
        return 1
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
