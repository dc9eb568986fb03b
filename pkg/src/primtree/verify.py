"""Property suites behind ``primtree verify``.

Each suite returns ``(checked, failures)``; the runner aggregates them into
one JSON-ready summary.
"""

from math import gcd

from .automorphism import brute_force_fixed, check_automorphism, fixed_point, random_involution
from .generator import GenConfig, generate, module_rng, validate_structure
from .involution import analyze
from .lens import LensSpace, StructureCase, are_homeomorphic, classify, normalize
from .ptree import build_primitive_tree, validate_ptree
from .simplicial import corridor, is_bridge, strip_triangles, validate
from .surgery import pattern_report, random_pattern, reduce_to_disjoint
from .symmetric import REALIZABLE, symmetric_instance

EXPECTED_OUTCOME = {
    ("vertex", None): "CertificateV",
    ("edge", "type0"): "Contradiction",
    ("edge", "bridge"): "Contradiction",
    ("edge", "type1"): "CertificateW",
    ("edge", "type2"): "CertificateW",
}


def lens_grid(pmax):
    return [LensSpace(p, q) for p in range(2, pmax + 1) for q in range(1, p // 2 + 1) if gcd(p, q) == 1]


def literal_case(p, q):
    """Case conditions read off one by one, without shortcuts."""
    if (p % q) in (1, (q - 1) % q) or q == 1:
        if q != 2 and p != 2 * q + 1:
            if p == 2 and q == 1:
                return "C1a"
            if p >= 4 and q == 1:
                return "C1b"
            return "C1c"
        if p == 3:
            return "C2a"
        if p == 5:
            return "C2b"
        return "C2c"
    return "C3"


def representatives(pmax):
    """The smallest lens space of each case with p <= pmax."""
    reps = {}
    for L in lens_grid(pmax):
        reps.setdefault(classify(L), L)
    return reps


def suite_classify(pmax, rng):
    fails, grid = [], lens_grid(pmax)
    for L in grid:
        if classify(L).value != literal_case(L.p, L.q):
            fails.append(f"{L}: {classify(L)} != {literal_case(L.p, L.q)}")
    return len(grid), fails


def suite_lens(pmax, rng):
    fails, checked = [], 0
    for _ in range(2000):
        p = rng.randint(2, 10 ** 6)
        q = rng.randint(-10 ** 6, 10 ** 6)
        if q % p == 0 or gcd(p, q % p) != 1:
            continue
        L = normalize(p, q)
        checked += 1
        if normalize(L.p, L.q) != L:
            fails.append(f"normalize not idempotent at ({p}, {q})")
    small = min(pmax, 30)
    for p in range(2, small + 1):
        qs = [q for q in range(1, p) if gcd(p, q) == 1]
        for a in qs:
            for b in qs:
                checked += 1
                if are_homeomorphic((p, a), (p, b)) != are_homeomorphic((p, b), (p, a)):
                    fails.append(f"asymmetric at p={p}: {a}, {b}")
                if are_homeomorphic((p, a), (p, b)) != (normalize(p, a) == normalize(p, b)):
                    fails.append(f"homeomorphism disagrees with normalization at p={p}: {a}, {b}")
    return checked, fails


def _instances(pmax, seed):
    for case, L in sorted(representatives(pmax).items()):
        for cfg in (GenConfig(1, 2, 2, seed), GenConfig(2, 2, 3, seed), GenConfig(3, 2, 2, seed)):
            yield L, cfg


def suite_generator(pmax, rng, seed):
    fails, checked = [], 0
    for L, cfg in _instances(pmax, seed):
        C = generate(L, cfg)
        checked += 1
        report = validate(C) + validate_structure(L, C, cfg.branching)
        fails += [f"{L} {cfg}: {m}" for m in report[:3]]
        if generate(L, cfg) != C:
            fails.append(f"{L} {cfg}: not deterministic")
    return checked, fails


def suite_ptree(pmax, rng, seed):
    fails, checked = [], 0
    for L, cfg in _instances(pmax, seed):
        T = build_primitive_tree(L, generate(L, cfg))
        checked += 1
        fails += [f"{L} {cfg}: {m}" for m in validate_ptree(T)[:3]]
    return checked, fails


def suite_fixed_points(trials, rng):
    fails = []
    for i in range(trials):
        T, f = random_involution(rng, 500)
        if check_automorphism(T, f) > 2:
            fails.append(f"trial {i}: constructed map is not an involution")
            continue
        found = brute_force_fixed(T, f)
        kinds = {fixed_point(T, f, v).kind for v in T.colors}
        if not found or fixed_point(T, f) not in found or len(kinds) != 1:
            fails.append(f"trial {i}: fixed locus check failed")
    return trials, fails


def suite_decision_table(pmax, seed, per_cell=3):
    fails, checked = [], 0
    for case, L in sorted(representatives(pmax).items()):
        for gadget in REALIZABLE[case]:
            for k in range(per_cell):
                cfg = GenConfig(1 + k % 2, 2, 2 + k % 2, seed + k)
                C, T, f, start = symmetric_instance(L, cfg, gadget)
                out = analyze(L, T, C, f, start)
                loc = out.locus
                label = T.label(loc.u, loc.v) if loc.kind == "edge" else None
                want = EXPECTED_OUTCOME[(loc.kind, label)]
                checked += 1
                if out.kind != want:
                    fails.append(f"{L} {gadget}: {out.kind} != {want}")
                if out.kind == "Contradiction" and (L.q == 1 or L.p == 2):
                    fails.append(f"{L}: contradiction for an L(p,1) space")
    return checked, fails


def suite_surgery(trials, rng):
    fails = []
    for i in range(trials):
        P = random_pattern(rng, 50)
        trace = reduce_to_disjoint(P)
        kinds = [s.kind for s in trace]
        if len(trace) != P.components() or trace and trace[-1].after.components():
            fails.append(f"trial {i}: wrong trace length")
        if "arc" in kinds and "loop" in kinds[kinds.index("arc"):]:
            fails.append(f"trial {i}: loop removed after an arc")
        for s in trace:
            if pattern_report(s.after) or P.marked in s.region:
                fails.append(f"trial {i}: invalid intermediate pattern")
                break
    return trials, fails


def suite_corridors(pmax, seed):
    fails, checked = [], 0
    c3 = [L for L in lens_grid(pmax) if classify(L) is StructureCase.C3][:5]
    for L in c3:
        C = generate(L, GenConfig(2, 2, 2 + seed % 2, seed))
        for path in C.bridges:
            checked += 1
            c = corridor(C, path[0], path[-1])
            if c.triangles != strip_triangles(path) or not is_bridge(C, c):
                fails.append(f"{L}: bridge {path} not recovered")
    return checked, fails


def run_verify(pmax=30, seed=0, trials=100):
    suites = {
        "classify": lambda rng: suite_classify(pmax, rng),
        "lens": lambda rng: suite_lens(pmax, rng),
        "generator": lambda rng: suite_generator(pmax, rng, seed),
        "ptree": lambda rng: suite_ptree(pmax, rng, seed),
        "fixed_points": lambda rng: suite_fixed_points(trials, rng),
        "decision_table": lambda rng: suite_decision_table(pmax, seed),
        "surgery": lambda rng: suite_surgery(trials, rng),
        "corridors": lambda rng: suite_corridors(pmax, seed),
    }
    summary = {"pmax": pmax, "seed": seed, "trials": trials, "suites": {}}
    for name, run in suites.items():
        checked, fails = run(module_rng(seed, f"verify/{name}"))
        summary["suites"][name] = {"passed": not fails, "checked": checked, "failures": fails[:20]}
    summary["passed"] = all(s["passed"] for s in summary["suites"].values())
    return summary
