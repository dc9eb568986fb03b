"""Case analysis for an involution of a primitive tree.

Given the fixed locus of the involution, decide whether it certifies an
invariant primitive disk in V, an invariant common dual disk in W, or is
impossible for a covering involution (which acts on ``H_1 = Z/p`` as -1).
"""

from dataclasses import dataclass

from .automorphism import FixedVertex, check_automorphism, fixed_point
from .errors import AutomorphismError, ImpossibleInput, StructureMismatch
from .lens import as_lens, classify, normalize
from .ptree import CASE_LABELS


@dataclass(frozen=True)
class CertificateV:
    vertex: int
    locus: object = None

    kind = "CertificateV"


@dataclass(frozen=True)
class CertificateW:
    """Fixed common dual disk(s) of a swapped type1 or type2 edge."""

    edge: tuple
    duals: int
    locus: object = None

    kind = "CertificateW"


@dataclass(frozen=True)
class Contradiction:
    reason: str
    locus: object = None

    kind = "Contradiction"


@dataclass(frozen=True)
class Verdict:
    admissible: bool
    reason: str


def resolve_white_vertex(T, C, f, w):
    """Lowest-id corner of ``w``'s triangle fixed by ``f``."""
    t = T.sources.get(w)
    if T.colors.get(w) != "white" or t is None or tuple(sorted(t)) not in C.triangles:
        raise ValueError(f"{w} is not a white vertex with a source triangle")
    if f[w] != w:
        raise ValueError(f"white vertex {w} is not fixed")
    fixed = sorted(v for v in t if f[v] == v)
    if not fixed:
        raise ImpossibleInput(f"map fixes no corner of triangle {t}; it cannot have order <= 2")
    return fixed[0]


def swap_admissible(lens, label):
    L = as_lens(lens)
    if label in ("type1", "type2"):
        return Verdict(True, f"{label} edges have common dual disks fixed by the involution")
    if label not in ("type0", "bridge"):
        raise ValueError(f"cannot judge a swap of a {label!r} edge")
    # a swap of a type0 edge or a bridge acts on H_1 as x -> qx; the covering
    # involution acts as x -> -x, forcing q = -1 (mod p), i.e. L = L(p, 1)
    forced = normalize(L.p, -1)
    if label in CASE_LABELS[classify(forced)]:
        return Verdict(True, f"{label} edges occur for {forced}")
    return Verdict(False, (
        f"swapping the ends of a {label} edge makes the involution act on H_1 = Z/{L.p} "
        f"as x -> {L.q}x, while the covering involution acts as x -> -x; hence "
        f"q = -1 (mod {L.p}) and the space is {forced}, whose primitive tree "
        f"has neither type0 edges nor bridges"))


def analyze(lens, T, C, f, start=None):
    L = as_lens(lens)
    if T.case is not None and T.case is not classify(L):
        raise StructureMismatch(f"tree was built for case {T.case}, not {classify(L)}")
    order = check_automorphism(T, f)
    if order > 2:
        raise AutomorphismError(f"map has order {order}; an involution is required")
    locus = fixed_point(T, f, start)
    if isinstance(locus, FixedVertex):
        v = locus.v
        if T.colors[v] == "white":
            v = resolve_white_vertex(T, C, f, v)
        return CertificateV(v, locus)
    label = T.label(locus.u, locus.v)
    verdict = swap_admissible(L, label)
    if not verdict.admissible:
        return Contradiction(verdict.reason, locus)
    return CertificateW((locus.u, locus.v), 2 if label == "type2" else 1, locus)


def outcome_to_dict(outcome):
    out = {"outcome": outcome.kind, "locus": outcome.locus.to_dict() if outcome.locus else None,
           "reason": None}
    if isinstance(outcome, CertificateV):
        out["vertex"] = outcome.vertex
    elif isinstance(outcome, CertificateW):
        out["certificate"] = {"edge": list(outcome.edge), "duals": outcome.duals}
    else:
        out["reason"] = outcome.reason
    return out
