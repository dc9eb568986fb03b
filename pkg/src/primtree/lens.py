"""Lens-space parameters.

``L(p, q)`` and ``L(p, q')`` are homeomorphic iff ``q' = +-q^(+-1) (mod p)``.
Every pair is stored in its canonical form: the smallest representative
``q`` of its class, which always satisfies ``1 <= q <= p/2``.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import LensError


class StructureCase(str, Enum):
    """Shape of the primitive disk complex, a function of ``(p, q)`` only."""

    C1a = "C1a"  # p = 2: tree, all edges type2
    C1b = "C1b"  # q = 1, p >= 4: tree, all edges type1
    C1c = "C1c"  # tree mixing type0 and type1 edges
    C2a = "C2a"  # p = 3: triangles glued at vertices, all edges type1
    C2b = "C2b"  # p = 5: strips of triangles
    C2c = "C2c"  # p >= 7 with q = 2 or p = 2q + 1
    C3 = "C3"  # p != +-1 (mod q): tree components joined by bridges

    def __str__(self):
        return self.value


TREE_CASES = frozenset({StructureCase.C1a, StructureCase.C1b, StructureCase.C1c})
TWO_DIM_CASES = frozenset({StructureCase.C2a, StructureCase.C2b, StructureCase.C2c})


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
            raise LensError(f"lens parameters must be integers, got ({p!r}, {q!r})")
        if p < 2:
            raise LensError(f"p must be at least 2, got {p}")
        if not 1 <= q <= p / 2:
            raise LensError(f"q must satisfy 1 <= q <= p/2, got ({p}, {q}); use normalize()")
        if gcd(p, q) != 1:
            raise LensError(f"p and q must be coprime, got ({p}, {q})")

    def __str__(self):
        return f"L({self.p},{self.q})"

    @property
    def case(self):
        return classify(self)


def _check_pair(p, q):
    if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
        raise LensError(f"lens parameters must be integers, got ({p!r}, {q!r})")
    if p < 2:
        raise LensError(f"p must be at least 2, got {p}")
    r = q % p
    if r == 0:
        raise LensError(f"q must be nonzero mod p, got ({p}, {q})")
    if gcd(p, r) != 1:
        raise LensError(f"p and q must be coprime, got ({p}, {q})")
    return r


def equivalent_qs(p, q):
    """All residues ``+-q^(+-1) mod p`` (the homeomorphism class of ``q``)."""
    r = _check_pair(p, q)
    inv = pow(r, -1, p)
    return frozenset({r, (-r) % p, inv, (-inv) % p})


def normalize(p, q):
    """Canonical ``LensSpace`` for any representative ``q`` (reduced mod p)."""
    return LensSpace(p, min(equivalent_qs(p, q)))


def are_homeomorphic(a, b):
    pa, qa = a
    pb, qb = b
    na, nb = normalize(pa, qa), normalize(pb, qb)
    return na == nb


def classify(lens):
    p, q = lens.p, lens.q
    if p == 2:
        return StructureCase.C1a
    if p == 3:
        return StructureCase.C2a
    if q == 1:
        return StructureCase.C1b
    if p % q not in (1, q - 1):
        return StructureCase.C3
    if q == 2 or p == 2 * q + 1:
        return StructureCase.C2b if p == 5 else StructureCase.C2c
    return StructureCase.C1c


def as_lens(value):
    """Accept a ``LensSpace`` or a ``(p, q)`` pair with any representative ``q``."""
    if isinstance(value, LensSpace):
        return value
    p, q = value
    return normalize(p, q)
