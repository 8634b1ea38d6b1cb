"""Canonical module of a Cohen-Macaulay simplicial semigroup ring.

The canonical module is realized inside ZS as W = -(C_1 ∩ ... ∩ C_d), where
C_i collects the group elements that never meet S after translation along
the i-th facet.  On each coset W is a shifted orthant, so its minimal
generators are among finitely many apices.
"""

from dataclasses import dataclass
from math import comb

from . import lattice_core as lc
from .errors import SemigroupError
from .semigroup import elements_of_degree
from .staircase import facet_c_set_member, is_cohen_macaulay


@dataclass(frozen=True)
class CanonicalModule:
    generators: tuple
    degrees: tuple
    source: str = "computed"

    @property
    def type(self):
        return len(self.generators)

    @property
    def a_invariant(self):
        return -min(self.degrees)


def in_canonical(T, w):
    """w lies in W iff -w is in every facet C-set."""
    neg = tuple(-x for x in w)
    try:
        return all(facet_c_set_member(T, i, neg) for i in range(T.dim))
    except SemigroupError as err:
        if err.code == "NOT_IN_GROUP":
            return False
        raise


def canonical_apices(T):
    """Apex of W on each coset: -(residue + thresholds.e) + (1,...,1).e."""
    ones = T.frame.combine((1,) * T.dim)
    out = []
    for p in T.residues:
        b = T.point(p, T.thresholds(p))
        out.append(lc.add(tuple(-x for x in b), ones))
    return sorted(out)


def _in_box(T, w, box):
    _, y = T.frame.reduce(w)
    return all(lo <= c <= hi for c, (lo, hi) in zip(y, box))


def canonical_generators(T, h=None, search_box=None):
    S = T.semigroup
    if not is_cohen_macaulay(T):
        raise SemigroupError("NOT_CM", "canonical module needs a Cohen-Macaulay ring")
    candidates = canonical_apices(T)
    if h is not None:
        lo, hi = T.dim - h.socle_degree, T.dim
        candidates = [w for w in candidates if lo <= S.degree(w) <= hi]
    if search_box is not None:
        candidates = [w for w in candidates if _in_box(T, w, search_box)]
    gens = [w for w in candidates if not any(in_canonical(T, lc.sub(w, g)) for g in S.generators)]
    gens.sort(key=lambda w: (S.degree(w), w))
    M = CanonicalModule(tuple(gens), tuple(int(S.degree(w)) for w in gens))
    if h is not None and not canonical_hilbert_check(M, T, h):
        raise SemigroupError("BOX_TOO_SMALL", "canonical generators fail the Hilbert series check")
    if not gens:
        raise SemigroupError("BOX_TOO_SMALL", "no canonical generator found")
    return M


def external_canonical(S, vectors):
    gens = sorted((tuple(v) for v in vectors), key=lambda w: (S.degree(w), w))
    for w in gens:
        if not lc.group_contains(S.group, w):
            raise SemigroupError("NOT_IN_GROUP", f"canonical generator {w} is not in ZS")
    return CanonicalModule(tuple(gens), tuple(int(S.degree(w)) for w in gens), source="external")


def module_degree_count(S, generators, i):
    """Number of elements of degree i in the union of w + S over the generators."""
    seen = set()
    for w in generators:
        k = i - int(S.degree(w))
        if k >= 0:
            seen.update(lc.add(w, x) for x in elements_of_degree(S, k))
    return len(seen)


def expected_canonical_counts(h, dim, upto):
    """Coefficients of t^(d-s) (h_s + ... + h_0 t^s) / (1-t)^d for degrees d-s .. upto."""
    s = h.socle_degree
    rev = list(reversed(h.entries))
    out = []
    for i in range(dim - s, upto + 1):
        k = i - (dim - s)
        out.append(sum(rev[j] * comb(k - j + dim - 1, dim - 1) for j in range(min(k, s) + 1)))
    return out


def canonical_hilbert_check(M, T, h):
    S = T.semigroup
    d = T.dim
    upto = d + 2
    expected = expected_canonical_counts(h, d, upto)
    got = [module_degree_count(S, M.generators, i) for i in range(d - h.socle_degree, upto + 1)]
    return got == expected


def is_gorenstein(M):
    return M.type == 1


def is_level(M):
    return len(set(M.degrees)) == 1
