"""Trace ideals of monomial (fractional) ideals of k[S].

A monomial ideal is given by its minimal exponent set V.  Its trace is
I * I^{-1}, and since k[S] is a domain graded by ZS a monomial x^a lies in it
exactly when a = u + v with v in V and u + V contained in S.  The same
argument works for every a in S, not only for generators.
"""

from . import lattice_core as lc
from .errors import SemigroupError
from .semigroup import elements_of_degree, extremal_generators, member


def anti_ideal_member(S, V, u):
    """u + v in S for every v in V."""
    if not lc.group_contains(S.group, u):
        raise SemigroupError("NOT_IN_GROUP", f"{tuple(u)} is not in ZS")
    return all(member(S, lc.add(u, v)) for v in V)


def trace_witness(S, V, a):
    """A pair (u, v) with a = u + v and u + V inside S, or None."""
    if not member(S, a):
        raise SemigroupError("NOT_IN_SEMIGROUP", f"{tuple(a)} is not in S")
    for v in V:
        u = lc.sub(a, v)
        if anti_ideal_member(S, V, u):
            return u, v
    return None


def trace_contains(S, V, a):
    return trace_witness(S, V, a) is not None


def is_nearly_gorenstein(S, V):
    return all(trace_contains(S, V, a) for a in S.generators)


def ideal_degree_dimension(S, V, b):
    """dim_k of the degree-b piece of the ideal generated by x^v, v in V."""
    seen = set()
    for v in V:
        k = b - int(S.degree(v))
        if k >= 0:
            seen.update(lc.add(v, x) for x in elements_of_degree(S, k))
    return len(seen)


def minimalize(S, vectors):
    """Drop every vector that is another one plus a nonzero element of S."""
    vs = sorted(set(tuple(v) for v in vectors), key=lambda w: (S.degree(w), w))
    out = []
    for v in vs:
        if not any(member(S, lc.sub(v, w)) for w in out):
            out.append(v)
    return out


def trace_degree_bound_check(S, V, T=None):
    """Depth >= 2 and every extremal monomial in tr(I) force dim I_b >= 2.

    Returns "PASS", "FAIL" or "VACUOUS" (hypothesis not met).
    """
    from .semigroup import is_semi_standard
    from .staircase import certified_staircase, depth_at_least_two

    if len(V) < 2:
        raise SemigroupError("PRINCIPAL_IDEAL", "needs at least two generators")
    if is_semi_standard(S) != "yes":
        return "VACUOUS"
    if T is None:
        T = certified_staircase(S)
    if not depth_at_least_two(T):
        return "VACUOUS"
    if not all(trace_contains(S, V, e) for e in extremal_generators(S)):
        return "VACUOUS"
    b = min(int(S.degree(v)) for v in V)
    return "PASS" if ideal_degree_dimension(S, V, b) >= 2 else "FAIL"
