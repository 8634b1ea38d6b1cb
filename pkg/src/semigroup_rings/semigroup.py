"""Graded affine semigroups S in N^d and their basic combinatorics."""

import json
from dataclasses import dataclass, field

from . import lattice_core as lc
from .errors import SemigroupError

DEFAULT_MULTIPLE_BOUND = 64


@dataclass(frozen=True)
class Grading:
    """Degrees of the generators together with the linear functional realizing them."""

    degree_per_generator: tuple
    functional: tuple  # Fractions; lambda(v) = functional . v

    def __call__(self, v):
        return sum(c * x for c, x in zip(self.functional, v))


@dataclass(frozen=True, eq=False)
class AffineSemigroup:
    ambient_dim: int
    generators: tuple  # minimal generating set, lexicographically sorted
    grading: Grading
    group: lc.GroupLattice
    cone: lc.Cone
    name: str = ""
    _member_cache: dict = field(default_factory=dict, repr=False)
    _layers: list = field(default_factory=list, repr=False)

    @property
    def dim(self):
        return self.group.rank

    @property
    def degrees(self):
        return self.grading.degree_per_generator

    def degree(self, v):
        """Degree of a vector; a non-integral value means v is off the group."""
        return self.grading(v)

    def degree_of(self, g):
        return int(self.grading(g))

    def is_standard_graded(self):
        return all(d == 1 for d in self.degrees)

    def to_document(self):
        return {
            "name": self.name,
            "ambient_dim": self.ambient_dim,
            "generators": [list(g) for g in self.generators],
            "degrees": list(self.degrees),
        }


def _solve_functional(gens, degrees, d):
    # look for lambda inside span(G): the restriction to ZS is unique, this picks a canonical extension
    basis = []
    for g in gens:
        if lc.rank(basis + [g]) > len(basis):
            basis.append(g)
    rows = [[lc.dot(g, b) for b in basis] for g in gens]
    coef = lc.solve_rational(rows, list(degrees))
    if coef is None:
        raise SemigroupError("INCONSISTENT_GRADING", "no linear functional matches the degrees")
    return tuple(sum(coef[k] * basis[k][j] for k in range(len(basis))) for j in range(d))


def _in_monoid(gens, degree, v, cache):
    """Depth-first decomposition of ``v`` into ``gens`` (all of positive degree)."""
    if v in cache:
        return cache[v]
    if not any(v):
        return True
    if min(v) < 0:
        return False
    dv = degree(v)
    if dv <= 0 or dv.denominator != 1:
        cache[v] = False
        return False
    ok = False
    for g in gens:
        w = lc.sub(v, g)
        if min(w) >= 0 and degree(w) >= 0 and _in_monoid(gens, degree, w, cache):
            ok = True
            break
    cache[v] = ok
    return ok


def build_semigroup(raw_generators, degrees, name=""):
    raw = [tuple(int(x) for x in g) for g in raw_generators]
    degrees = [int(x) for x in degrees]
    if not raw:
        raise SemigroupError("EMPTY_INPUT", "no generators")
    if len(raw) != len(degrees):
        raise SemigroupError("DIMENSION_MISMATCH", "generators and degrees differ in length")
    d = lc._check_dims(raw)
    if any(x < 0 for g in raw for x in g):
        raise SemigroupError("DIMENSION_MISMATCH", "generator coordinates must be nonnegative")
    if any(x < 1 for x in degrees):
        raise SemigroupError("INCONSISTENT_GRADING", "degrees must be positive")
    functional = _solve_functional(raw, degrees, d)

    def degree(v):
        return sum(c * x for c, x in zip(functional, v))

    # minimize: a generator is redundant iff it lies in the monoid of strictly lower-degree ones
    by_degree = sorted(set(zip(raw, degrees)), key=lambda t: (t[1], t[0]))
    kept = []
    for g, dg in by_degree:
        lower = [h for h, dh in kept if dh < dg]
        if not _in_monoid(lower, degree, g, {}):
            kept.append((g, dg))
    kept.sort()
    gens = tuple(g for g, _ in kept)
    cone = lc.extremal_rays(gens)
    return AffineSemigroup(
        ambient_dim=d,
        generators=gens,
        grading=Grading(tuple(dg for _, dg in kept), functional),
        group=lc.hermite_basis(gens),
        cone=cone,
        name=name,
    )


def semigroup_from_document(doc):
    try:
        gens = doc["generators"]
        degrees = doc["degrees"]
        name = doc.get("name", "")
        d = int(doc["ambient_dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SemigroupError("PARSE_ERROR", f"bad semigroup document: {exc}") from exc
    if any(len(g) != d for g in gens):
        raise SemigroupError("DIMENSION_MISMATCH", "generator length differs from ambient_dim")
    return build_semigroup(gens, degrees, name=name)


def load_document(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SemigroupError("PARSE_ERROR", str(exc)) from exc


def member(S, v):
    v = tuple(v)
    if len(v) != S.ambient_dim:
        raise SemigroupError("DIMENSION_MISMATCH", "vector length differs from ambient_dim")
    cache = S._member_cache
    if v in cache:
        return cache[v]
    if not any(v):
        return True
    dv = S.degree(v)
    if min(v) < 0 or dv <= 0 or dv.denominator != 1:
        ok = False
    elif not lc.group_contains(S.group, v) or not lc.cone_membership(S.cone, v):
        ok = False
    else:
        ok = any(member(S, lc.sub(v, g)) for g in S.generators if min(lc.sub(v, g)) >= 0)
    cache[v] = ok
    return ok


def _layer(S, i):
    layers = S._layers
    if not layers:
        layers.append(frozenset([(0,) * S.ambient_dim]))
    while len(layers) <= i:
        k = len(layers)
        out = set()
        for g, dg in zip(S.generators, S.degrees):
            if dg <= k:
                for x in layers[k - dg]:
                    out.add(lc.add(x, g))
        layers.append(frozenset(out))
    return layers[i]


def elements_of_degree(S, i):
    if i < 0:
        return []
    return sorted(_layer(S, i))


def hilbert_count(S, i):
    return len(_layer(S, i)) if i >= 0 else 0


def min_degree_generators(S):
    m = min(S.degrees)
    return [g for g, dg in zip(S.generators, S.degrees) if dg == m]


def extremal_generators(S):
    """Generators g with N.g a face: the only generator on its extremal ray."""
    out = []
    for ray in S.cone.extremal_rays:
        on_ray = [g for g in S.generators if lc.primitive(g) == ray]
        if len(on_ray) == 1:
            out.append(on_ray[0])
    return sorted(out)


def is_semi_standard(S, multiple_bound=DEFAULT_MULTIPLE_BOUND):
    """Return "yes", "no" or "unknown_within_bound".

    A monomial x^a is integral over k[R_1] iff m.a lies in the monoid of the
    degree-one generators for some m >= 1.
    """
    q = [g for g, dg in zip(S.generators, S.degrees) if dg == 1]
    if not q:
        return "no"
    for a in S.generators:
        if not lc.fm_feasible(q, a):
            return "no"
    cache = {}
    for a, da in zip(S.generators, S.degrees):
        if da == 1:
            continue
        if not any(_in_monoid(q, S.degree, lc.scale(m, a), cache) for m in range(1, multiple_bound + 1)):
            return "unknown_within_bound"
    return "yes"


def extremal_degree_check(S):
    return all(S.degree_of(e) == 1 for e in extremal_generators(S))
