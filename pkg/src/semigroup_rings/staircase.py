"""Per-coset staircase encoding of a simplicial graded affine semigroup.

With degree-one extremal generators e_1..e_d, every element of the group ZS
splits uniquely as p + sum z_i e_i with p a residue in the half-open
parallelepiped.  For each residue p the set M_p = {m in N^d : p + m.e in S}
is an up-set, so it is described by its finite antichain Min(M_p).
"""

from dataclasses import dataclass, field, replace
from itertools import product

from . import lattice_core as lc
from .errors import SemigroupError
from .semigroup import _layer, extremal_generators, member


@dataclass(frozen=True, eq=False)
class Staircase:
    rays: tuple
    residues: tuple
    min_elements: dict  # residue -> tuple of minimal ray-coordinate vectors
    frame: lc.RayFrame
    residue_degree: dict  # residue -> degree of the residue vector
    horizon: int
    semigroup: object = field(default=None, repr=False)
    certified: bool = False

    @property
    def dim(self):
        return len(self.rays)

    def point(self, p, m):
        return lc.add(p, self.frame.combine(m))

    def thresholds(self, p):
        """Per-axis minimum of the minimal elements of M_p."""
        mins = self.min_elements[p]
        return tuple(min(mu[j] for mu in mins) for j in range(self.dim))


def simplicial_rays(S):
    """The degree-one extremal generators, checked to form a simplicial frame."""
    rays = S.cone.extremal_rays
    if len(rays) != S.dim:
        raise SemigroupError("NOT_SIMPLICIAL", f"{len(rays)} extremal rays in dimension {S.dim}")
    ext = extremal_generators(S)
    if len(ext) != len(rays) or any(S.degree_of(e) != 1 for e in ext):
        raise SemigroupError("RAYS_NOT_DEGREE_ONE", "extremal rays need degree-one generators")
    by_ray = {lc.primitive(e): e for e in ext}
    return tuple(by_ray[r] for r in rays)


def enumerate_staircase(S, horizon):
    """Minimal elements seen among all elements of degree <= horizon (not yet certified)."""
    rays = simplicial_rays(S)
    frame = lc.RayFrame(rays)
    residues = lc.coset_system(S.group, rays)
    enumerated = set()
    for i in range(horizon + 1):
        enumerated |= _layer(S, i)
    mins = {p: [] for p in residues}
    for x in enumerated:
        # minimal iff no ray can be peeled off inside S
        if any(lc.sub(x, e) in enumerated for e in rays):
            continue
        p, z = frame.reduce(x)
        mins[p].append(z)
    T = Staircase(
        rays=rays,
        residues=tuple(residues),
        min_elements={p: tuple(sorted(v)) for p, v in mins.items()},
        frame=frame,
        residue_degree={p: int(S.degree(p)) for p in residues},
        horizon=horizon,
        semigroup=S,
    )
    return T


def build_staircase(S, horizon):
    T = enumerate_staircase(S, horizon)
    if not certify_staircase(T, S):
        raise SemigroupError("HORIZON_TOO_SMALL", f"staircase not certified at horizon {horizon}")
    return replace(T, certified=True)


def certified_staircase(S, horizon=None, retries=3):
    """Build with an escalating horizon until the certificate holds."""
    if horizon is None:
        horizon = 2 * max(S.degrees) + 2
    for attempt in range(retries + 1):
        try:
            return build_staircase(S, horizon)
        except SemigroupError as err:
            if err.code != "HORIZON_TOO_SMALL" or attempt == retries:
                raise
            horizon *= 2


def _represented(T, v):
    red = T.frame.reduce(v)
    if red is None:
        return False
    p, z = red
    mins = T.min_elements.get(p)
    if mins is None:
        return False
    return any(all(a <= b for a, b in zip(mu, z)) for mu in mins)


def certify_staircase(T, S):
    # (i) every minimal point is a genuine element
    for p, mins in T.min_elements.items():
        for mu in mins:
            if not member(S, T.point(p, mu)):
                return False
    # (ii) 0 and the generators are represented
    if not _represented(T, (0,) * S.ambient_dim):
        return False
    if not all(_represented(T, g) for g in S.generators):
        return False
    # (iii) closure of minimal points under adding generators
    for p, mins in T.min_elements.items():
        for mu in mins:
            x = T.point(p, mu)
            for g in S.generators:
                if not _represented(T, lc.add(x, g)):
                    return False
    return True


def staircase_member(T, v):
    return _represented(T, tuple(v))


def _split(T, w):
    red = T.frame.reduce(tuple(w))
    if red is None or red[0] not in T.min_elements:
        raise SemigroupError("NOT_IN_GROUP", f"{tuple(w)} is not in ZS")
    return red


def c_set_member(T, i, w):
    """True iff w + m.e_i lies outside S for every m >= 0."""
    p, z = _split(T, w)
    return all(any(mu[j] > z[j] for j in range(T.dim) if j != i) for mu in T.min_elements[p])


def facet_c_set_member(T, omit, w):
    """True iff w + F never meets S, F the facet spanned by every ray except ``omit``."""
    p, z = _split(T, w)
    return all(mu[omit] > z[omit] for mu in T.min_elements[p])


def _axis_values(thresholds, lower=None):
    vals = set()
    for t in thresholds:
        vals.update((t - 1, t))
    if lower is not None:
        vals = {max(v, lower) for v in vals} | {lower}
    return sorted(vals)


def _region_points(T, p, lower=None):
    """One representative per cell of the threshold grid for coset p."""
    mins = T.min_elements[p]
    axes = [_axis_values({mu[j] for mu in mins} | {0}, lower) for j in range(T.dim)]
    return product(*axes)


def is_cohen_macaulay(T):
    """Every z of ZS lies in S or in one of the facet C-sets."""
    if not T.certified:
        raise SemigroupError("NOT_CERTIFIED", "staircase not certified")
    for p in T.residues:
        mins = T.min_elements[p]
        for z in _region_points(T, p):
            in_s = any(all(a <= b for a, b in zip(mu, z)) for mu in mins)
            in_c = any(all(mu[i] > z[i] for mu in mins) for i in range(T.dim))
            if not (in_s or in_c):
                return False
    return True


def depth_at_least_two(T):
    if not T.certified:
        raise SemigroupError("NOT_CERTIFIED", "staircase not certified")
    if T.dim != 2:
        raise SemigroupError("UNSUPPORTED_DIMENSION", "depth criterion implemented for d = 2")
    for p in T.residues:
        mins = T.min_elements[p]
        for z in _region_points(T, p, lower=0):
            if any(mu[0] <= z[0] and mu[1] <= z[1] for mu in mins):
                continue
            on_line = all(mu[1] > z[1] for mu in mins) or all(mu[0] > z[0] for mu in mins)
            if not on_line:
                return False
    return True


def holes(T, degree_bound):
    """Elements of the normalization minus S of degree <= degree_bound."""
    out = []
    for p in T.residues:
        budget = degree_bound - T.residue_degree[p]
        if budget < 0:
            continue
        mins = T.min_elements[p]
        for z in product(range(budget + 1), repeat=T.dim):
            if sum(z) > budget:
                continue
            if not any(all(a <= b for a, b in zip(mu, z)) for mu in mins):
                out.append(T.point(p, z))
    return sorted(out)
