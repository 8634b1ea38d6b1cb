"""Exact integer/rational linear algebra for lattices and polyhedral cones.

Everything here works on plain tuples of Python ints (or ``Fraction``), so no
step can overflow or round.  Dimensions are tiny (d <= 4) and the cone
algorithms are the brute-force ones: Fourier-Motzkin for feasibility and
subset enumeration for facets.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import floor, gcd

from .errors import SemigroupError


def _check_dims(vectors, d=None):
    for v in vectors:
        if d is None:
            d = len(v)
        elif len(v) != d:
            raise SemigroupError("DIMENSION_MISMATCH", f"expected length {d}, got {len(v)}")
    return d


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a):
    return tuple(c * x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------- lattices


@dataclass(frozen=True)
class GroupLattice:
    """Integer span of a finite set of vectors, kept as a row HNF basis."""

    basis: tuple
    rank: int
    ambient_dim: int


def hermite_basis(vectors):
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        raise SemigroupError("EMPTY_INPUT", "no vectors")
    d = _check_dims(vectors)
    rows = [list(v) for v in vectors]
    r = 0
    for col in range(d):
        found = False
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            found = True
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[piv] = rows[piv], rows[r]
            clean = True
            for i in range(r + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // rows[r][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][col]:
                        clean = False
            if clean:
                break
        if not found:
            continue
        if rows[r][col] < 0:
            rows[r] = [-a for a in rows[r]]
        p = rows[r][col]
        for i in range(r):
            q = rows[i][col] // p
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    basis = tuple(tuple(row) for row in rows[:r])
    return GroupLattice(basis=basis, rank=r, ambient_dim=d)


def lattice_coords(L, v):
    """Integer coefficients of ``v`` in the HNF basis, or None if v is not in L."""
    if len(v) != L.ambient_dim:
        raise SemigroupError("DIMENSION_MISMATCH", f"expected length {L.ambient_dim}")
    rem = list(v)
    coeffs = []
    for row in L.basis:
        col = next(j for j, x in enumerate(row) if x)
        if any(rem[j] for j in range(col)):
            return None
        q, r = divmod(rem[col], row[col])
        if r:
            return None
        coeffs.append(q)
        if q:
            rem = [a - q * b for a, b in zip(rem, row)]
    if any(rem):
        return None
    return tuple(coeffs)


def group_contains(L, v):
    return lattice_coords(L, v) is not None


# ---------------------------------------------------- rational linear algebra


def rref(rows, ncols):
    """Reduced row echelon form over Q.  Returns (rows, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(vectors):
    if not vectors:
        return 0
    return len(rref(vectors, len(vectors[0]))[1])


def nullspace(rows, ncols):
    """Basis of {x in Q^ncols : row . x = 0 for every row}, scaled to primitive integers."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        out.append(integral_primitive(x))
    return out


def integral_primitive(x):
    den = 1
    for q in x:
        den = den * Fraction(q).denominator // gcd(den, Fraction(q).denominator)
    return primitive(tuple(int(Fraction(q) * den) for q in x))


def solve_rational(rows, rhs):
    """One rational solution of rows . x = rhs (free variables set to 0), or None."""
    n = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def fm_feasible(columns, target):
    """Decide whether ``target`` is a nonnegative rational combination of ``columns``.

    Equalities are solved first; the remaining sign constraints on the free
    variables go through Fourier-Motzkin elimination.
    """
    D = len(target)
    m = len(columns)
    if m == 0:
        return all(t == 0 for t in target)
    aug = [[columns[j][i] for j in range(m)] + [target[i]] for i in range(D)]
    red, pivots = rref(aug, m + 1)
    if m in pivots:
        return False
    free = [j for j in range(m) if j not in pivots]
    # inequalities coeffs . y <= rhs over the free variables y
    ineqs = []
    for f in range(len(free)):
        c = [Fraction(0)] * len(free)
        c[f] = Fraction(-1)
        ineqs.append((tuple(c), Fraction(0)))
    for row in red:
        # x_p = row[m] - sum row[f] y_f >= 0
        ineqs.append((tuple(row[f] for f in free), row[m]))
    for t in range(len(free)):
        pos, neg, keep = [], [], {}
        for c, b in ineqs:
            if c[t] > 0:
                pos.append((c, b))
            elif c[t] < 0:
                neg.append((c, b))
            else:
                _keep_min(keep, c, b)
        for cp, bp in pos:
            for cn, bn in neg:
                a, b = cp[t], -cn[t]
                c = tuple(x / a + y / b for x, y in zip(cp, cn))
                _keep_min(keep, c, bp / a + bn / b)
        ineqs = []
        for c, b in keep.items():
            if all(x == 0 for x in c):
                if b < 0:
                    return False
            else:
                ineqs.append((c, b))
    return all(b >= 0 for c, b in ineqs)


def _keep_min(store, c, b):
    lead = next((abs(x) for x in c if x != 0), None)
    if lead is not None:
        c = tuple(x / lead for x in c)
        b = b / lead
    if c not in store or b < store[c]:
        store[c] = b


# -------------------------------------------------------------------- cones


@dataclass(frozen=True)
class Cone:
    """A pointed rational cone given by rays, facet normals and span equations."""

    extremal_rays: tuple
    facet_normals: tuple
    equations: tuple
    dim: int

    def contains(self, v):
        return cone_membership(self, v)


def cone_membership(cone, v):
    if cone.extremal_rays and len(v) != len(cone.extremal_rays[0]):
        raise SemigroupError("DIMENSION_MISMATCH", "vector length differs from cone")
    if any(dot(eq, v) != 0 for eq in cone.equations):
        return False
    return all(dot(n, v) >= 0 for n in cone.facet_normals)


def extremal_rays(generators):
    generators = [tuple(g) for g in generators]
    if not generators:
        raise SemigroupError("EMPTY_INPUT", "no generators")
    D = _check_dims(generators)
    dirs = sorted({primitive(g) for g in generators if any(g)})
    if not dirs:
        return Cone((), (), tuple(nullspace([], D)), 0)
    # pointed iff 0 is not a convex combination of the directions
    lifted = [d + (1,) for d in dirs]
    if fm_feasible(lifted, (0,) * D + (1,)):
        raise SemigroupError("NOT_POINTED", "a nontrivial nonnegative combination vanishes")
    rays = [g for g in dirs if not fm_feasible([h for h in dirs if h != g], g)]
    return _cone_from_rays(rays, D)


def _cone_from_rays(rays, D):
    basis = []
    for ray in rays:
        if rank(basis + [ray]) > len(basis):
            basis.append(ray)
    r = len(basis)
    normals = set()
    for subset in combinations(rays, r - 1):
        if rank(list(subset)) != r - 1:
            continue
        # normal n = sum c_k basis_k, orthogonal to the subset
        rows = [[dot(s, b) for b in basis] for s in subset]
        ns = nullspace(rows, r)
        if len(ns) != 1:
            continue
        c = ns[0]
        n = tuple(sum(c[k] * basis[k][i] for k in range(r)) for i in range(D))
        vals = [dot(n, ray) for ray in rays]
        if all(x >= 0 for x in vals):
            normals.add(primitive(n))
        elif all(x <= 0 for x in vals):
            normals.add(primitive(tuple(-x for x in n)))
    equations = nullspace([list(b) for b in basis], D) if basis else nullspace([], D)
    return Cone(
        extremal_rays=tuple(rays),
        facet_normals=tuple(sorted(normals)),
        equations=tuple(sorted(equations)),
        dim=r,
    )


# ------------------------------------------------------------ ray frames


class RayFrame:
    """Coordinates with respect to linearly independent ray vectors."""

    def __init__(self, rays):
        self.rays = tuple(tuple(r) for r in rays)
        D = len(self.rays[0])
        _, pivots = rref([list(r) for r in self.rays], D)
        if len(pivots) != len(self.rays):
            raise SemigroupError("NOT_SIMPLICIAL", "rays are linearly dependent")
        self.cols = tuple(pivots)
        sub_m = [[Fraction(r[c]) for c in self.cols] for r in self.rays]
        self._inv = _inverse(sub_m)

    def coords(self, v):
        """Rational lambda with sum lambda_i ray_i == v, or None outside the span."""
        n = len(self.rays)
        w = [v[c] for c in self.cols]
        lam = tuple(sum(w[k] * self._inv[k][i] for k in range(n)) for i in range(n))
        back = [sum(lam[i] * self.rays[i][j] for i in range(n)) for j in range(len(v))]
        if any(b != x for b, x in zip(back, v)):
            return None
        return lam

    def combine(self, coeffs):
        out = [0] * len(self.rays[0])
        for c, r in zip(coeffs, self.rays):
            if c:
                for j, x in enumerate(r):
                    out[j] += c * x
        return tuple(out)

    def reduce(self, v):
        """Split ``v`` as residue + z . rays with the residue in the half-open parallelepiped."""
        lam = self.coords(v)
        if lam is None:
            return None
        z = tuple(floor(x) for x in lam)
        return sub(tuple(v), self.combine(z)), z


def _inverse(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug, 2 * n)
    return [row[n:] for row in red]


def coset_system(L, rays):
    rays = [tuple(r) for r in rays]
    _check_dims(rays, L.ambient_dim)
    if len(rays) != L.rank or rank(rays) != L.rank:
        raise SemigroupError("NOT_SIMPLICIAL", f"{len(rays)} rays for a rank {L.rank} lattice")
    coords = []
    for r in rays:
        c = lattice_coords(L, r)
        if c is None:
            raise SemigroupError("RAY_NOT_IN_GROUP", f"{r} not in lattice")
        coords.append(c)
    H = hermite_basis(coords).basis
    diag = [H[i][i] for i in range(len(H))]
    frame = RayFrame(rays)
    reps = set()
    for c in product(*(range(x) for x in diag)):
        amb = tuple(sum(c[k] * L.basis[k][j] for k in range(L.rank)) for j in range(L.ambient_dim))
        reps.add(frame.reduce(amb)[0])
    return sorted(reps)
