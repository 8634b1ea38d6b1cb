"""Compare canonical generator degrees with socle degrees of the Artinian reduction.

For a Cohen-Macaulay simplicial semigroup ring, killing the ray monomials leaves
a finite-dimensional algebra whose socle sits in degrees d - deg(w) for the
canonical generators w.  This prints both sides for every plane fixture.

    python scripts/socle_levels.py
"""

from semigroup_rings import lattice_core as lc
from semigroup_rings.canonical import canonical_generators
from semigroup_rings.families import fixture_catalog
from semigroup_rings.invariants import h_vector
from semigroup_rings.semigroup import build_semigroup, elements_of_degree
from semigroup_rings.staircase import certified_staircase, is_cohen_macaulay, staircase_member


def socle_degrees(S, T, top):
    def divisible(x):
        return any(staircase_member(T, lc.sub(x, e)) for e in T.rays)

    basis = [(i, x) for i in range(top + 1) for x in elements_of_degree(S, i) if not divisible(x)]
    return sorted(i for i, b in basis if all(divisible(lc.add(b, g)) for g in S.generators))


def main():
    for f in fixture_catalog():
        d = f.document
        S = build_semigroup(d["generators"], d["degrees"], d["name"])
        if len(S.cone.extremal_rays) != S.dim:
            continue
        T = certified_staircase(S)
        if not is_cohen_macaulay(T):
            continue
        h = h_vector(S)
        M = canonical_generators(T, h)
        soc = socle_degrees(S, T, h.socle_degree + 1)
        print(f"{S.name:24s} canonical degrees {list(M.degrees)}  d - socle degrees {sorted(S.dim - s for s in soc)}")


if __name__ == "__main__":
    main()
