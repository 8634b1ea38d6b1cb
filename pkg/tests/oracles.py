"""Brute-force reference computations used as test oracles.

Nothing here calls the package's membership, staircase or canonical code.
Elements are produced by adding generators layer by layer, so every answer
is correct up to the enumerated degree.
"""

from fractions import Fraction
from itertools import product
from math import comb


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class BruteSemigroup:
    """All elements of S up to a fixed degree, built from the generators."""

    def __init__(self, gens, degrees, top):
        self.gens = [tuple(g) for g in gens]
        self.degrees = list(degrees)
        self.top = top
        self.layers = [{(0,) * len(self.gens[0])}]
        for i in range(1, top + 1):
            layer = set()
            for g, dg in zip(self.gens, self.degrees):
                if dg <= i:
                    layer.update(add(x, g) for x in self.layers[i - dg])
            self.layers.append(layer)
        self.elements = set().union(*self.layers)
        self.degree_of = {x: i for i, layer in enumerate(self.layers) for x in layer}

    def counts(self):
        return [len(layer) for layer in self.layers]

    def __contains__(self, v):
        return tuple(v) in self.elements


def h_from_counts(counts, d):
    """Multiply the Hilbert prefix by (1-t)^d and strip the trailing zeros."""
    out = []
    for i in range(len(counts)):
        out.append(sum((-1) ** j * comb(d, j) * counts[i - j] for j in range(min(d, i) + 1)))
    while out and out[-1] == 0:
        out.pop()
    return out


def artinian_basis(B, rays, upto):
    """Elements not divisible by any ray generator, by degree."""
    return {
        x for i in range(upto + 1) for x in B.layers[i]
        if not any(sub(x, e) in B for e in rays)
    }


def socle(B, rays, upto):
    """Basis elements b with b + g divisible by a ray for every generator g."""
    basis = artinian_basis(B, rays, upto)
    return sorted(
        b for b in basis
        if all(any(sub(add(b, g), e) in B for e in rays) for g in B.gens)
    )


def ray_c_set(B, e, w, reach):
    """w + m.e stays outside S for m = 0 .. reach (within enumerated range)."""
    return all(add(w, tuple(m * c for c in e)) not in B for m in range(reach + 1))


def box_points(d, lo, hi):
    return product(range(lo, hi + 1), repeat=d)


def rational_degree(gens, degrees, v):
    """Degree of v for a grading on a 2-dimensional group (solve on two generators)."""
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            (a, b), (c, d) = gens[i], gens[j]
            det = a * d - b * c
            if det:
                x = Fraction(v[0] * d - v[1] * c, det)
                y = Fraction(a * v[1] - b * v[0], det)
                return x * degrees[i] + y * degrees[j]
    raise ValueError("rank one")
