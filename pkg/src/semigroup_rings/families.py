"""The two-parameter nearly Gorenstein family, worked fixtures and a fuzz corpus."""

import random
from dataclasses import dataclass, field

from .errors import SemigroupError
from .semigroup import build_semigroup, semigroup_from_document
from .staircase import certified_staircase, is_cohen_macaulay

# where an expected value comes from
LITERATURE = "literature"  # stated in the source article
ORACLE = "oracle"  # computed by an independent brute-force check
TRIVIAL = "trivial"


@dataclass(frozen=True)
class FamilyParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 2 or not 1 <= self.k <= self.n + 1:
            raise SemigroupError("BAD_PARAMS", f"need n >= 2 and 1 <= k <= n+1, got n={self.n} k={self.k}")


def family_document(n, k):
    p = FamilyParams(n, k)
    low = [(2 * i, 2 * p.n - 2 * i) for i in range(p.n + 1)]
    high = [(2 * j + 2 * p.k - 1, 4 * p.n - 2 * j - 2 * p.k + 1) for j in range(p.n)]
    return {
        "name": f"family_n{p.n}_k{p.k}",
        "ambient_dim": 2,
        "generators": [list(g) for g in low + high],
        "degrees": [1] * len(low) + [2] * len(high),
    }


def family_snk(n, k):
    return semigroup_from_document(family_document(n, k))


@dataclass
class Expectation:
    value: object
    source: str
    note: str = ""
    disputed: bool = False  # literature value contradicted by computation


@dataclass
class Fixture:
    name: str
    document: dict
    expected: dict = field(default_factory=dict)


def _doc(name, gens, degrees):
    return {
        "name": name,
        "ambient_dim": len(gens[0]),
        "generators": [list(g) for g in gens],
        "degrees": list(degrees),
    }


def _by_last_coordinate(name, gens):
    return _doc(name, gens, [g[-1] for g in gens])


def fixture_catalog():
    fixtures = [
        Fixture(
            "polynomial_ring_2",
            _doc("polynomial_ring_2", [(1, 0), (0, 1)], [1, 1]),
            {
                "h_vector": Expectation([1], TRIVIAL),
                "is_gorenstein": Expectation(True, TRIVIAL),
                "is_level": Expectation(True, TRIVIAL),
                "is_nearly_gorenstein": Expectation(True, TRIVIAL),
                "is_almost_gorenstein": Expectation(True, TRIVIAL),
                "cm_type": Expectation(1, TRIVIAL),
            },
        ),
        Fixture(
            "curve_even_spacing",
            _by_last_coordinate(
                "curve_even_spacing", [(0, 1), (2, 1), (4, 1), (6, 1), (8, 1), (1, 2), (3, 2)]
            ),
            {
                "is_nearly_gorenstein": Expectation(True, LITERATURE),
                "is_level": Expectation(
                    False,
                    LITERATURE,
                    "stated non-level with type 2; type 2 plus nearly Gorenstein forces level, "
                    "and the socle of the Artinian reduction sits in a single degree",
                    disputed=True,
                ),
                "cm_type": Expectation(2, ORACLE),
                "h_vector": Expectation([1, 3, 2, 2], ORACLE),
            },
        ),
        Fixture(
            "curve_triple_spacing",
            _by_last_coordinate("curve_triple_spacing", [(0, 1), (3, 1), (6, 1), (9, 1), (1, 2), (4, 2)]),
            {
                "is_nearly_gorenstein": Expectation(True, LITERATURE),
                "is_level": Expectation(False, LITERATURE),
                "cm_type": Expectation(4, ORACLE),
                "h_vector": Expectation([1, 2, 2, 1, 3], ORACLE),
            },
        ),
        Fixture(
            "pyramid_3d",
            _by_last_coordinate(
                "pyramid_3d", [(0, 0, 1), (2, 0, 1), (0, 2, 1), (2, 2, 1), (1, 0, 2), (3, 0, 2)]
            ),
            {
                "is_simplicial": Expectation(False, TRIVIAL),
                "is_semi_standard": Expectation("yes", LITERATURE),
                "canonical_generators": Expectation("unavailable", TRIVIAL),
                "is_nearly_gorenstein": Expectation("unavailable", TRIVIAL),
            },
        ),
        Fixture(
            "level_not_almost",
            _doc("level_not_almost", [(1, 0), (1, 1), (1, 2), (1, 6), (2, 5)], [1, 1, 1, 1, 2]),
            {
                "h_vector": Expectation([1, 2, 3], LITERATURE),
                "is_level": Expectation(True, LITERATURE),
                "is_almost_gorenstein": Expectation(False, LITERATURE),
                "is_cohen_macaulay": Expectation(True, ORACLE),
            },
        ),
        Fixture(
            "almost_not_nearly_dim2",
            _by_last_coordinate("almost_not_nearly_dim2", [(0, 1), (1, 1), (5, 1), (4, 2)]),
            {
                "h_top": Expectation(1, LITERATURE),
                "socle_degree": Expectation(3, LITERATURE),
                "is_almost_gorenstein": Expectation(True, LITERATURE),
                "is_nearly_gorenstein": Expectation(False, LITERATURE),
                "is_gorenstein": Expectation(False, ORACLE),
                "h_vector": Expectation([1, 1, 2, 1], ORACLE),
            },
        ),
        Fixture(
            "almost_not_nearly_dim3",
            _by_last_coordinate(
                "almost_not_nearly_dim3", [(0, 0, 1), (2, 0, 1), (0, 2, 1), (0, 4, 1), (0, 1, 2), (0, 3, 2)]
            ),
            {
                "h_vector": Expectation([1, 1, 2], LITERATURE),
                "is_almost_gorenstein": Expectation(True, LITERATURE),
                "is_nearly_gorenstein": Expectation(False, LITERATURE),
                "cm_experimental": Expectation(True, TRIVIAL),
            },
        ),
    ]
    for n in range(2, 5):
        for k in range(1, n + 2):
            fixtures.append(
                Fixture(
                    f"family_n{n}_k{k}",
                    family_document(n, k),
                    {
                        "is_cohen_macaulay": Expectation(True, LITERATURE),
                        "h_vector": Expectation([1, n - 1, n], LITERATURE),
                        "cm_type": Expectation(2 * n - 1, LITERATURE),
                        "is_level": Expectation(False, LITERATURE),
                        "is_nearly_gorenstein": Expectation(True, LITERATURE),
                        "is_almost_gorenstein": Expectation(True, LITERATURE),
                    },
                )
            )
    return fixtures


def _random_generators(rng, max_coord, max_gens):
    if rng.random() < 0.5:
        # degree = second coordinate; rays (0,1) and (a,1)
        width = rng.randint(2, max_coord // 2)
        low = [(0, 1), (width, 1)] + [(a, 1) for a in range(1, width) if rng.random() < 0.4]
        high = []
        for deg in (2, 3):
            for a in range(1, deg * width):
                if a <= max_coord and rng.random() < 0.15 / deg:
                    high.append((a, deg))
        gens = low + high
        degrees = [g[1] for g in gens]
    else:
        # degree = (x + y) / D; rays (0,D) and (D,0)
        D = rng.randint(2, max_coord // 2)
        step = rng.choice([1, 1, 2]) if D % 2 == 0 else 1
        low = [(0, D), (D, 0)] + [(a, D - a) for a in range(step, D, step) if rng.random() < 0.5]
        high = [(a, 2 * D - a) for a in range(1, 2 * D) if a <= max_coord and 2 * D - a <= max_coord and rng.random() < 0.15]
        gens = low + high
        degrees = [1] * len(low) + [2] * len(high)
    pairs = sorted(set(zip(gens, degrees)))
    rng.shuffle(pairs)
    pairs = pairs[:max_gens]
    # always keep both ray generators
    rays = [(g, d) for g, d in zip(gens[:2], degrees[:2])]
    pairs = rays + [p for p in pairs if p not in rays]
    pairs = pairs[:max_gens]
    return [g for g, _ in pairs], [d for _, d in pairs]


def corpus_generate(seed=1, max_coord=12, max_gens=7, count=100, max_attempts=5000):
    """Deterministic 2-dimensional Cohen-Macaulay instances with certified staircases."""
    rng = random.Random(seed)
    out = []
    seen = set()
    for _ in range(max_attempts):
        if len(out) >= count:
            break
        gens, degrees = _random_generators(rng, max_coord, max_gens)
        try:
            S = build_semigroup(gens, degrees, name=f"corpus_s{seed}_{len(out):03d}")
        except SemigroupError:
            continue
        key = S.generators
        if key in seen or S.dim != 2:
            continue
        try:
            T = certified_staircase(S)
        except SemigroupError:
            continue
        if not is_cohen_macaulay(T):
            continue
        seen.add(key)
        out.append(S)
    return out
