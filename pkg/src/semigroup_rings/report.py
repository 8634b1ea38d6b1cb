"""Full classification pipeline and its JSON/text report."""

import json
from dataclasses import asdict, dataclass, field

from . import validators
from .canonical import canonical_generators, external_canonical, is_gorenstein, is_level
from .errors import SemigroupError
from .invariants import cokernel_data, h_vector, hilbert_function, is_almost_gorenstein, stanley_inequalities
from .semigroup import DEFAULT_MULTIPLE_BOUND, is_semi_standard
from .staircase import certified_staircase, depth_at_least_two, holes, is_cohen_macaulay
from .trace import is_nearly_gorenstein, trace_degree_bound_check

UNAVAILABLE = "unavailable"

FIELD_NOTE = (
    "all verdicts are combinatorial in the exponent data and do not depend on the base field; "
    "passing to an infinite field changes none of the computed quantities"
)


@dataclass
class ClassificationReport:
    name: str
    dim: int
    ambient_dim: int
    generators: list
    degrees: list
    extremal_rays: list
    is_pointed: bool
    is_simplicial: bool
    is_semi_standard: str
    hilbert_prefix: object = UNAVAILABLE
    h_vector: object = UNAVAILABLE
    socle_degree: object = UNAVAILABLE
    a_invariant: object = UNAVAILABLE
    is_cohen_macaulay: object = UNAVAILABLE
    cm_experimental: bool = False
    depth_at_least_two: object = UNAVAILABLE
    staircase_min_elements: object = UNAVAILABLE
    holes: object = UNAVAILABLE
    canonical_generators: object = UNAVAILABLE
    canonical_degrees: object = UNAVAILABLE
    canonical_source: object = UNAVAILABLE
    cm_type: object = UNAVAILABLE
    is_gorenstein: object = UNAVAILABLE
    is_level: object = UNAVAILABLE
    is_nearly_gorenstein: object = UNAVAILABLE
    is_almost_gorenstein: object = UNAVAILABLE
    stanley_inequalities: object = UNAVAILABLE
    cokernel_numerator: object = UNAVAILABLE
    validator_results: dict = field(default_factory=dict)
    provenance_notes: list = field(default_factory=list)
    unavailable_reasons: dict = field(default_factory=dict)

    def mark(self, names, reason):
        for n in names:
            setattr(self, n, UNAVAILABLE)
            self.unavailable_reasons[n] = reason

    def available(self, *names):
        return all(getattr(self, n) != UNAVAILABLE for n in names)

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self):
        lines = [f"{self.name or '(unnamed)'}: dim {self.dim}, {len(self.generators)} generators"]
        for key in (
            "is_semi_standard", "is_simplicial", "h_vector", "socle_degree", "a_invariant",
            "is_cohen_macaulay", "depth_at_least_two", "cm_type", "canonical_degrees",
            "is_gorenstein", "is_level", "is_nearly_gorenstein", "is_almost_gorenstein",
        ):
            val = getattr(self, key)
            reason = self.unavailable_reasons.get(key)
            lines.append(f"  {key:22s} {val}" + (f" ({reason})" if reason else ""))
        for k, v in self.validator_results.items():
            lines.append(f"  check {k:16s} {v}")
        return "\n".join(lines) + "\n"


def _vec(v):
    return [int(x) for x in v]


def classify_semigroup(S, external=None, max_degree=None, multiple_bound=DEFAULT_MULTIPLE_BOUND):
    """Run every computation that applies to S; the rest is marked unavailable with a reason."""
    rays = S.cone.extremal_rays
    rep = ClassificationReport(
        name=S.name,
        dim=S.dim,
        ambient_dim=S.ambient_dim,
        generators=[_vec(g) for g in S.generators],
        degrees=list(S.degrees),
        extremal_rays=[_vec(r) for r in rays],
        is_pointed=True,
        is_simplicial=len(rays) == S.dim,
        is_semi_standard=is_semi_standard(S, multiple_bound),
    )
    rep.provenance_notes.append(FIELD_NOTE)
    if max_degree is None:
        max_degree = 4 * (max(S.degrees) * S.dim + S.dim + 5)

    try:
        h = h_vector(S, max_degree)
    except SemigroupError as err:
        if rep.is_semi_standard == "yes":
            raise
        h = None
        rep.mark(["hilbert_prefix", "h_vector", "socle_degree", "stanley_inequalities", "cokernel_numerator"], err.code)
    if h is not None:
        rep.h_vector = list(h.entries)
        rep.socle_degree = h.socle_degree
        rep.hilbert_prefix = hilbert_function(S, max(h.socle_degree + S.dim + 1, 6))
        rep.stanley_inequalities = stanley_inequalities(h)
        rep.cokernel_numerator = list(cokernel_data(h, 1).numerator)

    T = None
    try:
        T = certified_staircase(S, horizon=None)
    except SemigroupError as err:
        if err.code == "HORIZON_TOO_SMALL":
            raise
        rep.mark(["is_cohen_macaulay", "depth_at_least_two", "staircase_min_elements", "holes"], err.code)

    if T is not None:
        rep.is_cohen_macaulay = is_cohen_macaulay(T)
        rep.cm_experimental = S.dim >= 3
        if rep.cm_experimental:
            rep.provenance_notes.append("Cohen-Macaulay verdict in dimension >= 3 is experimental")
        rep.staircase_min_elements = [
            {"residue": _vec(p), "min": [_vec(m) for m in T.min_elements[p]]} for p in T.residues
        ]
        rep.holes = [_vec(x) for x in holes(T, max(S.degrees) + 1)]
        if S.dim == 2:
            rep.depth_at_least_two = depth_at_least_two(T)
        else:
            rep.mark(["depth_at_least_two"], "UNSUPPORTED_DIMENSION")

    M = None
    if external is not None:
        M = external_canonical(S, external)
        rep.provenance_notes.append("canonical module supplied externally")
    elif rep.is_cohen_macaulay is True and h is not None:
        M = canonical_generators(T, h)
    else:
        reason = rep.unavailable_reasons.get("is_cohen_macaulay", "NOT_CM")
        rep.mark(
            ["canonical_generators", "canonical_degrees", "canonical_source", "cm_type", "a_invariant",
             "is_gorenstein", "is_level", "is_nearly_gorenstein"],
            reason,
        )
    if M is not None:
        rep.canonical_generators = [_vec(v) for v in M.generators]
        rep.canonical_degrees = list(M.degrees)
        rep.canonical_source = M.source
        rep.cm_type = M.type
        rep.a_invariant = M.a_invariant
        rep.is_gorenstein = is_gorenstein(M)
        rep.is_level = is_level(M)
        rep.is_nearly_gorenstein = is_nearly_gorenstein(S, M.generators)
        if h is not None:
            rep.cokernel_numerator = list(cokernel_data(h, M.type).numerator)

    if rep.is_cohen_macaulay is True and h is not None and M is not None:
        rep.is_almost_gorenstein = is_almost_gorenstein(h, M.type)
    else:
        rep.mark(["is_almost_gorenstein"], rep.unavailable_reasons.get("is_cohen_macaulay", "NOT_CM"))

    rep.validator_results = validators.run_all(rep)
    if M is not None and M.type >= 2 and S.dim == 2 and T is not None:
        rep.validator_results["trace_degree_bound"] = trace_degree_bound_check(S, M.generators, T)
    else:
        rep.validator_results["trace_degree_bound"] = "VACUOUS"
    return rep
