"""Three-valued consistency checks run on a finished classification report.

Each check returns "VACUOUS" when its hypotheses do not apply (or the needed
fields are unavailable), otherwise "PASS" or "FAIL".  A FAIL means the
computation contradicts a proven implication and points at a bug.
"""

PASS, FAIL, VACUOUS = "PASS", "FAIL", "VACUOUS"


def _verdict(ok):
    return PASS if ok else FAIL


def _cm_ready(rep, *fields):
    return rep.is_cohen_macaulay is True and rep.available("h_vector", "cm_type", *fields)


def nearly_gorenstein_top_h(rep):
    """Semi-standard, CM, non-Gorenstein and nearly Gorenstein imply h_s >= 2."""
    if rep.is_semi_standard != "yes" or not _cm_ready(rep, "is_nearly_gorenstein"):
        return VACUOUS
    if rep.is_gorenstein or not rep.is_nearly_gorenstein:
        return VACUOUS
    return _verdict(rep.h_vector[-1] >= 2)


def type_two_level(rep):
    """Nearly Gorenstein of type 2 implies level."""
    if rep.is_semi_standard != "yes" or not _cm_ready(rep, "is_nearly_gorenstein", "is_level"):
        return VACUOUS
    if not (rep.is_nearly_gorenstein and rep.cm_type == 2):
        return VACUOUS
    return _verdict(rep.is_level)


def ag_level_socle_one(rep):
    """For non-Gorenstein CM domains: almost Gorenstein and level iff s = 1."""
    if not _cm_ready(rep, "is_almost_gorenstein", "is_level") or rep.is_gorenstein:
        return VACUOUS
    if rep.dim == 0:
        return VACUOUS
    return _verdict((rep.is_almost_gorenstein and rep.is_level) == (rep.socle_degree == 1))


def non_level_type_formula(rep):
    """Socle degree 2 and non-level force type = h_1 + h_2."""
    if not _cm_ready(rep, "is_level") or rep.socle_degree != 2 or rep.is_level:
        return VACUOUS
    return _verdict(rep.cm_type == rep.h_vector[1] + rep.h_vector[2])


def standard_ag_ng_gorenstein(rep):
    """Standard graded with s >= 2: almost and nearly Gorenstein together force Gorenstein."""
    if not all(d == 1 for d in rep.degrees) or not _cm_ready(rep, "is_almost_gorenstein", "is_nearly_gorenstein"):
        return VACUOUS
    if rep.socle_degree < 2 or not (rep.is_almost_gorenstein and rep.is_nearly_gorenstein):
        return VACUOUS
    return _verdict(rep.is_gorenstein)


def _dim_socle_two(rep):
    return rep.dim == 2 and rep.socle_degree == 2 and rep.is_semi_standard == "yes"


def ag_implies_ng(rep):
    """Non-standard semi-standard, dim = s = 2: almost Gorenstein implies nearly Gorenstein."""
    if all(d == 1 for d in rep.degrees) or not _cm_ready(rep, "is_almost_gorenstein", "is_nearly_gorenstein"):
        return VACUOUS
    if not _dim_socle_two(rep) or not rep.is_almost_gorenstein:
        return VACUOUS
    return _verdict(rep.is_nearly_gorenstein)


def non_level_ag_family(rep):
    """dim = s = 2, non-level and almost Gorenstein: nearly Gorenstein with h = (1, n-1, n).

    Only these necessary invariants are checked, not the isomorphism type.
    """
    if not _cm_ready(rep, "is_almost_gorenstein", "is_nearly_gorenstein", "is_level"):
        return VACUOUS
    if not _dim_socle_two(rep) or rep.is_level or not rep.is_almost_gorenstein:
        return VACUOUS
    h = rep.h_vector
    n = h[2]
    return _verdict(rep.is_nearly_gorenstein and n >= 2 and h == [1, n - 1, n] and rep.cm_type == 2 * n - 1)


REPORT_CHECKS = {
    "nearly_gorenstein_top_h": nearly_gorenstein_top_h,
    "type_two_level": type_two_level,
    "ag_level_socle_one": ag_level_socle_one,
    "non_level_type_formula": non_level_type_formula,
    "standard_ag_ng_gorenstein": standard_ag_ng_gorenstein,
    "ag_implies_ng": ag_implies_ng,
    "non_level_ag_family": non_level_ag_family,
}

# CLI check ids -> report check names
CHECK_IDS = {
    "3.5": "trace_degree_bound",
    "3.6": "nearly_gorenstein_top_h",
    "3.7": "type_two_level",
    "5.1": "ag_level_socle_one",
    "5.3": "non_level_type_formula",
    "6.1": "standard_ag_ng_gorenstein",
    "6.2": "ag_implies_ng",
    "6.3": "non_level_ag_family",
}


def run_all(rep):
    return {name: fn(rep) for name, fn in REPORT_CHECKS.items()}
