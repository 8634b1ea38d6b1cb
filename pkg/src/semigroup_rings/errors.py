"""Error type shared by every module.

Each failure carries a stable machine-readable ``code`` so the CLI can map it
to an exit status and reports can cite it.
"""


class SemigroupError(ValueError):
    def __init__(self, code, message=""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


# exit status per error code; anything unlisted is a usage problem
EXIT_CODES = {
    "PARSE_ERROR": 2,
    "UNKNOWN_THEOREM": 2,
    "DIMENSION_MISMATCH": 3,
    "EMPTY_INPUT": 3,
    "INCONSISTENT_GRADING": 3,
    "NOT_POINTED": 3,
    "BAD_PARAMS": 3,
    "NOT_IN_GROUP": 3,
    "HORIZON_TOO_SMALL": 4,
    "BOX_TOO_SMALL": 4,
    "NONPOLYNOMIAL_NUMERATOR": 4,
}


def exit_code_for(err):
    return EXIT_CODES.get(err.code, 2)
