import os

import pytest
from hypothesis import HealthCheck, settings

from semigroup_rings.families import fixture_catalog
from semigroup_rings.semigroup import semigroup_from_document

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=25, deadline=None)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CATALOG = {f.name: f for f in fixture_catalog()}


@pytest.fixture(scope="session")
def catalog():
    return CATALOG


def fixture_semigroup(name):
    return semigroup_from_document(CATALOG[name].document)


ACCEPTANCE_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_LINES] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def report_line(request):
    """Print one PASS/FAIL line now and again in the terminal summary."""

    def emit(line):
        print(line)
        request.config.stash[ACCEPTANCE_LINES].append(line)

    return emit
