import random

import pytest
from hypothesis import HealthCheck, settings

from platslide.census import load_census
from platslide.colored_graph import random_admissible

from helpers import ACCEPTANCE

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def census_rows():
    return load_census()


@pytest.fixture(scope="session")
def random_codes():
    rng = random.Random(20261014)
    return [random_admissible(rng, 20) for _ in range(1000)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        line = f"criterion {n} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
