from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from poscasimir import datum

settings.register_profile(
    "repo", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

# criterion number -> (title, passed); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool]] = {}

BUILTIN = ("A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "F4", "G2")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=BUILTIN)
def builtin(request):
    return datum(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
