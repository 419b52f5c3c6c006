import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polyblocks import IntPoly, classify  # noqa: E402

CORPUS = {
    "X^2+1": "1,0,1",
    "X^3-3X+1": "1,-3,0,1",
    "X^3-X+1": "1,-1,0,1",
    "3X^2+5X+7": "7,5,3",
    "2X^3+X+1": "1,1,0,2",
}

_acceptance = []


def random_poly(rng, degree, lo=-100, hi=100):
    coeffs = [rng.randint(lo, hi) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(lo, hi)
    return IntPoly(tuple(coeffs) + (lead,))


def random_irreducible(rng, degree, lo=-100, hi=100):
    while True:
        f = random_poly(rng, degree, lo, hi)
        if not classify(f).reducible:
            return f


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture(params=sorted(CORPUS))
def corpus_poly(request):
    return IntPoly.parse(CORPUS[request.param])


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and report.when == "call":
        _acceptance.append((marker.args[0], marker.args[1], report.outcome))
    elif marker and report.when == "setup" and report.outcome != "passed":
        _acceptance.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    results = {}
    for number, title, outcome in _acceptance:
        ok = results.get(number, (title, True))[1] and outcome == "passed"
        results[number] = (title, ok)
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok = results[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
