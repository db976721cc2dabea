import itertools
from collections import Counter

import numpy as np
import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")
    config._acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        item.config._acceptance_results.append((marker.args[0], report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance_results", [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def words(u, v):
    """Every distinct string of u 'L0' and v 'L1' letters, by brute force over positions."""
    if u < 0 or v < 0:
        return []
    out = []
    for pos in itertools.combinations(range(u + v), u):
        w = ["L1"] * (u + v)
        for i in pos:
            w[i] = "L0"
        out.append(tuple(w))
    return out


def run_length_pair(word):
    """(tau, s) of a word, with a leading empty L0 run if it starts with L1."""
    runs = [(k, len(list(g))) for k, g in itertools.groupby(word)]
    if not runs or runs[0][0] == "L1":
        runs.insert(0, ("L0", 0))
    if runs[-1][0] == "L0":
        runs.append(("L1", 0))
    tau = tuple(n for k, n in runs[0::2])
    s = tuple(n for k, n in runs[1::2])
    return tau, s


def symbolic_expansion(n):
    """Rendered ordered products acting on Y0 and on Y1 in Y_n, obtained by
    unrolling Y(k+2) = L0(k) Y(k) + L1(k) Y(k+1) symbolically."""
    terms = {0: (Counter({"": 1}), Counter()), 1: (Counter(), Counter({"": 1}))}
    for k in range(n - 1):
        on0, on1 = Counter(), Counter()
        for prefix, source in ((f"L0({k})", terms[k]), (f"L1({k})", terms[k + 1])):
            for target, acc in zip(source, (on0, on1)):
                for word, mult in target.items():
                    acc[(prefix + " " + word).strip()] += mult
        terms[k + 2] = (on0, on1)
    on0, on1 = terms[n]
    fix = lambda c: Counter({(w or "I"): m for w, m in c.items()})
    return fix(on0), fix(on1)
