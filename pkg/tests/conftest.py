import sys
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {
    1: "canonical form valid and unique",
    2: "length matches BFS oracle",
    3: "shortening converges",
    4: "lambda values for A_{2,3}",
    5: "Diophantine sweep",
    6: "constructed nets cover",
    7: "length-preserving map",
    8: "complements and pruning",
    9: "axiom suites",
}

_criterion_of = {}
_outcomes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _criterion_of[item.nodeid] = m.args[0]


def pytest_runtest_logreport(report):
    k = _criterion_of.get(report.nodeid)
    if k is None:
        return
    if report.when == "call" or report.failed or report.skipped:
        _outcomes[k].append(report.passed and report.when == "call")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, label in CRITERIA.items():
        results = _outcomes.get(k)
        if not results:
            continue
        status = "PASS" if all(results) else "FAIL"
        tr.write_line(f"criterion {k}: {status}  {label} ({sum(results)}/{len(results)} tests)")
