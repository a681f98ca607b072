import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


CRITERIA = {
    "01": "quintic group product exact, under 30 s",
    "02": "sextic group product exact, under 2 min",
    "03": "septic class values, under 10 min at <= 2^14 bits",
    "04": "transposition class on 50 random irreducibles",
    "05": "closed forms vs enumeration; quartic identity",
    "06": "scans with zero mismatches and exclusion containment",
    "07": "spot congruences via matrix and trace paths",
    "08": "number field class values, norms, residues and scan",
    "09a": "principality over Q(sqrt(-5)) by norm mod 4",
    "09b": "quartic class field: [4] class value as stated",
    "09c": "quartic class field: principal and flagged primes",
    "10": "property suite (three-way sums, squares, balls)",
}

_outcomes: dict[str, list[str]] = {}


def _criterion_key(nodeid: str):
    if "test_acceptance.py::test_criterion_" not in nodeid:
        return None
    return nodeid.split("test_criterion_")[1].split("_")[0]


def pytest_runtest_logreport(report):
    key = _criterion_key(report.nodeid)
    if key is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes.setdefault(key, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for key, desc in CRITERIA.items():
        got = _outcomes.get(key)
        if not got:
            continue
        status = "PASS" if all(o == "passed" for o in got) else "FAIL"
        terminalreporter.write_line(f"criterion {key:>3}: {status}  {desc}")
