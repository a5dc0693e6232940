import pytest

from apd.matrices import Family, FamilySpec

# One spec per family with a closed form, as exercised by the invariant checks.
FAMILY_SPECS = [
    FamilySpec(Family.IDENTITY),
    FamilySpec(Family.CIRCULANT),
    FamilySpec(Family.SHIFTED, d=1, r=2),
    FamilySpec(Family.SHIFTED, d="n", r=2),
    FamilySpec(Family.SHIFTED, d=2, r=1),
    FamilySpec(Family.HILBERT),
    FamilySpec(Family.MULT, r=1),
    FamilySpec(Family.VANDERMONDE),
    FamilySpec(Family.PASCAL),
]


@pytest.fixture(params=FAMILY_SPECS, ids=lambda s: s.label.replace(" ", "_"))
def family(request):
    return request.param


_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    status = "PASS" if report.passed else "FAIL"
    _acceptance_lines.append(f"[{status}] {name}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
