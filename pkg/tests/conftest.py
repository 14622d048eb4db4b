from fractions import Fraction

from hypothesis import settings, strategies as st

from posicert.poly import ExactPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rats = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))


def polys(max_len=6):
    return st.lists(rats, max_size=max_len).map(ExactPoly)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_criterion_" in report.nodeid:
        name = report.nodeid.rsplit("::", 1)[-1][5:]
        _ACCEPTANCE.append(f"{name}: {'PASS' if report.passed else 'FAIL'} "
                           f"[{report.duration:.2f}s]")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
