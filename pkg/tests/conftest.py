import pytest

# criterion number -> (passed, description); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {desc}")


@pytest.fixture
def record():
    def _record(n, desc, ok):
        ACCEPTANCE[n] = (bool(ok), desc)
        print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {desc}")
        return ok

    return _record
