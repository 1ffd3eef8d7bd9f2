import pytest

from seqcomplexity.seqgen import pattern_sequence, thue_morse


@pytest.fixture(scope="session")
def tm5000():
    return thue_morse(5000)


@pytest.fixture(scope="session")
def patterns5000():
    return {k: pattern_sequence(k, 5000) for k in range(2, 6)}


_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome; returns ``ok`` for asserting."""

    def record(cid, ok, detail=""):
        status = {True: "PASS", False: "FAIL"}.get(ok, ok)
        line = f"[{status:>4}] criterion {cid:>2}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
