import pytest

from qk.finite import bundled_library, enumerate_structures
from qk.term import enumerate_words


@pytest.fixture(scope="session")
def small_words():
    """All 714 words over {x, y} with at most 3 operations."""
    return enumerate_words(["x", "y"], 3)


@pytest.fixture(scope="session")
def full_library():
    lib = bundled_library()
    for n in range(1, 5):
        lib += enumerate_structures("rack", n, up_to_iso=True)
    return lib


def pytest_terminal_summary(terminalreporter):
    from support import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
