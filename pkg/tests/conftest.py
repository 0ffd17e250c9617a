import pytest

from orthodesign.core import Design, parse_design

D2_TEXT = "4 4 2\nz1 0 0 z2\n0 z1 -z2 0\n0 z2* z1* 0\n-z2* 0 0 z1*"
BASE_TEXT = "2 2 1\nz1 0\n0 z1*"
ALAMOUTI_TEXT = "2 2 2\nz1 z2\n-z2* z1*"
FLIPPED_ALAMOUTI_TEXT = "2 2 2\nz1 z2\nz2* z1*"
TBLOCK_TEXT = "2 2 1\nz1 0\n0 z1"


def two_copy_stack() -> Design:
    """D2 over vars 1,2 stacked on a copy over vars 3,4, same four columns."""
    rows = D2_TEXT.splitlines()[1:]
    shifted = [r.replace("z2", "z4").replace("z1", "z3") for r in rows]
    return Design.from_rows(rows + shifted)


def block_diagonal_stack() -> Design:
    rows = [r.split() for r in D2_TEXT.splitlines()[1:]]
    top = [r + ["0"] * 4 for r in rows]
    bottom = [["0"] * 4 + [t.replace("z2", "z4").replace("z1", "z3") for t in r] for r in rows]
    return Design.from_rows(top + bottom)


@pytest.fixture
def d2():
    return parse_design(D2_TEXT)


@pytest.fixture
def base():
    return parse_design(BASE_TEXT)


@pytest.fixture
def alamouti():
    return parse_design(ALAMOUTI_TEXT)


@pytest.fixture
def flipped_alamouti():
    return parse_design(FLIPPED_ALAMOUTI_TEXT)


@pytest.fixture
def tblock():
    return parse_design(TBLOCK_TEXT)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
