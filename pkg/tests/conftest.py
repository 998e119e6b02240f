import mpmath
import pytest

from zetakit.critical_line import find_zeros
from zetakit.prime_arith import sieve


@pytest.fixture(scope="session")
def zeros_560():
    """Every zero with 0 < t < 560 (312 of them), count-verified by the scan."""
    return find_zeros(1.0, 560.0, 0.05, 1e-10)


@pytest.fixture(scope="session")
def zeros_1450():
    """Every zero with 0 < t < 1450, enough for 1000 pairs."""
    return find_zeros(1.0, 1450.0, 0.05, 1e-9)


@pytest.fixture(scope="session")
def sieve_1e6():
    return sieve(10 ** 6)


@pytest.fixture(scope="session")
def sieve_1e4():
    return sieve(10 ** 4)


@pytest.fixture
def mp30():
    """mpmath at 30 digits; default precision is visibly off near some poles of 1/eta."""
    with mpmath.workdps(30):
        yield mpmath


_AC_LINES = pytest.StashKey[list]()


@pytest.fixture
def ac_report(request):
    """Print one PASS/FAIL line for an acceptance criterion, then assert on it."""
    lines = request.config.stash.setdefault(_AC_LINES, [])

    def report(tag: str, checks: dict):
        failed = [k for k, ok in checks.items() if not ok]
        line = f"{tag} {'FAIL' if failed else 'PASS'}" + (f" ({', '.join(failed)})" if failed else "")
        print(line)
        lines.append(line)
        assert not failed, line

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_AC_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[0][2:])):
            terminalreporter.write_line(line)
