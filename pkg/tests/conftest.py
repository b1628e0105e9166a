import functools
import itertools

import pytest
from hypothesis import HealthCheck, settings

from galois_mds import GaloisRing

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def ring(p, s, modulus):
    return GaloisRing(p, s, list(modulus))


# named presentations used throughout the suite
GR4_256 = (2, 2, (1, 3, 2, 0, 1))  # x^4 + 2x^2 + 3x + 1
GR9_729 = (3, 2, (4, 2, 3, 1))  # x^3 + 3x^2 + 2x + 4
GR9_81 = (3, 2, (4, 2, 5))  # 5x^2 + 2x + 4
GR9_81_ALT = (3, 2, (4, 7, 5))  # 5x^2 + 7x + 4
GR4_16 = (2, 2, (1, 1, 1))  # x^2 + x + 1
GR8_64 = (2, 3, (1, 1, 1))
GF16 = (2, 1, (1, 1, 0, 0, 1))
GR9_9 = (3, 2, (7, 1))  # Z_9 itself, x = 2


@pytest.fixture(scope="session")
def gr4_256():
    return ring(*GR4_256)


@pytest.fixture(scope="session")
def gr9_729():
    return ring(*GR9_729)


@pytest.fixture(scope="session")
def gr9_81():
    return ring(*GR9_81)


@pytest.fixture(scope="session")
def gr9_81_alt():
    return ring(*GR9_81_ALT)


@pytest.fixture(scope="session")
def gr4_16():
    return ring(*GR4_16)


@pytest.fixture(scope="session")
def gf16():
    return ring(*GF16)


# -- independent oracles -----------------------------------------------------------


def naive_polymulmod(a, b, f, q):
    """Schoolbook product of coefficient lists reduced by monic f, over Z_q."""
    m = len(f) - 1
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k] % q
        for i in range(m + 1):
            prod[k - m + i] -= c * f[i]
    return tuple(c % q for c in prod[:m]) + (0,) * max(0, m - len(prod))


def leibniz_det(rows, zero, one):
    """Sum over permutations; independent of any elimination or cofactor caching."""
    n = len(rows)
    total = zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = one
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total - term if inversions % 2 else total + term
    return total


def naive_is_mds(rows, zero, one, is_unit):
    n = len(rows)
    for size in range(1, n + 1):
        for rs in itertools.combinations(range(n), size):
            for cs in itertools.combinations(range(n), size):
                sub = [[rows[i][j] for j in cs] for i in rs]
                if not is_unit(leibniz_det(sub, zero, one)):
                    return False
    return True


# -- acceptance report -------------------------------------------------------------

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture()
def report():
    """Record one PASS/FAIL line per acceptance criterion, then assert it."""

    def _report(label: str, ok: bool, detail: str) -> None:
        line = f"{label}: {'PASS' if ok else 'FAIL'} - {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s[2:].split(":")[0])):
            terminalreporter.write_line(line)
