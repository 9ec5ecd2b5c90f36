from itertools import chain, combinations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[name] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0].lstrip("AC"))):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


# -- independent brute-force helpers over frozensets ------------------------

def fs(*sets):
    return [frozenset(s) for s in sets]


def all_subsets(n):
    ground = range(1, n + 1)
    return [frozenset(c) for c in chain.from_iterable(combinations(ground, r) for r in range(n + 1))]


def brute_t_intersecting(family, t):
    return all(len(a & b) >= t for a in family for b in family)


def brute_union_t(family, t, strict=False):
    fam = list(family)
    for f1, f2 in combinations(fam, 2):
        for g1, g2 in combinations(fam, 2):
            if strict and {f1, f2} & {g1, g2}:
                continue
            if len((f1 | f2) & (g1 | g2)) < t:
                return False
    return True


def brute_uv(family, u, v):
    fam = list(family)
    for chosen in combinations(fam, u + v):
        for side in combinations(chosen, u):
            rest = [g for g in chosen if g not in side]
            if not frozenset().union(*side) & frozenset().union(*rest):
                return False
    return True
