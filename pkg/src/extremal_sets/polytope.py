"""Profile polytopes of t-intersecting families for small ground sets.

Deleting members keeps a family t-intersecting, so the achievable profiles
are exactly the integer points below the profile of some maximal family.
Extremality is decided with exact rational LPs; nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from . import lp
from .core import CapacityError, DomainError, SetFamily, format_family, profile
from .oracle import maximal_t_intersecting_families

Profile = tuple[int, ...]


@dataclass(frozen=True)
class ProfilePointSet:
    n: int
    t: int
    points: tuple[Profile, ...]
    witnesses: tuple[SetFamily, ...]

    def witness_for(self, p: Profile) -> SetFamily:
        return self.witnesses[self.points.index(p)]


@dataclass(frozen=True)
class ExtremePointReport:
    point: Profile
    pareto: bool
    extreme: bool
    essential: bool
    certificate: Optional[tuple[Fraction, ...]]
    witness: SetFamily

    def as_dict(self) -> dict:
        return {
            "point": [str(x) for x in self.point],
            "pareto": self.pareto,
            "extreme": self.extreme,
            "essential": self.essential,
            "certificate": None if self.certificate is None else [str(a) for a in self.certificate],
            "witness": format_family(self.witness),
        }


def _check_range(n: int, t: int) -> None:
    if not 1 <= t <= n:
        raise DomainError(f"need 1 <= t <= n, got n={n}, t={t}")
    if (t == 1 and n > 5) or n > 6:
        raise CapacityError(f"profile points limited to n <= 5 for t = 1 and n <= 6 otherwise; got n={n}, t={t}")


@lru_cache(maxsize=None)
def profile_points(n: int, t: int) -> ProfilePointSet:
    """Distinct profiles of the maximal t-intersecting families, each with its first witness."""
    _check_range(n, t)
    seen: dict[Profile, SetFamily] = {}
    for fam in maximal_t_intersecting_families(n, t):
        seen.setdefault(profile(fam), fam)
    pts = sorted(seen, reverse=True)
    return ProfilePointSet(n, t, tuple(pts), tuple(seen[p] for p in pts))


def dominates(r: Profile, p: Profile) -> bool:
    """r >= p coordinatewise and r != p."""
    return r != p and all(a >= b for a, b in zip(r, p))


def pareto_points(points: Sequence[Profile]) -> list[Profile]:
    return [p for p in points if not any(dominates(q, p) for q in points)]


def pareto_maximal(P: ProfilePointSet) -> ProfilePointSet:
    keep = set(pareto_points(P.points))
    idx = [x for x, p in enumerate(P.points) if p in keep]
    return ProfilePointSet(P.n, P.t, tuple(P.points[x] for x in idx), tuple(P.witnesses[x] for x in idx))


def dot(alpha: Sequence[Fraction], p: Sequence[int]) -> Fraction:
    return sum((Fraction(a) * x for a, x in zip(alpha, p)), Fraction(0))


def verify_certificate(alpha: Sequence[Fraction], p: Profile, others: Sequence[Profile]) -> bool:
    if any(a < 0 for a in alpha) or sum(alpha) != 1:
        return False
    v = dot(alpha, p)
    return all(v > dot(alpha, q) for q in others if q != p)


def is_extreme(p: Profile, points: Sequence[Profile]) -> tuple[bool, Optional[tuple[Fraction, ...]]]:
    """Does some alpha >= 0 with sum 1 make p the unique maximizer of alpha.x over ``points``?

    Solves  max m  s.t.  alpha.(p - q) >= m  for every other q.  The margin m
    is split as m_plus - m_minus to keep all variables nonnegative.
    """
    if p not in points:
        raise DomainError(f"{p} is not among the candidate points")
    d = len(p)
    others = [q for q in points if q != p]
    if not others:
        alpha = tuple(Fraction(1, d) for _ in range(d))
        return True, alpha
    # variables: alpha_0..alpha_{d-1}, m_plus, m_minus
    A_ub = [[-(a - b) for a, b in zip(p, q)] + [1, -1] for q in others]
    b_ub = [0] * len(others)
    A_eq = [[1] * d + [0, 0]]
    res = lp.linprog_max([0] * d + [1, -1], A_ub, b_ub, A_eq, [1])
    if res.status != "optimal":
        raise RuntimeError(f"margin LP ended {res.status}")
    if res.value <= 0:
        return False, None
    alpha = res.x[:d]
    assert verify_certificate(alpha, p, others)
    return True, alpha


def essential_extreme_points(n: int, t: int) -> list[ExtremePointReport]:
    """Every maximal-family profile, flagged; essential means Pareto-maximal and extreme."""
    P = profile_points(n, t)
    front = set(pareto_points(P.points))
    reports = []
    for p, w in zip(P.points, P.witnesses):
        extreme, cert = is_extreme(p, P.points)
        pareto = p in front
        reports.append(ExtremePointReport(p, pareto, extreme, pareto and extreme, cert, w))
    reports.sort(key=lambda r: r.point, reverse=True)
    return reports


def essential_points(n: int, t: int) -> list[Profile]:
    return [r.point for r in essential_extreme_points(n, t) if r.essential]


def achievable_profiles(n: int, t: int) -> list[Profile]:
    """All profiles of t-intersecting families: the down-closure of the maximal profiles."""
    tops = profile_points(n, t).points
    pts: set[Profile] = set()
    for top in tops:
        pts.update(product(*(range(c + 1) for c in top)))
    return sorted(pts)


def _in_hull_of_others(x: Profile, others: Sequence[Profile]) -> bool:
    d = len(x)
    A_eq = [[q[i] for q in others] for i in range(d)] + [[1] * len(others)]
    return lp.feasible(A_eq, list(x) + [1], len(others))


def hull_vertices_bruteforce(n: int, t: int) -> list[Profile]:
    """Vertices of the convex hull of every achievable profile (n <= 4).

    A point strictly inside one box coordinate is the midpoint of two
    achievable points and is skipped; every remaining point is tested for
    membership in the hull of all the others by an exact feasibility LP.
    """
    if n > 4:
        raise CapacityError(f"brute-force hull is limited to n <= 4, got {n}")
    _check_range(n, t)
    tops = profile_points(n, t).points
    pts = achievable_profiles(n, t)
    vertices = []
    for x in pts:
        boxes = [b for b in tops if all(a <= c for a, c in zip(x, b))]
        if any(0 < a < c for b in boxes for a, c in zip(x, b)):
            continue
        others = [q for q in pts if q != x]
        if not others or not _in_hull_of_others(x, others):
            vertices.append(x)
    return vertices


@dataclass(frozen=True)
class LinearMax:
    value: Fraction
    point: Profile
    witness: SetFamily


def parse_alpha(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(tok.strip()) for tok in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse coefficients {text!r}") from None


def maximize_linear(alpha: Sequence[Fraction | int | str], n: int, t: int) -> LinearMax:
    """max of alpha.p over t-intersecting families, read off the essential points."""
    alpha = tuple(Fraction(a) for a in alpha)
    if len(alpha) != n + 1:
        raise DomainError(f"need {n + 1} coefficients, got {len(alpha)}")
    if any(a < 0 for a in alpha):
        raise DomainError("coefficients must be nonnegative")
    P = profile_points(n, t)
    value = max(dot(alpha, p) for p in P.points)
    for r in essential_extreme_points(n, t):
        if r.essential and dot(alpha, r.point) == value:
            return LinearMax(value, r.point, r.witness)
    raise AssertionError(f"maximum {value} not attained at an essential point (n={n}, t={t})")
