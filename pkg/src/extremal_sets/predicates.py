"""Intersection properties of explicit families, with violation witnesses.

Every predicate returns ``(ok, witness)``; ``witness`` is ``None`` when the
property holds, otherwise the lexicographically first offending tuple of
members (by index in canonical order).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional

from .core import DomainError, SetFamily, elements, popcount


@dataclass(frozen=True)
class ViolationWitness:
    kind: Literal["pair", "quadruple", "uv-split"]
    sets: tuple[int, ...]
    measured: int

    def describe(self) -> str:
        shown = ["{" + ",".join(map(str, elements(s))) + "}" for s in self.sets]
        return f"{self.kind} {' '.join(shown)} (intersection size {self.measured})"


def is_t_intersecting(family: SetFamily, t: int) -> tuple[bool, Optional[ViolationWitness]]:
    """|F & G| >= t for every pair, F = G included (so every member has size >= t)."""
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    ms = family.members
    for a in range(len(ms)):
        fa = ms[a]
        for b in range(a, len(ms)):
            c = popcount(fa & ms[b])
            if c < t:
                return False, ViolationWitness("pair", (fa, ms[b]), c)
    return True, None


def _first_pairs_by_union(ms: tuple[int, ...]) -> dict[int, tuple[int, int]]:
    first: dict[int, tuple[int, int]] = {}
    for a, b in combinations(range(len(ms)), 2):
        first.setdefault(ms[a] | ms[b], (a, b))
    return first


def is_union_t_intersecting(
    family: SetFamily, t: int, strict: bool = False
) -> tuple[bool, Optional[ViolationWitness]]:
    """|(F1 | F2) & (G1 | G2)| >= t whenever F1 != F2 and G1 != G2.

    By default the F-pair and G-pair may share members.  ``strict=True``
    only quantifies over four pairwise distinct members.
    """
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    ms = family.members
    if len(ms) < 2:
        return True, None
    if strict:
        return _union_t_strict(ms, t)

    unions = sorted(_first_pairs_by_union(ms))
    bad = False
    for x in range(len(unions)):
        ux = unions[x]
        for y in range(x, len(unions)):
            if popcount(ux & unions[y]) < t:
                bad = True
                break
        if bad:
            break
    if not bad:
        return True, None

    # A violation exists; locate the lexicographically first one.
    pairs = list(combinations(range(len(ms)), 2))
    pair_union = [ms[a] | ms[b] for a, b in pairs]
    for p in range(len(pairs)):
        up = pair_union[p]
        for q in range(p, len(pairs)):
            c = popcount(up & pair_union[q])
            if c < t:
                (a, b), (c1, d1) = pairs[p], pairs[q]
                return False, ViolationWitness("quadruple", (ms[a], ms[b], ms[c1], ms[d1]), c)
    raise AssertionError("unreachable: violation detected but not located")


def _union_t_strict(ms: tuple[int, ...], t: int) -> tuple[bool, Optional[ViolationWitness]]:
    pairs = list(combinations(range(len(ms)), 2))
    for p, (a, b) in enumerate(pairs):
        up = ms[a] | ms[b]
        for c1, d1 in pairs[p + 1:]:
            if c1 in (a, b) or d1 in (a, b):
                continue
            c = popcount(up & (ms[c1] | ms[d1]))
            if c < t:
                return False, ViolationWitness("quadruple", (ms[a], ms[b], ms[c1], ms[d1]), c)
    return True, None


def is_uv_union_intersecting(
    family: SetFamily, u: int, v: int
) -> tuple[bool, Optional[ViolationWitness]]:
    """Unions of any u and any other v distinct members meet.

    A split fails iff every G-member avoids the union of the F-members, so it
    suffices to look for a u-subset with v further members disjoint from its
    union.
    """
    if not 1 <= u <= v:
        raise DomainError(f"need 1 <= u <= v, got u={u}, v={v}")
    ms = family.members
    m = len(ms)
    if m < u + v:
        return True, None
    disjoint = [0] * m
    for a in range(m):
        row = 0
        for b in range(m):
            if ms[a] & ms[b] == 0:
                row |= 1 << b
        disjoint[a] = row
    everyone = (1 << m) - 1
    for S in combinations(range(m), u):
        avail = everyone
        for a in S:
            avail &= disjoint[a] & ~(1 << a)
        if popcount(avail) >= v:
            T = []
            b = 0
            while len(T) < v:
                if avail >> b & 1:
                    T.append(b)
                b += 1
            return False, ViolationWitness(
                "uv-split", tuple(ms[i] for i in S) + tuple(ms[j] for j in T), 0
            )
    return True, None
