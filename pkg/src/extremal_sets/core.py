"""Ground sets, bitmask subsets, set families and profile vectors.

A subset of [n] = {1, ..., n} is an ``int`` whose bit ``j - 1`` is set iff
element ``j`` belongs to it.  Families are immutable, deduplicated and kept
in ascending bit-pattern order, which is the canonical order every other
module uses for tie-breaks.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_N = 64


class DomainError(ValueError):
    """Parameters outside the domain of an operation."""


class CapacityError(DomainError):
    """Request too large to materialize or search."""


class InvalidFamilyError(ValueError):
    """A member uses an element outside the ground set."""


def binomial(m: int, r: int) -> int:
    if m < 0:
        raise DomainError(f"binomial: m must be >= 0, got {m}")
    if r < 0 or r > m:
        return 0
    return math.comb(m, r)


def popcount(s: int) -> int:
    return bin(s).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        if e < 1:
            raise InvalidFamilyError(f"element {e} is not a positive integer")
        mask |= 1 << (e - 1)
    return mask


def elements(s: int) -> tuple[int, ...]:
    """Ascending 1-based elements of the subset ``s``."""
    out = []
    j = 1
    while s:
        if s & 1:
            out.append(j)
        s >>= 1
        j += 1
    return tuple(out)


def check_capacity(n: int) -> None:
    if n < 1:
        raise DomainError(f"ground set size must be >= 1, got {n}")
    if n > MAX_N:
        raise CapacityError(f"cannot materialize families over n={n} > {MAX_N}")


def k_subsets(n: int, k: int) -> Iterator[int]:
    """All k-subsets of [n] as masks, in ascending mask order."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    # Gosper's hack walks same-popcount integers in increasing order.
    s = (1 << k) - 1
    limit = 1 << n
    while s < limit:
        yield s
        c = s & -s
        r = s + c
        s = (((r ^ s) >> 2) // c) | r


def subsets_of_size_at_least(n: int, k: int) -> list[int]:
    return sorted(s for size in range(max(k, 0), n + 1) for s in k_subsets(n, size))


@dataclass(frozen=True)
class SetFamily:
    """A finite family of distinct subsets of [n], canonically ordered."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        check_capacity(self.n)
        limit = 1 << self.n
        for m in self.members:
            if not 0 <= m < limit:
                raise InvalidFamilyError(
                    f"member {sorted(elements(m)) if m >= 0 else m} not a subset of [{self.n}]"
                )
        canon = tuple(sorted(set(self.members)))
        if canon != self.members:
            object.__setattr__(self, "members", canon)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        masks = []
        for s in sets:
            s = list(s)
            bad = [e for e in s if not 1 <= e <= n]
            if bad:
                raise InvalidFamilyError(f"set {sorted(s)} uses elements {bad} outside [{n}]")
            masks.append(to_mask(s))
        return cls(n, tuple(masks))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        x = bisect_left(self.members, s)
        return x < len(self.members) and self.members[x] == s

    def as_sets(self) -> list[tuple[int, ...]]:
        return [elements(m) for m in self.members]

    def union(self, other: "SetFamily") -> "SetFamily":
        if other.n != self.n:
            raise DomainError("families over different ground sets")
        return SetFamily(self.n, self.members + other.members)


def canonicalize(n: int, sets: Iterable[Iterable[int] | int]) -> SetFamily:
    """Deduplicate and sort; accepts element collections or raw masks."""
    masks = []
    for s in sets:
        if isinstance(s, int):
            masks.append(s)
        else:
            s = list(s)
            if any(not 1 <= e <= n for e in s):
                raise InvalidFamilyError(f"set {sorted(s)} not a subset of [{n}]")
            masks.append(to_mask(s))
    return SetFamily(n, tuple(masks))


def profile(family: SetFamily) -> tuple[int, ...]:
    """Profile vector (p_0, ..., p_n): number of members of each size."""
    p = [0] * (family.n + 1)
    for m in family.members:
        p[popcount(m)] += 1
    return tuple(p)


def power_set(n: int) -> SetFamily:
    check_capacity(n)
    return SetFamily(n, tuple(range(1 << n)))


# ---------------------------------------------------------------------------
# family text format
# ---------------------------------------------------------------------------

def format_family(family: SetFamily) -> str:
    lines = [f"n={family.n}"]
    for m in family.members:
        els = elements(m)
        lines.append(",".join(map(str, els)) if els else "-")
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> SetFamily:
    n = None
    sets: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise InvalidFamilyError(f"line {lineno}: expected 'n=<integer>', got {line!r}")
            try:
                n = int(line[2:])
            except ValueError:
                raise InvalidFamilyError(f"line {lineno}: bad ground size {line!r}") from None
            continue
        if line == "-":
            sets.append([])
            continue
        try:
            els = [int(tok) for tok in line.split(",")]
        except ValueError:
            raise InvalidFamilyError(f"line {lineno}: bad set {line!r}") from None
        if els != sorted(set(els)):
            raise InvalidFamilyError(f"line {lineno}: elements must be strictly ascending")
        sets.append(els)
    if n is None:
        raise InvalidFamilyError("missing 'n=<integer>' header")
    if not 1 <= n <= MAX_N:
        raise InvalidFamilyError(f"ground size must be in 1..{MAX_N}, got {n}")
    return SetFamily.from_sets(n, sets)


def family_to_json(family: SetFamily) -> dict:
    return {"n": family.n, "size": str(len(family)), "members": [list(s) for s in family.as_sets()]}


