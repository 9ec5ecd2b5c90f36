"""Explicit extremal families as concrete ``SetFamily`` values."""

from __future__ import annotations

from itertools import islice

from .bounds import ak, check_ak_params, union_t_level
from .core import (
    DomainError,
    SetFamily,
    binomial,
    check_capacity,
    full_mask,
    k_subsets,
    popcount,
    subsets_of_size_at_least,
)


def star(n: int) -> SetFamily:
    """All subsets of [n] containing 1."""
    check_capacity(n)
    return SetFamily(n, tuple(range(1, 1 << n, 2)))


def uniform_star(n: int, k: int) -> SetFamily:
    check_capacity(n)
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    return SetFamily(n, tuple(s for s in k_subsets(n, k) if s & 1))


def _threshold_plus_level(n: int, threshold: int, level: int, keep) -> SetFamily:
    members = subsets_of_size_at_least(n, threshold)
    if level >= 0:
        members += [s for s in k_subsets(n, level) if keep(s)]
    return SetFamily(n, tuple(members))


def halving_family(n: int) -> SetFamily:
    """Sets above the middle level, plus middle sets avoiding n when n is even."""
    check_capacity(n)
    if n % 2:
        return SetFamily(n, tuple(subsets_of_size_at_least(n, (n + 1) // 2)))
    last = 1 << (n - 1)
    return _threshold_plus_level(n, n // 2 + 1, n // 2, lambda s: not s & last)


def katona_family(n: int, t: int) -> SetFamily:
    check_capacity(n)
    if not 1 <= t <= n:
        raise DomainError(f"need 1 <= t <= n, got n={n}, t={t}")
    if (n + t) % 2 == 0:
        return SetFamily(n, tuple(subsets_of_size_at_least(n, (n + t) // 2)))
    last = 1 << (n - 1)
    return _threshold_plus_level(n, (n + t + 1) // 2, (n + t - 1) // 2, lambda s: not s & last)


def ak_family(n: int, k: int, t: int, i: int) -> SetFamily:
    """{A : |A| = k, |A & [t+2i]| >= t+i}."""
    check_capacity(n)
    check_ak_params(n, k, t, i)
    block = full_mask(t + 2 * i)
    need = t + i
    return SetFamily(n, tuple(s for s in k_subsets(n, k) if popcount(s & block) >= need))


def ekr_counterexample(n: int) -> SetFamily:
    """k = n/2 sets meeting the first half [n/2] in at least n/4 + 1 elements."""
    if n < 4 or n % 4:
        raise DomainError(f"n must be a positive multiple of 4, got {n}")
    check_capacity(n)
    half = full_mask(n // 2)
    need = n // 4 + 1
    return SetFamily(n, tuple(s for s in k_subsets(n, n // 2) if popcount(s & half) >= need))


def korner_family(n: int) -> SetFamily:
    """Conjectured largest family whose pairwise unions meet.

    For n = 2 the even rule asks for 0-sets containing 1; there are none, so
    the result is the three nonempty subsets.
    """
    check_capacity(n)
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if n % 2:
        return SetFamily(n, tuple(subsets_of_size_at_least(n, (n - 1) // 2)))
    return _threshold_plus_level(n, n // 2, n // 2 - 1, lambda s: s & 1)


def union_t_family(n: int, t: int) -> SetFamily:
    """Extremal union-t-intersecting family.

    Odd n + t adds the best AK family at level (n+t-3)/2, using the smallest
    maximizing i; when that level is below t it is dropped.
    """
    check_capacity(n)
    if not 1 <= t <= n:
        raise DomainError(f"need 1 <= t <= n, got n={n}, t={t}")
    if (n + t) % 2 == 0:
        return SetFamily(n, tuple(subsets_of_size_at_least(n, max((n + t) // 2 - 1, 0))))
    top = subsets_of_size_at_least(n, (n + t - 1) // 2)
    level = union_t_level(n, t)
    if level < t:
        return SetFamily(n, tuple(top))
    best_i = ak(n, level, t).maximizers[0]
    return SetFamily(n, tuple(top) + ak_family(n, level, t, best_i).members)


def star_plus(n: int, k: int, u: int) -> SetFamily:
    """The k-uniform star plus the u-1 smallest k-sets avoiding 1."""
    check_capacity(n)
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    if u < 1:
        raise DomainError(f"u must be >= 1, got {u}")
    if u - 1 > binomial(n - 1, k):
        raise DomainError(f"only {binomial(n - 1, k)} k-sets avoid element 1, need {u - 1}")
    extra = islice((s for s in k_subsets(n, k) if not s & 1), u - 1)
    return SetFamily(n, uniform_star(n, k).members + tuple(extra))


# name -> (builder, parameter names, advertised property)
CONSTRUCTIONS = {
    "star": (star, ("n",), "t-intersecting t=1"),
    "uniform-star": (uniform_star, ("n", "k"), "t-intersecting t=1"),
    "halving": (halving_family, ("n",), "t-intersecting t=1"),
    "katona": (katona_family, ("n", "t"), "t-intersecting"),
    "ak": (ak_family, ("n", "k", "t", "i"), "t-intersecting"),
    "ekr-example": (ekr_counterexample, ("n",), "t-intersecting t=2"),
    "korner": (korner_family, ("n",), "union-t t=1"),
    "union-t": (union_t_family, ("n", "t"), "union-t"),
    "star-plus": (star_plus, ("n", "k", "u"), "uv v>=u"),
}
