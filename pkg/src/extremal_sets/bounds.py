"""Exact closed-form extremal bounds, including the Ahlswede-Khachatrian function."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import DomainError, binomial


@dataclass(frozen=True)
class AkResult:
    value: int
    maximizers: tuple[int, ...]
    terms: tuple[tuple[int, int], ...] = field(repr=False)

    def as_dict(self) -> dict:
        return {
            "value": str(self.value),
            "maximizers": list(self.maximizers),
            "terms": [{"i": i, "value": str(v)} for i, v in self.terms],
        }


# Bounds that are only proven above an unstated threshold in n.
THRESHOLD_DEPENDENT = {
    "ekr-t": "valid only for n > n(k); the threshold is not evaluated here",
    "uv": "valid only for n > n(k, v); the threshold is not evaluated here",
}


def binomial_tail(n: int, lo: int) -> int:
    """Sum of C(n, i) for lo <= i <= n."""
    lo = max(lo, 0)
    if lo > n:
        return 0
    term = binomial(n, lo)
    total = 0
    for i in range(lo, n + 1):
        total += term
        term = term * (n - i) // (i + 1)
    return total


def _check_t(n: int, t: int, upper: int) -> None:
    if not 1 <= t <= upper:
        raise DomainError(f"need 1 <= t <= {upper}, got t={t} (n={n})")


def nonuniform_intersecting_bound(n: int) -> int:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return 1 << (n - 1)


def ekr_uniform_bound(n: int, k: int) -> int:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if 2 * k > n:
        raise DomainError(
            f"the uniform intersecting bound C(n-1,k-1) needs k <= n/2; got n={n}, k={k}"
        )
    return binomial(n - 1, k - 1)


def katona_bound(n: int, t: int) -> int:
    """Largest t-intersecting family in the full power set of [n]."""
    _check_t(n, t, n)
    if (n + t) % 2 == 0:
        return binomial_tail(n, (n + t) // 2)
    return binomial_tail(n, (n + t + 1) // 2) + binomial(n - 1, (n + t - 1) // 2)


def ekr_t_bound(n: int, k: int, t: int) -> int:
    """C(n-t, k-t); only an upper bound once n is large enough (see THRESHOLD_DEPENDENT)."""
    if not 1 <= t <= k <= n:
        raise DomainError(f"need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")
    return binomial(n - t, k - t)


def check_ak_params(n: int, k: int, t: int, i: int) -> None:
    if not 1 <= t <= k <= n:
        raise DomainError(f"need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")
    if i < 0 or t + 2 * i > n:
        raise DomainError(f"need i >= 0 and t + 2i <= n, got i={i} (n={n}, t={t})")


def ak_term(n: int, k: int, t: int, i: int) -> int:
    """Size of {A : |A| = k, |A & [t+2i]| >= t+i}."""
    check_ak_params(n, k, t, i)
    block = t + 2 * i
    return sum(binomial(block, j) * binomial(n - block, k - j) for j in range(t + i, block + 1))


def ak_range(n: int, k: int, t: int) -> range:
    return range(0, min(k - t, (n - t) // 2) + 1)


def ak(n: int, k: int, t: int) -> AkResult:
    if not 1 <= t <= k <= n:
        raise DomainError(f"need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")
    terms = tuple((i, ak_term(n, k, t, i)) for i in ak_range(n, k, t))
    best = max(v for _, v in terms)
    return AkResult(best, tuple(i for i, v in terms if v == best), terms)


def union_t_level(n: int, t: int) -> int | None:
    """Size of the AK-shaped extra level in the odd case, or None if n + t is even."""
    if (n + t) % 2 == 0:
        return None
    return (n + t - 3) // 2


def union_t_bound(n: int, t: int) -> int:
    _check_t(n, t, n)
    if (n + t) % 2 == 0:
        return binomial_tail(n, (n + t) // 2 - 1)
    top = binomial_tail(n, (n + t - 1) // 2)
    level = union_t_level(n, t)
    # No k-set with k < t is t-intersecting, so a degenerate level contributes nothing.
    return top + (ak(n, level, t).value if level >= t else 0)


def uv_bound(n: int, k: int, u: int) -> int:
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    if u < 1:
        raise DomainError(f"u must be >= 1, got {u}")
    return binomial(n - 1, k - 1) + u - 1
