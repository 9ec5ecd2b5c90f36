"""Exhaustive ground truth: exact maximum family sizes at desk scale.

Pairwise properties (t-intersecting, uniform or not) are maximum clique
problems on the compatibility graph and are solved by a bitset
branch-and-bound with greedy colouring bounds.  The union properties are
not pairwise, so they use include/exclude backtracking with incremental
violation checks.  All searches are deterministic and count nodes instead of
wall-clock time.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from . import bounds, constructions
from .core import (
    CapacityError,
    DomainError,
    SetFamily,
    binomial,
    format_family,
    k_subsets,
    popcount,
    subsets_of_size_at_least,
)

DEFAULT_MAX_NODES = 10**8


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise DomainError("max_nodes must be positive")


@dataclass(frozen=True)
class SearchResult:
    optimum: int
    witness: SetFamily
    nodes_explored: int
    complete: bool

    def as_dict(self) -> dict:
        return {
            "optimum": str(self.optimum),
            "complete": self.complete,
            "nodes_explored": self.nodes_explored,
            "witness": format_family(self.witness),
        }


class _BudgetExhausted(Exception):
    pass


def _budget(budget: Optional[SearchBudget]) -> SearchBudget:
    return budget if budget is not None else SearchBudget()


# ---------------------------------------------------------------------------
# maximum clique
# ---------------------------------------------------------------------------

def _adjacency(vertices: Sequence[int], t: int) -> list[int]:
    adj = [0] * len(vertices)
    for a, b in combinations(range(len(vertices)), 2):
        if popcount(vertices[a] & vertices[b]) >= t:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


class _CliqueSearch:
    """Branch and bound in the style of MCQ/BBMC on int bitsets."""

    def __init__(self, adj: list[int], incumbent: list[int], max_nodes: int):
        self.adj = adj
        self.best = list(incumbent)
        self.max_nodes = max_nodes
        self.nodes = 0

    def _colour_order(self, cand: int) -> tuple[list[int], list[int]]:
        adj = self.adj
        order: list[int] = []
        colours: list[int] = []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~adj[v] & ~low
                uncoloured &= ~low
                order.append(v)
                colours.append(colour)
        return order, colours

    def expand(self, clique: list[int], cand: int) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _BudgetExhausted
        order, colours = self._colour_order(cand)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colours[idx] <= len(self.best):
                return
            v = order[idx]
            clique.append(v)
            sub = cand & self.adj[v]
            if sub:
                self.expand(clique, sub)
            elif len(clique) > len(self.best):
                self.best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    def run(self, root: Optional[int] = None) -> bool:
        everyone = (1 << len(self.adj)) - 1
        try:
            if root is None:
                self.expand([], everyone)
            else:
                self.expand([root], self.adj[root])
        except _BudgetExhausted:
            return False
        return True


def _clique_result(
    n: int,
    vertices: list[int],
    t: int,
    seed: SetFamily,
    budget: SearchBudget,
    root: Optional[int] = None,
) -> SearchResult:
    index = {s: x for x, s in enumerate(vertices)}
    search = _CliqueSearch(_adjacency(vertices, t), [index[s] for s in seed.members], budget.max_nodes)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10 * len(vertices) + 1000))
    try:
        complete = search.run(root)
    finally:
        sys.setrecursionlimit(limit)
    witness = SetFamily(n, tuple(vertices[x] for x in search.best))
    return SearchResult(len(witness), witness, search.nodes, complete)


def max_t_intersecting_uniform(
    n: int, k: int, t: int, budget: Optional[SearchBudget] = None
) -> SearchResult:
    """Largest t-intersecting subfamily of the k-sets of [n].

    The AK construction is the starting incumbent.  The compatibility graph
    is vertex-transitive, so the search may assume the clique contains the
    first k-set [k].
    """
    if not 1 <= t <= k <= n:
        raise DomainError(f"need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")
    if n > 20:
        raise CapacityError(f"uniform oracle is capped at n=20, got {n}")
    a = bounds.ak(n, k, t)
    seed = constructions.ak_family(n, k, t, a.maximizers[0])
    vertices = list(k_subsets(n, k))
    return _clique_result(n, vertices, t, seed, _budget(budget), root=0)


def max_t_intersecting(n: int, t: int, budget: Optional[SearchBudget] = None) -> SearchResult:
    """Largest t-intersecting family in the power set of [n] (n <= 6)."""
    if not 1 <= t <= n:
        raise DomainError(f"need 1 <= t <= n, got n={n}, t={t}")
    if n > 6:
        raise CapacityError(f"nonuniform oracle is capped at n=6, got {n}")
    vertices = subsets_of_size_at_least(n, t)
    return _clique_result(n, vertices, t, constructions.katona_family(n, t), _budget(budget))


def _bron_kerbosch(adj: list[int], r: list[int], p: int, x: int, out: list[list[int]]) -> None:
    if not p and not x:
        out.append(list(r))
        return
    # pivot maximizing |P & N(u)|
    px = p | x
    best_u, best_cnt = -1, -1
    while px:
        low = px & -px
        u = low.bit_length() - 1
        c = popcount(p & adj[u])
        if c > best_cnt:
            best_u, best_cnt = u, c
        px &= ~low
    todo = p & ~adj[best_u]
    while todo:
        low = todo & -todo
        v = low.bit_length() - 1
        r.append(v)
        _bron_kerbosch(adj, r, p & adj[v], x & adj[v], out)
        r.pop()
        p &= ~low
        x |= low
        todo &= ~low


def maximal_t_intersecting_families(n: int, t: int) -> list[SetFamily]:
    """Every inclusion-maximal t-intersecting family, in canonical order."""
    if not 1 <= t <= n:
        raise DomainError(f"need 1 <= t <= n, got n={n}, t={t}")
    if n > 6:
        raise CapacityError(f"maximal-family enumeration is capped at n=6, got {n}")
    vertices = subsets_of_size_at_least(n, t)
    adj = _adjacency(vertices, t)
    cliques: list[list[int]] = []
    _bron_kerbosch(adj, [], (1 << len(vertices)) - 1, 0, cliques)
    families = [SetFamily(n, tuple(vertices[x] for x in c)) for c in cliques]
    families.sort(key=lambda f: f.members)
    return families


def enumerate_maximal_t_intersecting(n: int, t: int) -> Iterator[SetFamily]:
    yield from maximal_t_intersecting_families(n, t)


# ---------------------------------------------------------------------------
# union-t-intersecting (non-uniform)
# ---------------------------------------------------------------------------

class _UnionTSearch:
    def __init__(self, n: int, t: int, incumbent: Sequence[int], max_nodes: int):
        self.t = t
        self.vertices = list(range(1 << n))
        self.best = list(incumbent)
        self.max_nodes = max_nodes
        self.nodes = 0
        self.chosen: list[int] = []
        self.unions: dict[int, int] = {}

    def _try_add(self, s: int) -> Optional[list[int]]:
        t = self.t
        new = [s | m for m in self.chosen]
        for a, ua in enumerate(new):
            if popcount(ua) < t:
                return None
            for ub in self.unions:
                if popcount(ua & ub) < t:
                    return None
            for ub in new[a + 1:]:
                if popcount(ua & ub) < t:
                    return None
        return new

    def dfs(self, pos: int) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if len(self.chosen) > len(self.best):
            self.best = list(self.chosen)
        verts = self.vertices
        if len(self.chosen) + len(verts) - pos <= len(self.best):
            return
        s = verts[pos]
        new = self._try_add(s)
        if new is not None:
            self.chosen.append(s)
            for u in new:
                self.unions[u] = self.unions.get(u, 0) + 1
            self.dfs(pos + 1)
            for u in new:
                c = self.unions[u] - 1
                if c:
                    self.unions[u] = c
                else:
                    del self.unions[u]
            self.chosen.pop()
        self.dfs(pos + 1)


def max_union_t_intersecting(
    n: int, t: int, budget: Optional[SearchBudget] = None
) -> SearchResult:
    """Largest union-t-intersecting family in the power set of [n] (n <= 5)."""
    if not 1 <= t <= n:
        raise DomainError(f"need 1 <= t <= n, got n={n}, t={t}")
    if n > 5:
        raise CapacityError(f"union-t oracle is capped at n=5, got {n}")
    seed = constructions.union_t_family(n, t)
    search = _UnionTSearch(n, t, seed.members, _budget(budget).max_nodes)
    try:
        search.dfs(0)
        complete = True
    except _BudgetExhausted:
        complete = False
    witness = SetFamily(n, tuple(search.best))
    return SearchResult(len(witness), witness, search.nodes, complete)


# ---------------------------------------------------------------------------
# (u, v)-union-intersecting (uniform)
# ---------------------------------------------------------------------------

class _UVSearch:
    def __init__(self, vertices: list[int], u: int, v: int, incumbent: Sequence[int], max_nodes: int):
        self.vertices = vertices
        self.sides = [(u, v)] if u == v else [(u, v), (v, u)]
        self.best = list(incumbent)
        self.max_nodes = max_nodes
        self.nodes = 0
        self.chosen: list[int] = []
        # disjoint[x]: bitset over positions in ``chosen`` of members disjoint from chosen[x]
        self.disjoint: list[int] = []

    def _violates(self, s: int) -> bool:
        chosen = self.chosen
        m = len(chosen)
        row = 0
        for b, c in enumerate(chosen):
            if s & c == 0:
                row |= 1 << b
        for a, b in self.sides:
            if m + 1 < a + b:
                continue
            # s sits on the side of size a together with a-1 chosen members
            for others in combinations(range(m), a - 1):
                avail = row
                for o in others:
                    avail &= self.disjoint[o] & ~(1 << o)
                    if not avail:
                        break
                if popcount(avail) >= b:
                    return True
        return False

    def _push(self, s: int) -> None:
        row = 0
        for b, c in enumerate(self.chosen):
            if s & c == 0:
                row |= 1 << b
                self.disjoint[b] |= 1 << len(self.chosen)
        self.chosen.append(s)
        self.disjoint.append(row)

    def _pop(self) -> None:
        self.chosen.pop()
        self.disjoint.pop()
        mask = ~(1 << len(self.chosen))
        for b in range(len(self.disjoint)):
            self.disjoint[b] &= mask

    def dfs(self, pos: int) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if len(self.chosen) > len(self.best):
            self.best = list(self.chosen)
        verts = self.vertices
        if len(self.chosen) + len(verts) - pos <= len(self.best):
            return
        s = verts[pos]
        if not self._violates(s):
            self._push(s)
            self.dfs(pos + 1)
            self._pop()
        self.dfs(pos + 1)


def max_uv_union_intersecting_uniform(
    n: int, k: int, u: int, v: int, budget: Optional[SearchBudget] = None
) -> SearchResult:
    """Largest (u, v)-union-intersecting subfamily of the k-sets of [n].

    By symmetry an optimal family may be assumed to contain [k], so the
    first k-set is always included.
    """
    if not 1 <= u <= v:
        raise DomainError(f"need 1 <= u <= v, got u={u}, v={v}")
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n > 12:
        raise CapacityError(f"(u,v) oracle is capped at n=12, got {n}")
    vertices = list(k_subsets(n, k))
    if k < n and u - 1 <= binomial(n - 1, k):
        seed = constructions.star_plus(n, k, u).members
    else:
        seed = (vertices[0],)
    search = _UVSearch(vertices, u, v, seed, _budget(budget).max_nodes)
    search._push(vertices[0])
    try:
        search.dfs(1)
        complete = True
    except _BudgetExhausted:
        complete = False
    witness = SetFamily(n, tuple(search.best))
    return SearchResult(len(witness), witness, search.nodes, complete)


@dataclass(frozen=True)
class ProbeRow:
    n: int
    oracle: int
    bound: int
    complete: bool

    def as_dict(self) -> dict:
        return {"n": self.n, "oracle": str(self.oracle), "bound": str(self.bound), "complete": self.complete}


@dataclass(frozen=True)
class ProbeTable:
    k: int
    u: int
    v: int
    rows: tuple[ProbeRow, ...]
    threshold_candidate: Optional[int]

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "u": self.u,
            "v": self.v,
            "rows": [r.as_dict() for r in self.rows],
            "threshold_candidate": self.threshold_candidate,
        }


def threshold_probe_uv(
    k: int, u: int, v: int, n_max: int, budget: Optional[SearchBudget] = None
) -> ProbeTable:
    """Oracle value against C(n-1,k-1)+u-1 for n = k+1 .. n_max.

    ``threshold_candidate`` is the smallest n from which every probed row is
    complete and tight; it says nothing about n beyond ``n_max``.
    """
    rows = []
    for n in range(k + 1, n_max + 1):
        res = max_uv_union_intersecting_uniform(n, k, u, v, budget)
        rows.append(ProbeRow(n, res.optimum, bounds.uv_bound(n, k, u), res.complete))
    candidate = None
    for r in reversed(rows):
        if not (r.complete and r.oracle == r.bound):
            break
        candidate = r.n
    return ProbeTable(k, u, v, tuple(rows), candidate)


# ---------------------------------------------------------------------------
# compression
# ---------------------------------------------------------------------------

def compress(family: SetFamily, i: int, j: int) -> SetFamily:
    """Left-compression S_{i,j}: replace j by i where the result is not already present."""
    n = family.n
    if not 1 <= i < j <= n:
        raise DomainError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    present = set(family.members)
    out = []
    for m in family.members:
        if m & bj and not m & bi:
            shifted = (m & ~bj) | bi
            out.append(m if shifted in present else shifted)
        else:
            out.append(m)
    return SetFamily(n, tuple(out))


def compress_fully(family: SetFamily, max_rounds: int = 10_000) -> tuple[SetFamily, int]:
    """Apply every S_{i,j} until nothing changes; returns the fixed point and round count."""
    current = family
    for rounds in range(1, max_rounds + 1):
        before = current
        for i, j in combinations(range(1, family.n + 1), 2):
            current = compress(current, i, j)
        if current == before:
            return current, rounds
    raise RuntimeError("compression did not stabilize")


def is_left_compressed(family: SetFamily) -> bool:
    return all(
        compress(family, i, j) == family for i, j in combinations(range(1, family.n + 1), 2)
    )
