from itertools import combinations

from hypothesis import given, strategies as st

from conftest import brute_t_intersecting, brute_union_t, brute_uv
from extremal_sets.core import SetFamily, elements, to_mask
from extremal_sets.constructions import korner_family, star_plus
from extremal_sets.predicates import (
    is_t_intersecting,
    is_union_t_intersecting,
    is_uv_union_intersecting,
)


def fam(n, *sets):
    return SetFamily.from_sets(n, sets)


def as_sets(family):
    return [frozenset(elements(m)) for m in family.members]


small_families = st.integers(1, 5).flatmap(
    lambda n: st.builds(
        lambda ms: SetFamily(n, tuple(ms)), st.lists(st.integers(0, (1 << n) - 1), max_size=12)
    )
)


def test_t_intersecting_examples():
    assert is_t_intersecting(fam(3, [1, 2], [1, 3], [2, 3]), 1) == (True, None)
    assert is_t_intersecting(fam(3, [1, 2, 3], [1, 2]), 2)[0]
    ok, w = is_t_intersecting(fam(2, [1], [2]), 1)
    assert not ok
    assert w.kind == "pair" and w.sets == (to_mask([1]), to_mask([2])) and w.measured == 0


def test_self_pair_counts():
    ok, w = is_t_intersecting(fam(3, [1], [1, 2, 3]), 2)
    assert not ok and w.sets == (to_mask([1]), to_mask([1]))
    assert not is_t_intersecting(fam(2, []), 1)[0]


def test_union_t_examples():
    assert is_union_t_intersecting(korner_family(5), 1)[0]
    assert is_union_t_intersecting(fam(4, [1, 2]), 7) == (True, None)
    ok, w = is_union_t_intersecting(fam(4, [1], [2], [3], [4]), 1)
    assert not ok
    assert [elements(s) for s in w.sets] == [(1,), (2,), (3,), (4,)]
    assert w.kind == "quadruple" and w.measured == 0


def test_union_t_strict_differs():
    # {1},{2},{3}: F-pair {1},{2} and G-pair {1},{3} share {1}; only overlapping pairs exist
    f = fam(3, [1], [2], [3])
    assert is_union_t_intersecting(f, 2)[0] is False
    assert is_union_t_intersecting(f, 2, strict=True)[0] is True


def test_uv_examples():
    pairs = SetFamily(4, tuple(to_mask(c) for c in combinations(range(1, 5), 2)))
    assert is_uv_union_intersecting(pairs, 2, 2)[0]
    ok, w = is_uv_union_intersecting(fam(4, [1], [2], [3], [4]), 2, 2)
    assert not ok and w.kind == "uv-split"
    assert [elements(s) for s in w.sets] == [(1,), (2,), (3,), (4,)]
    assert is_uv_union_intersecting(fam(4, [1, 2], [3, 4], [1, 3], [2, 4]), 2, 2)[0]
    assert is_uv_union_intersecting(fam(4, [1], [2]), 2, 2)[0]  # fewer than u+v members
    for n in range(3, 9):
        for u in range(1, 4):
            if u - 1 <= (n - 1) * (n - 2) // 2:
                assert is_uv_union_intersecting(star_plus(n, 2, u), u, u + 1)[0]


@given(small_families, st.integers(1, 3))
def test_t_matches_brute(f, t):
    ok, w = is_t_intersecting(f, t)
    assert ok == brute_t_intersecting(as_sets(f), t)
    if w is not None:
        assert all(s in f for s in w.sets) and w.measured < t


@given(small_families, st.integers(1, 3), st.booleans())
def test_union_t_matches_brute(f, t, strict):
    ok, w = is_union_t_intersecting(f, t, strict=strict)
    assert ok == brute_union_t(as_sets(f), t, strict)
    if w is not None:
        f1, f2, g1, g2 = w.sets
        assert f1 != f2 and g1 != g2 and w.measured < t
        assert bin((f1 | f2) & (g1 | g2)).count("1") == w.measured


@given(small_families, st.integers(1, 2), st.integers(0, 1))
def test_uv_matches_brute(f, u, extra):
    v = u + extra
    ok, w = is_uv_union_intersecting(f, u, v)
    assert ok == brute_uv(as_sets(f), u, v)
    if w is not None:
        assert len(set(w.sets)) == u + v
        left = right = 0
        for s in w.sets[:u]:
            left |= s
        for s in w.sets[u:]:
            right |= s
        assert left & right == 0


@given(small_families, st.integers(1, 3), st.data())
def test_monotone_under_deletion(f, t, data):
    keep = data.draw(st.lists(st.sampled_from(f.members), unique=True) if f.members else st.just([]))
    sub = SetFamily(f.n, tuple(keep))
    if is_t_intersecting(f, t)[0]:
        assert is_t_intersecting(sub, t)[0]
    if is_union_t_intersecting(f, t)[0]:
        assert is_union_t_intersecting(sub, t)[0]
    if is_uv_union_intersecting(f, 1, 2)[0]:
        assert is_uv_union_intersecting(sub, 1, 2)[0]


@given(small_families, st.integers(2, 4))
def test_monotone_in_t(f, t):
    for s in range(1, t):
        if is_t_intersecting(f, t)[0]:
            assert is_t_intersecting(f, s)[0]
        if is_union_t_intersecting(f, t)[0]:
            assert is_union_t_intersecting(f, s)[0]


def test_t_implies_union_t_exhaustive():
    # every t-intersecting family for n <= 4 (via all subfamilies of the
    # sets of size >= t) and a sample for n = 5
    from extremal_sets.oracle import maximal_t_intersecting_families

    for n in range(1, 6):
        for t in range(1, n + 1):
            for top in maximal_t_intersecting_families(n, t):
                members = top.members
                subs = range(1 << len(members)) if len(members) <= 12 else range(0, 1 << len(members), 97)
                for pick in subs:
                    sub = SetFamily(n, tuple(m for b, m in enumerate(members) if pick >> b & 1))
                    assert is_union_t_intersecting(sub, t)[0]


def test_witness_is_lexicographically_first():
    f = fam(4, [1], [2], [3, 4], [4])
    ok, w = is_t_intersecting(f, 1)
    # canonical order: {1}=1, {2}=2, {4}=8, {3,4}=12; first bad pair is ({1},{2})
    assert w.sets == (1, 2)
