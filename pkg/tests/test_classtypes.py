from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unitary_euler.classtypes import ClassType, class_type_multiplier, enumerate_M, weak_compositions
from unitary_euler.polyq import Q


def ct(minus=(), plus=()):
    """Build from ``(m, d)`` pairs; repeats become exponents."""

    def collect(pairs):
        out: dict[tuple[int, int], int] = {}
        for pair in pairs:
            out[pair] = out.get(pair, 0) + 1
        return [(m, d, e) for (m, d), e in out.items()]

    return ClassType.make(collect(minus), collect(plus))


M_LISTED = {
    1: {ct([(1, 1)])},
    2: {ct([(2, 1)]), ct([(1, 1)] * 2), ct(plus=[(1, 1)])},
    3: {
        ct([(3, 1)]),
        ct([(1, 3)]),
        ct([(1, 1), (2, 1)]),
        ct([(1, 1)] * 3),
        ct([(1, 1)], [(1, 1)]),
    },
    4: {
        ct([(4, 1)]),
        ct([(2, 1)] * 2),
        ct([(1, 1)] * 4),
        ct([(1, 1), (1, 1), (2, 1)]),
        ct([(1, 1), (3, 1)]),
        ct([(1, 1), (1, 3)]),
        ct(plus=[(2, 1)]),
        ct(plus=[(1, 2)]),
        ct(plus=[(1, 1)] * 2),
        ct([(2, 1)], [(1, 1)]),
        ct([(1, 1)] * 2, [(1, 1)]),
    },
}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_small_M_match_listing(n):
    got = enumerate_M(n)
    assert set(got) == M_LISTED[n]
    assert len(got) == len(M_LISTED[n])


def test_M_sizes():
    assert [len(enumerate_M(n)) for n in range(1, 11)] == [1, 3, 5, 11, 17, 34, 52, 94, 145, 244]


@pytest.mark.parametrize("n", range(1, 11))
def test_M_invariants(n):
    types = enumerate_M(n)
    assert all(t.weight == n for t in types)
    assert len(set(types)) == len(types)
    assert types == sorted(types)
    assert enumerate_M(n) == types


def test_M_rejects_nonpositive():
    with pytest.raises(ValueError):
        enumerate_M(0)


def test_classtype_validation():
    with pytest.raises(ValueError):
        ClassType.make([(1, 2, 1)])
    with pytest.raises(ValueError):
        ClassType(((1, 1, 1), (1, 1, 2)))
    with pytest.raises(ValueError):
        ClassType.make([(0, 1, 1)])


def test_classtype_json_round_trip():
    t = ct([(1, 1), (1, 1), (2, 1)], [(1, 2)])
    data = t.to_json()
    assert data == {"minus": [[1, 1, 2], [2, 1, 1]], "plus": [[1, 2, 1]]}
    assert ClassType.from_json(data) == t
    assert str(t) == "({(1,1)^2, (2,1)}, {(1,2)})"


def test_weak_composition_examples():
    assert set(weak_compositions(2, 2)) == {(0, 2), (1, 1), (2, 0)}
    assert list(weak_compositions(0, 3)) == [(0, 0, 0)]
    assert len(list(weak_compositions(3, 4))) == 20


@given(st.integers(0, 7), st.integers(1, 5))
def test_weak_compositions_count(n, parts):
    comps = list(weak_compositions(n, parts))
    assert len(comps) == comb(n + parts - 1, n)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == n and len(c) == parts and min(c) >= 0 for c in comps)


def test_multiplier_examples():
    assert class_type_multiplier(ct([(1, 1)] * 2)) == (Q**2 + Q) / 2
    assert class_type_multiplier(ct(plus=[(1, 1)])) == (Q + 1) * (Q - 2) / 2
    assert class_type_multiplier(ct([(1, 1), (2, 1)])) == Q * (Q + 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_multipliers_sum_to_class_count(n):
    total = sum((class_type_multiplier(t) for t in enumerate_M(n)), Q * 0)
    assert total == Q**n + Q ** (n - 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_m_one_types_match_multiset_pairs(n):
    # Types with all multiplicities 1 are the pairs of degree multisets with
    # odd minus degrees and sum(minus) + 2 sum(plus) = n.
    restricted = {t for t in enumerate_M(n) if all(m == 1 for m, _, _ in t.minus + t.plus)}

    def multisets(total, odd_only):
        if total == 0:
            yield ()
            return

        def rec(rem, smallest):
            if rem == 0:
                yield ()
                return
            for d in range(smallest, rem + 1):
                if odd_only and d % 2 == 0:
                    continue
                for rest in rec(rem - d, d):
                    yield (d,) + rest

        yield from rec(total, 1)

    expected = set()
    for w in range(0, n + 1):
        if (n - w) % 2:
            continue
        for lm in multisets(w, True):
            for lp in multisets((n - w) // 2, False):
                expected.add(ct([(1, d) for d in lm], [(1, d) for d in lp]))
    assert restricted == expected
