"""Unit tests for subsets, permutations, and windows."""

import math

import pytest
from hypothesis import given, strategies as st

from jdist.combinatorics import (
    KSubset,
    Permutation,
    binom,
    compose,
    identity,
    intersection_size,
    inverse,
    parse_cycles,
    rank,
    transposition,
    unrank,
    window,
)


@given(st.integers(0, 60), st.integers(-3, 63))
def test_binom_matches_math_comb(n, r):
    assert binom(n, r) == (math.comb(n, r) if 0 <= r <= n else 0)


def test_binom_pascal_row():
    assert [binom(5, r) for r in range(6)] == [1, 5, 10, 10, 5, 1]


@st.composite
def subsets(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    elements = draw(st.permutations(range(1, n + 1)))[:k]
    return KSubset.from_elements(elements, n)


class TestKSubset:
    def test_from_elements_roundtrip(self):
        s = KSubset.from_elements([3, 1, 5], 6)
        assert s.elements == (1, 3, 5)
        assert s.size == 3
        assert 3 in s and 2 not in s and 7 not in s

    def test_rejects_out_of_range_and_duplicates(self):
        with pytest.raises(ValueError):
            KSubset.from_elements([0], 5)
        with pytest.raises(ValueError):
            KSubset.from_elements([6], 5)
        with pytest.raises(ValueError):
            KSubset.from_elements([2, 2], 5)

    @given(subsets())
    def test_complement_is_involution(self, s):
        assert s.complement().complement() == s
        assert s.complement().size == s.n - s.size

    def test_colex_rank_order(self):
        # colex: compare largest differing element
        n, k = 5, 2
        ordered = [unrank(i, n, k).elements for i in range(binom(n, k))]
        assert ordered[0] == (1, 2)
        assert ordered[-1] == (4, 5)
        assert ordered == sorted(ordered, key=lambda t: tuple(reversed(t)))

    @given(st.integers(1, 14), st.data())
    def test_rank_unrank_roundtrip(self, n, data):
        k = data.draw(st.integers(0, n))
        i = data.draw(st.integers(0, binom(n, k) - 1))
        s = unrank(i, n, k)
        assert s.size == k and s.n == n
        assert rank(s) == i

    @given(subsets())
    def test_apply_identity_fixes(self, s):
        assert s.apply(identity(s.n)) == s

    @given(subsets(max_n=8), st.data())
    def test_apply_respects_membership(self, s, data):
        images = data.draw(st.permutations(range(s.n)))
        phi = Permutation(tuple(images))
        image = s.apply(phi)
        assert sorted(phi(e) for e in s.elements) == list(image.elements)

    def test_apply_rejects_mismatched_degree(self):
        with pytest.raises(ValueError):
            KSubset.from_elements([1], 4).apply(identity(5))

    def test_intersection_size(self):
        a = KSubset.from_elements([1, 2, 3], 7)
        b = KSubset.from_elements([3, 4, 5], 7)
        assert intersection_size(a, b) == 1
        assert intersection_size(a, a) == 3


class TestPermutation:
    def test_one_line_roundtrip(self):
        p = Permutation.from_one_line([2, 3, 1])
        assert p.one_line() == (2, 3, 1)
        assert p(1) == 2 and p(3) == 1

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    @given(st.integers(1, 9), st.data())
    def test_compose_applies_right_first(self, n, data):
        a = Permutation(tuple(data.draw(st.permutations(range(n)))))
        b = Permutation(tuple(data.draw(st.permutations(range(n)))))
        c = compose(a, b)
        for x in range(1, n + 1):
            assert c(x) == a(b(x))

    @given(st.integers(1, 9), st.data())
    def test_inverse_cancels(self, n, data):
        p = Permutation(tuple(data.draw(st.permutations(range(n)))))
        assert compose(p, inverse(p)).images == identity(n).images
        assert compose(inverse(p), p).images == identity(n).images

    def test_adjacent_transposition(self):
        t = transposition(2, 5)
        assert t.one_line() == (1, 3, 2, 4, 5)
        with pytest.raises(ValueError):
            transposition(5, 5)
        with pytest.raises(ValueError):
            transposition(0, 5)

    def test_extended_flag(self):
        p = Permutation.identity(4, extended=True)
        assert p.degree == 5 and p.ground_size == 4
        with pytest.raises(ValueError):
            compose(p, identity(5))

    def test_parse_cycles(self):
        p = parse_cycles("(1 2)(3 4 5)", 6)
        assert p.one_line() == (2, 1, 4, 5, 3, 6)
        assert parse_cycles("", 4).images == identity(4).images
        with pytest.raises(ValueError):
            parse_cycles("(1 7)", 6)
        with pytest.raises(ValueError):
            parse_cycles("(1 2)(2 3)", 6)


class TestWindow:
    def test_identity_windows(self):
        ident = identity(7)
        assert window(ident, 1, 3).elements == (1, 2, 3)
        assert window(ident, 5, 3).elements == (5, 6, 7)

    def test_window_wraps_modulo_n(self):
        ident = identity(7)
        assert window(ident, 6, 3).elements == (1, 6, 7)
        assert window(ident, 7, 3).elements == (1, 2, 7)

    def test_window_follows_permutation(self):
        tau = transposition(1, 6)
        # images start 2,1,3,...; the window at 1 of width 2 is {phi(1),phi(2)}
        assert window(tau, 1, 2).elements == (1, 2)
        assert window(tau, 2, 2).elements == (1, 3)

    @given(st.integers(2, 12), st.data())
    def test_window_size_and_count(self, n, data):
        k = data.draw(st.integers(1, n // 2))
        images = data.draw(st.permutations(range(n)))
        phi = Permutation(tuple(images))
        ws = [window(phi, ell, k) for ell in range(1, n + 1)]
        assert all(w.size == k for w in ws)
        # consecutive windows overlap in exactly k-1 points
        for a, b in zip(ws, ws[1:]):
            assert intersection_size(a, b) == k - 1

    def test_window_rejects_large_k(self):
        with pytest.raises(ValueError):
            window(identity(6), 1, 4)
