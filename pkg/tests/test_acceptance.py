"""Acceptance suite: the headline claims the package must reproduce.

Each test matches one numbered acceptance requirement. Everything asserted
here is re-derived at run time (searches, exhaustive sweeps, exact integer
arithmetic); nothing is trusted from the computation under test except where
a lower bound is explicitly accepted by citation.

Two sub-claims are recorded as strict expected failures rather than
assertions: a tempting closed form and a tempting determining set that are
both refuted by exhaustive computation (the companion test next to each
asserts the corrected statement).
"""

import itertools
import math
from fractions import Fraction
from math import isqrt

import pytest

from jdist.actions import (
    classify,
    count_fixed_equipartitions,
    failure_bound_parts,
    generators,
    max_fixed_bound,
    random_coloring_failure_bound,
)
from jdist.combinatorics import KSubset, Permutation, binom, identity, window
from jdist.engine import (
    automorphism_group_order,
    breaking_automorphism,
    brute_force_dist,
    case8_value,
    case_coloring,
    distinguishing_number,
    matching_coloring,
    random_3_coloring,
)
from jdist.graphs import MergedJohnsonSpec, build, degree_partition, induced_subgraph
from jdist.search import (
    Coloring,
    is_asymmetric,
    is_automorphism,
    is_determining_set,
    is_distinguishing,
)


def vertex_indices(g, subsets):
    return [g.vertex_index(s) for s in subsets]


# --- 1. spot table ---------------------------------------------------------

SPOT_TABLE = [
    (5, 2, {1}, 3),
    (5, 2, {2}, 3),
    (7, 3, {1}, 2),
    (7, 3, {2}, 2),
    (7, 3, {1, 3}, 2),
    (6, 3, {1}, 2),
    (6, 3, {2}, 2),
    (8, 4, {1, 3}, 3),
    (8, 4, {2}, 3),
    (8, 4, {4}, 9),
]


@pytest.mark.parametrize("n,k,I,want", SPOT_TABLE)
def test_criterion_01_spot_table(n, k, I, want):
    assert distinguishing_number(n, k, I).dist == want


# --- 2. oracle agreement on every tiny spec --------------------------------

def test_criterion_02_oracle_agreement():
    specs = []
    for n in range(2, 16):
        for k in range(1, n // 2 + 1):
            if binom(n, k) > 10:
                continue
            for size in range(1, k + 1):
                for distances in itertools.combinations(range(1, k + 1), size):
                    specs.append((n, k, frozenset(distances)))
    assert len(specs) >= 15
    for n, k, distances in specs:
        cert = distinguishing_number(n, k, distances)
        g = build(MergedJohnsonSpec(n, k, distances))
        assert brute_force_dist(g, g.n_vertices) == cert.dist, (n, k, distances)


# --- 3. the Petersen exception ---------------------------------------------

def test_criterion_03_petersen_two_colorings_all_fail():
    g = build(MergedJohnsonSpec(5, 2, {2}))
    for bits in itertools.product((0, 1), repeat=10):
        assert not is_distinguishing(g, Coloring(bits, 2))


def test_criterion_03_petersen_three_coloring_exists():
    spec = MergedJohnsonSpec(5, 2, {2})
    coloring = case_coloring(spec)
    assert coloring.num_colors == 3
    assert is_distinguishing(build(spec), coloring)


# --- 4. the exceptional 495-vertex determining set --------------------------

def exceptional_17_set():
    n, k = 12, 4
    ident = identity(n)
    vs = [window(ident, j, k) for j in range(1, n + 1)]
    from jdist.combinatorics import transposition

    for tau, positions in ((transposition(1, n), (2, 10)),
                           (transposition(2, n), (3, 11))):
        vs.extend(window(tau, j, k) for j in positions)
    vs.append(KSubset.from_elements((1, 3, 5, 7), n))
    return vs


def test_criterion_04_exceptional_determining_set():
    spec = MergedJohnsonSpec(12, 4, {1, 3})
    g = build(spec)
    vs = exceptional_17_set()
    assert len(vs) == 17
    verts = vertex_indices(g, vs)
    assert is_determining_set(g, verts)
    sub = induced_subgraph(g, verts)
    assert is_asymmetric(sub)
    sizes = {d: len(vv) for d, vv in degree_partition(sub).items()}
    assert sizes == {5: 4, 6: 6, 7: 3, 8: 3, 9: 1}


# --- 5. the two window families --------------------------------------------

def odd_family_windows(m):
    return [window(identity(2 * m + 1), j, m) for j in range(1, m + 3)]


def even_family_set(m):
    vs = [window(identity(2 * m), j, m) for j in range(1, 2 * m + 1)]
    attachment = list(range(1, m - 1)) + [m, m + 2]
    vs.append(KSubset.from_elements(attachment, 2 * m))
    return vs


@pytest.mark.parametrize("m", [3, 4])
def test_criterion_05_odd_family_determining(m):
    spec = MergedJohnsonSpec(2 * m + 1, m, {1, m})
    g = build(spec)
    assert is_determining_set(g, vertex_indices(g, odd_family_windows(m)))


def test_criterion_05_even_family_determining_m4():
    spec = MergedJohnsonSpec(8, 4, {1})
    g = build(spec)
    assert is_determining_set(g, vertex_indices(g, even_family_set(4)))


@pytest.mark.xfail(strict=True, reason=(
    "the attachment {1,3,5} is mapped to its complement by the half-shift, so "
    "composing with the complement map fixes the whole listed set; the "
    "pointwise stabilizer has order 2 and the set is not determining"
))
def test_criterion_05_even_family_determining_m3_gapped_attachment():
    spec = MergedJohnsonSpec(6, 3, {1})
    g = build(spec)
    assert is_determining_set(g, vertex_indices(g, even_family_set(3)))


def test_criterion_05_even_family_m3_with_corrected_attachment():
    # replacing the attachment with any set not carried to its own
    # complement by the half-shift restores the property
    spec = MergedJohnsonSpec(6, 3, {1})
    g = build(spec)
    vs = even_family_set(3)[:-1]
    vs.append(KSubset.from_elements((1, 2, 4), 6))
    assert is_determining_set(g, vertex_indices(g, vs))


# --- 6. the two-coloring breaking construction ------------------------------

def test_criterion_06_breaking_automorphism_sweep():
    import random

    spec = MergedJohnsonSpec(8, 4, {1, 3})
    g = build(spec)
    nv = g.n_vertices

    colorings = [Coloring.constant(nv, 0, 2)]
    alternating = [0] * nv
    for i, lab in enumerate(g.labels):
        alternating[i] = 0 if 1 in lab else 1
    colorings.append(Coloring(tuple(alternating), 2))
    rng = random.Random(0)
    for _ in range(1000):
        colorings.append(Coloring(tuple(rng.randrange(2) for _ in range(nv)), 2))

    for coloring in colorings:
        p = breaking_automorphism(spec, coloring)
        assert not p.is_identity()
        assert is_automorphism(g, p)
        assert all(coloring.colors[p(v)] == coloring.colors[v] for v in range(nv))


# --- 7. equipartition counting and the probability bound --------------------

def disjoint_transpositions(m):
    images = list(range(2 * m))
    for i in range(m):
        images[2 * i], images[2 * i + 1] = images[2 * i + 1], images[2 * i]
    return Permutation(tuple(images))


def one_transposition(m):
    images = list(range(2 * m))
    images[0], images[1] = images[1], images[0]
    return Permutation(tuple(images))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_criterion_07_transposition_closed_form(m):
    assert count_fixed_equipartitions(one_transposition(m)) == binom(2 * m - 2, m - 2)


@pytest.mark.parametrize("m", [3, 5])
def test_criterion_07_odd_involution_closed_form(m):
    assert count_fixed_equipartitions(disjoint_transpositions(m)) == 2 ** (m - 1)


@pytest.mark.xfail(strict=True, reason=(
    "2^(m-1) + C(m, m/2) double-counts the partitions both of whose sides are "
    "unions of transposition pairs; brute force gives 11, not 14, at m = 4 "
    "(at m = 2 the formula would exceed the total number of equipartitions)"
))
def test_criterion_07_even_involution_additive_closed_form():
    assert count_fixed_equipartitions(disjoint_transpositions(4)) == 2**3 + binom(4, 2)


def test_criterion_07_even_involution_corrected_form():
    for m in (2, 4):
        want = 2 ** (m - 1) + binom(m, m // 2) // 2
        assert count_fixed_equipartitions(disjoint_transpositions(m)) == want
    assert count_fixed_equipartitions(disjoint_transpositions(4)) == 11


def test_criterion_07_max_over_cycle_types_at_m4():
    def representatives(n):
        def parts(rest, biggest):
            if rest == 0:
                yield ()
                return
            for p in range(min(rest, biggest), 0, -1):
                for tail in parts(rest - p, p):
                    yield (p,) + tail

        for ctype in parts(n, n):
            if all(c == 1 for c in ctype):
                continue
            images = list(range(n))
            pos = 0
            for c in ctype:
                for i in range(c):
                    images[pos + i] = pos + (i + 1) % c
                pos += c
            yield Permutation(tuple(images))

    best = max(count_fixed_equipartitions(p) for p in representatives(8))
    assert best == 15
    assert max_fixed_bound(4) == 15


def test_criterion_07_probability_bound():
    assert failure_bound_parts(4) == (40320, 59049)
    assert random_coloring_failure_bound(4) == Fraction(40320, 59049)
    assert random_coloring_failure_bound(4) < 1
    for m in range(4, 11):
        num, den = failure_bound_parts(m)
        assert num < den


# --- 8. the randomized three-coloring end to end ----------------------------

def test_criterion_08_random_three_coloring():
    spec = MergedJohnsonSpec(8, 4, {1, 3})
    coloring = random_3_coloring(spec, seed=0, max_attempts=100)
    assert is_distinguishing(build(spec), coloring)
    assert distinguishing_number(8, 4, {1, 3}).dist == 3


# --- 9. the matching formula -----------------------------------------------

def exact_ceiling(pairs):
    # ceil((1 + sqrt(1 + 8 pairs)) / 2) in integer arithmetic
    x = 1 + 8 * pairs
    s = isqrt(x)
    if s * s == x:
        return (1 + s + 1) // 2 if (1 + s) % 2 else (1 + s) // 2
    return (1 + s) // 2 + 1


@pytest.mark.parametrize("m", range(2, 9))
def test_criterion_09_formula_matches_exact_ceiling(m):
    assert case8_value(m) == exact_ceiling(binom(2 * m, m) // 2)


@pytest.mark.parametrize("m", [2, 3])
def test_criterion_09_matching_coloring_distinguishes(m):
    spec = MergedJohnsonSpec(2 * m, m, {m})
    r = case8_value(m)
    assert is_distinguishing(build(spec), matching_coloring(m, r))


@pytest.mark.parametrize("m", [2, 3])
def test_criterion_09_one_fewer_color_fails_by_pigeonhole(m):
    r = case8_value(m)
    pairs = binom(2 * m, m) // 2
    assert binom(r - 1, 2) < pairs
    with pytest.raises(ValueError):
        matching_coloring(m, r - 1)


# --- 10. group actions against the search engine ----------------------------

def proper_specs(max_n):
    for n in range(4, max_n + 1):
        for k in range(2, n // 2 + 1):
            for size in range(1, k):
                for distances in itertools.combinations(range(1, k + 1), size):
                    yield MergedJohnsonSpec(n, k, frozenset(distances))


def test_criterion_10_generators_are_automorphisms():
    expected_order = {
        1: lambda spec, e: math.factorial(spec.n),
        3: lambda spec, e: math.factorial(spec.n),
        5: lambda spec, e: 2 * math.factorial(spec.n),
        7: lambda spec, e: 2**e * math.factorial(e),
    }
    checked_orders = 0
    for spec in proper_specs(9):
        desc = classify(spec)
        gens, _ = generators(desc, spec)
        g = build(spec)
        assert gens, spec
        for p in gens:
            assert is_automorphism(g, p), spec
        if desc.case_id in expected_order:
            e = spec.half_pair_count if spec.n == 2 * spec.k else 0
            want = expected_order[desc.case_id](spec, e)
            assert automorphism_group_order(spec) == want, spec
            checked_orders += 1
    assert checked_orders >= 20


def test_criterion_10_exceptional_order_exceeds_induced_action():
    order = automorphism_group_order(MergedJohnsonSpec(12, 4, {1, 3}))
    assert order > math.factorial(12) == 479001600


# --- 11. complement duality -------------------------------------------------

def test_criterion_11_complement_duality():
    seen = 0
    for n in range(4, 9):
        for k in range(2, n // 2 + 1):
            full = frozenset(range(1, k + 1))
            for size in range(1, k):
                for distances in itertools.combinations(sorted(full), size):
                    I = frozenset(distances)
                    partner = full - I
                    if min(I) > min(partner):
                        continue
                    a = distinguishing_number(n, k, I).dist
                    b = distinguishing_number(n, k, partner).dist
                    assert a == b, (n, k, sorted(I), sorted(partner))
                    seen += 1
    assert seen >= 20
