"""Explicit automorphism families of merged Johnson graphs.

Which symmetries a merged Johnson graph J(n, k)_I has depends on (n, k, I) in
seven structurally different ways; ``classify`` returns the case together
with a group description, and ``generators`` builds explicit vertex
permutations for it. All generators are exact constructions on subset labels;
the search engine re-checks them in the test suite rather than trusting the
classification.

The module also counts equipartitions of {1..2m} fixed setwise by a
permutation, which drives the success bound for the randomized 3-coloring of
the n = 2k self-paired family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinatorics import (
    KSubset,
    Permutation,
    binom,
    rank,
    transposition,
    unrank,
)
from .graphs import InvalidSpec, MergedJohnsonSpec, build
from .search import VertexPermutation, search


@dataclass(frozen=True)
class AutDescriptor:
    """Classification of the full automorphism group of a spec."""

    case_id: int
    group_name: str
    has_explicit_generators: bool


def classify(spec: MergedJohnsonSpec) -> AutDescriptor:
    """Classify Aut(J(n, k)_I) for canonical specs with 2 <= k <= n/2 and
    proper nonempty I."""
    n, k, I = spec.n, spec.k, spec.distances
    if k < 2:
        raise InvalidSpec("classification needs k >= 2; k = 1 graphs are complete")
    if I == frozenset(range(1, k + 1)):
        raise InvalidSpec("classification needs a proper distance set")
    if n == 2 * k:
        full_range = frozenset(range(1, k))
        if I == frozenset({k}) or I == full_range:
            e = spec.half_pair_count
            return AutDescriptor(7, f"S_2 wr S_{e}", True)
        if spec.distances_without_k == spec.reflected_distances:
            e = spec.half_pair_count
            return AutDescriptor(6, f"S_2^{e} : S_{n}", True)
        return AutDescriptor(5, f"S_2 x S_{n}", True)
    if 2 * k == n - 1:
        if I == frozenset(k + 1 - i for i in I):
            return AutDescriptor(4, f"S_{n + 1}", True)
        return AutDescriptor(3, f"S_{n}", True)
    # now 2 <= k < (n-1)/2
    if (n, k) == (12, 4) and I in (frozenset({1, 3}), frozenset({2, 4})):
        return AutDescriptor(2, "O10^-(2)", False)
    return AutDescriptor(1, f"S_{n}", True)


def induced_vertex_perm(sigma: Permutation, spec: MergedJohnsonSpec) -> VertexPermutation:
    """The vertex permutation M -> sigma(M) on the colex-ordered k-subsets."""
    if sigma.extended or sigma.degree != spec.n:
        raise ValueError("permutation does not act on the spec's ground set")
    nv = spec.num_vertices
    images = [0] * nv
    for i in range(nv):
        images[i] = rank(unrank(i, spec.n, spec.k).apply(sigma))
    return VertexPermutation(tuple(images))


def complement_involution(spec: MergedJohnsonSpec) -> VertexPermutation:
    """The map M -> complement(M); needs n = 2k so complements are vertices."""
    if spec.n != 2 * spec.k:
        raise InvalidSpec("complement map needs n = 2k")
    nv = spec.num_vertices
    images = [0] * nv
    for i in range(nv):
        images[i] = rank(unrank(i, spec.n, spec.k).complement())
    return VertexPermutation(tuple(images))


def pair_swap(v: KSubset, spec: MergedJohnsonSpec) -> VertexPermutation:
    """Swap the complementary pair {v, complement(v)}, fixing all else.

    Only the self-paired families (cases 6 and 7 of the classification) admit
    these as automorphisms; other specs are rejected.
    """
    if v.n != spec.n or v.size != spec.k:
        raise ValueError("vertex does not belong to the spec's graph")
    desc = classify(spec)
    if desc.case_id not in (6, 7):
        raise InvalidSpec(f"pair swaps are not automorphisms for case {desc.case_id}")
    images = list(range(spec.num_vertices))
    a, b = rank(v), rank(v.complement())
    images[a], images[b] = images[b], images[a]
    return VertexPermutation(tuple(images))


def extended_action(sigma_tilde: Permutation, spec: MergedJohnsonSpec) -> VertexPermutation:
    """Vertex action of a permutation of {1..n} plus one extra point.

    For n = 2k+1 each k-subset M corresponds to the equipartition
    {M + extra, complement(M)} of the n+1 points; the image vertex is the
    side of the permuted equipartition containing the extra point, minus that
    point. Only distance sets with I = (k+1) - I make this an automorphism.
    """
    n, k = spec.n, spec.k
    if n != 2 * k + 1:
        raise InvalidSpec("extended action needs n = 2k + 1")
    if spec.distances != frozenset(k + 1 - i for i in spec.distances):
        raise InvalidSpec("extended action needs I = (k+1) - I")
    if not sigma_tilde.extended or sigma_tilde.degree != n + 1:
        raise ValueError("need an extended permutation of n + 1 points")
    extra = n  # 0-based index of the added point
    nv = spec.num_vertices
    images = [0] * nv
    for i in range(nv):
        m = unrank(i, n, k)
        side = {sigma_tilde.images[e - 1] for e in m.elements}
        side.add(sigma_tilde.images[extra])
        if extra in side:
            new = side - {extra}
        else:
            new = set(range(n)) - side
        images[i] = rank(KSubset.from_elements([x + 1 for x in new], n))
    return VertexPermutation(tuple(images))


def _symmetric_group_gens(n: int) -> list[Permutation]:
    cycle = Permutation.from_one_line(tuple(range(2, n + 1)) + (1,))
    return [transposition(1, n), cycle]


def generators(
    desc: AutDescriptor, spec: MergedJohnsonSpec, *, node_budget: int = 10**8
) -> tuple[list[VertexPermutation], bool]:
    """Explicit generators for the classified group.

    Returns (generators, complete). ``complete`` is False for case 2, where
    only the induced symmetric group is available in closed form, and for
    case 7 it is set only after the search engine confirms the expected order
    2^e * e!.
    """
    n = spec.n
    induced = [induced_vertex_perm(s, spec) for s in _symmetric_group_gens(n)]
    case = desc.case_id
    if case in (1, 3):
        return induced, True
    if case == 2:
        return induced, False
    if case == 4:
        swap = list(range(n + 1))
        swap[0], swap[1] = swap[1], swap[0]
        ext_swap = Permutation(tuple(swap), extended=True)
        ext_cycle = Permutation(tuple(range(1, n + 1)) + (0,), extended=True)
        gens = [extended_action(p, spec) for p in (ext_swap, ext_cycle)]
        return gens, True
    if case == 5:
        return induced + [complement_involution(spec)], True
    if case == 6:
        first = unrank(0, spec.n, spec.k)
        return induced + [pair_swap(first, spec)], True
    if case == 7:
        swaps = [
            pair_swap(KSubset.from_elements((1,) + rest, n), spec)
            for rest in combinations(range(2, n + 1), spec.k - 1)
        ]
        gens = swaps + induced
        e = spec.half_pair_count
        expected = 2**e * _factorial(e)
        got = search(build(spec), node_budget=node_budget).group_order
        return gens, got == expected
    raise InvalidSpec(f"unknown case id {case}")


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@dataclass(frozen=True)
class Equipartition:
    """Unordered split of {1..2m} into two m-sets, keyed by the side with 1."""

    part: KSubset

    def __post_init__(self) -> None:
        if self.part.n % 2 or self.part.size * 2 != self.part.n:
            raise ValueError("equipartition side must have half the ground set")
        if 1 not in self.part:
            raise ValueError("canonical side must contain element 1")

    @property
    def sides(self) -> tuple[KSubset, KSubset]:
        return self.part, self.part.complement()


def equipartitions(m: int) -> list[Equipartition]:
    """All equipartitions of {1..2m}, canonical sides in colex order."""
    if m < 1:
        raise ValueError("need m >= 1")
    n = 2 * m
    out = []
    for rest in combinations(range(2, n + 1), m - 1):
        out.append(Equipartition(KSubset.from_elements((1,) + rest, n)))
    out.sort(key=lambda p: p.part.bits)
    return out


def count_fixed_equipartitions(sigma: Permutation) -> int:
    """Number of equipartitions of {1..2m} fixed setwise by sigma.

    Direct enumeration; a partition counts when sigma maps its canonical side
    to either side.
    """
    if sigma.extended:
        raise ValueError("count is over plain permutations of {1..2m}")
    n = sigma.degree
    if n % 2:
        raise ValueError("ground set must have even size")
    count = 0
    for p in equipartitions(n // 2):
        image = p.part.apply(sigma)
        if image == p.part or image == p.part.complement():
            count += 1
    return count


def max_fixed_bound(m: int) -> int:
    """Upper bound C(2m-2, m-2) on fixed equipartitions of any non-identity
    permutation of {1..2m}; valid for m >= 4."""
    if m < 4:
        raise ValueError("bound only holds for m >= 4")
    return binom(2 * m - 2, m - 2)


def random_coloring_failure_bound(m: int) -> Fraction:
    """Exact value of (2m)! * 3^(-(m/(2(m-1))) * C(2m-2, m-2)).

    A union bound on the probability that a uniformly random pairwise-distinct
    3-coloring of the equipartitions of {1..2m} admits a color-preserving
    non-identity symmetry; below 1 for every m >= 4. The exponent
    (m/(2(m-1))) * C(2m-2, m-2) equals C(2m-2, m-1)/2 and is always an
    integer, so the value is an ordinary rational.
    """
    num, den = failure_bound_parts(m)
    return Fraction(num, den)


def failure_bound_parts(m: int) -> tuple[int, int]:
    """Numerator (2m)! and denominator 3^(C(2m-2, m-1)/2) of the failure
    bound, without reducing the fraction."""
    if m < 4:
        raise ValueError("the union bound only applies for m >= 4")
    num = m * binom(2 * m - 2, m - 2)
    den = 2 * (m - 1)
    if num % den:
        raise AssertionError("exponent unexpectedly non-integral")
    return _factorial(2 * m), 3 ** (num // den)
