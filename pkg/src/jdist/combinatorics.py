"""Exact subset and permutation primitives for graphs built over k-subsets.

Ground-set elements are 1-based in every public signature; bit positions and
stored image tables are 0-based. Subsets live in a single bit mask, which caps
the ground set at 40 elements (far beyond anything the rest of the package
builds).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

MAX_GROUND_SET = 40


def binom(n: int, r: int) -> int:
    """Exact binomial coefficient C(n, r); zero outside 0 <= r <= n."""
    return math.comb(n, r) if 0 <= r <= n else 0


@dataclass(frozen=True, eq=False)
class KSubset:
    """Subset of {1..n} stored as a bit mask (bit i-1 set <=> i in the set)."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_GROUND_SET:
            raise ValueError(f"ground set size must be in 1..{MAX_GROUND_SET}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("bit mask contains elements outside 1..n")

    @classmethod
    def from_elements(cls, elements, n: int) -> "KSubset":
        bits = 0
        for e in elements:
            e = int(e)
            if not 1 <= e <= n:
                raise ValueError(f"element {e} outside 1..{n}")
            if bits >> (e - 1) & 1:
                raise ValueError(f"repeated element {e}")
            bits |= 1 << (e - 1)
        return cls(bits, n)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    def complement(self) -> "KSubset":
        return KSubset(((1 << self.n) - 1) ^ self.bits, self.n)

    def apply(self, phi: "Permutation") -> "KSubset":
        """Elementwise image under a permutation of the same ground set."""
        if phi.extended or phi.degree != self.n:
            raise ValueError("permutation does not act on this ground set")
        bits = 0
        for i in range(self.n):
            if self.bits >> i & 1:
                bits |= 1 << phi.images[i]
        return KSubset(bits, self.n)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.bits >> (element - 1) & 1)

    # Equality is defined by the mask alone; combining subsets over different
    # ground sets is rejected by the binary operations instead.
    def __eq__(self, other) -> bool:
        return isinstance(other, KSubset) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def intersection_size(a: KSubset, b: KSubset) -> int:
    if a.n != b.n:
        raise ValueError("subsets live over different ground sets")
    return (a.bits & b.bits).bit_count()


def rank(subset: KSubset) -> int:
    """Colexicographic rank of a k-subset among all k-subsets of {1..n}."""
    r = 0
    for j, e in enumerate(subset.elements):
        r += math.comb(e - 1, j + 1)
    return r


def unrank(index: int, n: int, k: int) -> KSubset:
    """Inverse of rank: the k-subset of {1..n} with the given colex rank."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if not 0 <= index < math.comb(n, k):
        raise ValueError(f"rank {index} out of range for C({n},{k})")
    bits = 0
    r = index
    for j in range(k, 0, -1):
        # Largest c with C(c, j) <= r; element c+1 goes into the subset.
        c = j - 1
        while math.comb(c + 1, j) <= r:
            c += 1
        r -= math.comb(c, j)
        bits |= 1 << c
    return KSubset(bits, n)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}, optionally extended by one extra point.

    The image table is 0-based. When ``extended`` is true the permutation acts
    on n+1 points and the last point plays the role of the added point used by
    the equipartition action; it is written n+1 in one-line form.
    """

    images: tuple[int, ...]
    extended: bool = False

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("image table is not a bijection")
        if self.extended and len(self.images) < 2:
            raise ValueError("extended permutation needs at least two points")

    @property
    def degree(self) -> int:
        """Number of points acted on, including the extra point if any."""
        return len(self.images)

    @property
    def ground_size(self) -> int:
        return len(self.images) - (1 if self.extended else 0)

    @classmethod
    def identity(cls, n: int, extended: bool = False) -> "Permutation":
        return cls(tuple(range(n + (1 if extended else 0))), extended)

    @classmethod
    def from_one_line(cls, one_line, extended: bool = False) -> "Permutation":
        return cls(tuple(int(x) - 1 for x in one_line), extended)

    def one_line(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.degree:
            raise ValueError(f"point {x} outside 1..{self.degree}")
        return self.images[x - 1] + 1

    def __repr__(self) -> str:
        return f"Permutation{self.one_line()}"


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """compose(a, b) applies b first, then a: compose(a, b)(x) = a(b(x))."""
    if a.degree != b.degree or a.extended != b.extended:
        raise ValueError("permutations act on different point sets")
    return Permutation(tuple(a.images[j] for j in b.images), a.extended)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(tuple(inv), p.extended)


def transposition(i: int, n: int) -> Permutation:
    """The adjacent transposition swapping i and i+1 inside {1..n}."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"adjacent transposition needs 1 <= i <= n-1, got i={i}, n={n}")
    images = list(range(n))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def window(phi: Permutation, ell: int, k: int) -> KSubset:
    """The k consecutive images {phi(ell), ..., phi(ell+k-1)}, subscripts mod n."""
    if phi.extended:
        raise ValueError("windows are only defined for plain permutations")
    n = phi.degree
    if not 1 <= k <= n // 2:
        raise ValueError(f"need 1 <= k <= n/2, got k={k}, n={n}")
    bits = 0
    for t in range(k):
        bits |= 1 << phi.images[(ell - 1 + t) % n]
    return KSubset(bits, n)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse disjoint cycle notation like "(1 2)(3 4)" into a permutation of {1..n}."""
    stripped = text.replace(",", " ").strip()
    if not stripped:
        return Permutation.identity(n)
    body = _CYCLE_RE.sub("", stripped).strip()
    if body:
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(n))
    seen: set[int] = set()
    for group in _CYCLE_RE.findall(stripped):
        points = [int(tok) for tok in group.split()]
        if not points:
            continue
        for x in points:
            if not 1 <= x <= n:
                raise ValueError(f"point {x} outside 1..{n}")
            if x in seen:
                raise ValueError(f"point {x} appears in two cycles")
            seen.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    return Permutation(tuple(images))
