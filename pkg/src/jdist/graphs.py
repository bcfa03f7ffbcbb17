"""Merged Johnson graphs and the small graph container used throughout.

A merged Johnson graph J(n, k)_I has the k-subsets of {1..n} as vertices, two
of them adjacent when their intersection has k - i elements for some i in I.
Vertices are always listed in colexicographic order of the subset mask, which
fixes the byte layout of everything downstream (certificates, exports).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .combinatorics import KSubset, binom, unrank

VERTEX_BUDGET = 10**6


class InvalidSpec(ValueError):
    """The (n, k, I) triple does not describe a supported graph."""


class EmptyDistanceSet(InvalidSpec):
    """I is empty; the edge set would be empty by definition."""


@dataclass(frozen=True)
class MergedJohnsonSpec:
    """Canonical parameters (n, k, I) with 1 <= k <= n/2 and I a set of
    distances in {1..k}."""

    n: int
    k: int
    distances: frozenset[int] = field()

    def __post_init__(self) -> None:
        # accept any iterable of distances; frozenset keeps the spec hashable
        object.__setattr__(self, "distances", frozenset(self.distances))
        if not 1 <= self.k * 2 <= self.n:
            raise InvalidSpec(f"need 1 <= k <= n/2, got n={self.n}, k={self.k}")
        if not self.distances:
            raise EmptyDistanceSet("distance set I must be nonempty")
        if not all(1 <= i <= self.k for i in self.distances):
            raise InvalidSpec(f"distances {sorted(self.distances)} outside 1..{self.k}")

    @property
    def distances_without_k(self) -> frozenset[int]:
        """I with the maximal distance k removed (written I' in the literature)."""
        return self.distances - {self.k}

    @property
    def reflected_distances(self) -> frozenset[int]:
        """{k - i : i in I, i < k}, the image of I' under complementing subsets."""
        return frozenset(self.k - i for i in self.distances_without_k)

    @property
    def intersection_sizes(self) -> frozenset[int]:
        return frozenset(self.k - i for i in self.distances)

    @property
    def half_pair_count(self) -> int:
        """Number of complementary vertex pairs when n = 2k."""
        if self.n != 2 * self.k:
            raise InvalidSpec("complementary pairs only exist for n = 2k")
        return binom(self.n, self.k) // 2

    @property
    def num_vertices(self) -> int:
        return binom(self.n, self.k)

    def __repr__(self) -> str:
        return f"J({self.n},{self.k})_{{{','.join(map(str, sorted(self.distances)))}}}"


def canonicalize(n: int, k: int, distances) -> MergedJohnsonSpec:
    """Validate (n, k, I) and replace k by n - k when k > n/2.

    Distances must fit in {1..min(k, n-k)}; values beyond that describe empty
    relations and are rejected rather than dropped silently.
    """
    if not isinstance(n, int) or not isinstance(k, int):
        raise InvalidSpec("n and k must be integers")
    if not 1 <= k <= n - 1:
        raise InvalidSpec(f"need 1 <= k <= n-1, got n={n}, k={k}")
    dist = frozenset(int(i) for i in distances)
    if not dist:
        raise EmptyDistanceSet("distance set I must be nonempty")
    cap = min(k, n - k)
    bad = sorted(i for i in dist if not 1 <= i <= cap)
    if bad:
        raise InvalidSpec(f"distances {bad} outside 1..min(k, n-k) = 1..{cap}")
    return MergedJohnsonSpec(n, min(k, n - k), dist)


class Graph:
    """Immutable undirected graph with bit-row adjacency.

    ``rows[u]`` has bit v set iff u ~ v. ``labels`` carries the defining
    KSubset of each vertex when the graph came from a spec; ``origin`` maps
    vertices of an induced subgraph back to the parent's vertex indices.
    """

    def __init__(self, rows, labels=None, origin=None):
        self.rows = list(rows)
        self.n_vertices = len(self.rows)
        if self.n_vertices == 0:
            raise ValueError("graphs must have at least one vertex")
        for u, row in enumerate(self.rows):
            if row >> self.n_vertices:
                raise ValueError("adjacency row mentions a vertex out of range")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        self.labels = tuple(labels) if labels is not None else None
        self.origin = tuple(origin) if origin is not None else None
        self._matrix = None

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows)

    @classmethod
    def from_matrix(cls, matrix, labels=None, origin=None) -> "Graph":
        arr = np.asarray(matrix, dtype=bool)
        rows = [
            int.from_bytes(np.packbits(arr[u], bitorder="little").tobytes(), "little")
            for u in range(arr.shape[0])
        ]
        g = cls(rows, labels=labels, origin=origin)
        g._matrix = arr
        return g

    @property
    def matrix(self) -> np.ndarray:
        """Dense boolean adjacency, derived lazily from the bit rows."""
        if self._matrix is None:
            nbytes = (self.n_vertices + 7) // 8
            raw = np.frombuffer(
                b"".join(row.to_bytes(nbytes, "little") for row in self.rows), dtype=np.uint8
            ).reshape(self.n_vertices, nbytes)
            self._matrix = np.unpackbits(raw, axis=1, bitorder="little")[
                :, : self.n_vertices
            ].astype(bool)
        return self._matrix

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self):
        """Yield edges (u, v) with u < v in lexicographic index order."""
        for u in range(self.n_vertices):
            row = self.rows[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                yield u, v
                row &= row - 1

    def vertex_index(self, label: KSubset) -> int:
        if self.labels is None:
            raise ValueError("graph has no subset labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"{label!r} is not a vertex of this graph") from None

    def __repr__(self) -> str:
        return f"Graph(n={self.n_vertices}, m={self.num_edges})"


def build(spec: MergedJohnsonSpec, max_vertices: int = VERTEX_BUDGET) -> Graph:
    """Materialize J(n, k)_I with vertices in colex order."""
    nv = spec.num_vertices
    if nv > max_vertices:
        raise InvalidSpec(f"{spec!r} has {nv} vertices, over the budget of {max_vertices}")
    labels = [unrank(i, spec.n, spec.k) for i in range(nv)]
    incidence = np.zeros((nv, spec.n), dtype=np.uint8)
    for i, lab in enumerate(labels):
        for e in lab.elements:
            incidence[i, e - 1] = 1
    inter = incidence @ incidence.T
    adj = np.isin(inter, sorted(spec.intersection_sizes))
    np.fill_diagonal(adj, False)
    return Graph.from_matrix(adj, labels=labels)


def complement(g: Graph) -> Graph:
    full = ~g.matrix
    np.fill_diagonal(full, False)
    return Graph.from_matrix(full, labels=g.labels, origin=g.origin)


def induced_subgraph(g: Graph, vertices) -> Graph:
    verts = list(vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("induced subgraph vertex list has repeats")
    for v in verts:
        if not 0 <= v < g.n_vertices:
            raise ValueError(f"vertex {v} out of range")
    sub = g.matrix[np.ix_(verts, verts)]
    labels = None if g.labels is None else [g.labels[v] for v in verts]
    return Graph.from_matrix(sub, labels=labels, origin=verts)


def degree_partition(g: Graph) -> dict[int, tuple[int, ...]]:
    """Vertices grouped by degree, each class sorted by vertex index."""
    out: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        out.setdefault(d, []).append(v)
    return {d: tuple(vs) for d, vs in sorted(out.items())}


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.n_vertices
    comps = []
    for start in range(g.n_vertices):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            row = g.rows[u]
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(tuple(sorted(comp)))
    return comps
