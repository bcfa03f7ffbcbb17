"""Serializable certificates for distinguishing-number results.

A certificate records the claimed value together with the evidence for both
directions: a concrete coloring plus the method that produced it (upper
bound), and the argument that fewer colors cannot work (lower bound). The
JSON layout is fixed so certificates can be exchanged and re-verified.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .combinatorics import KSubset, binom, rank, unrank

UPPER_METHODS = (
    "complete-graph",
    "detset-asymmetric",
    "random-3",
    "matching-formula",
    "exhaustive",
)
LOWER_METHODS = (
    "trivial",
    "exhaustive-(r-1)",
    "pair-swap-construction",
    "pigeonhole-count",
    "citation",
)


class CertificateError(ValueError):
    """Raised when a certificate document is structurally invalid."""


@dataclass(frozen=True)
class Certificate:
    """A distinguishing-number claim with re-checkable evidence.

    ``coloring`` assigns a color (1-based) to every k-subset of {1..n} in
    colex order. ``detset`` lists the vertices whose colors pin down the
    identity when the upper bound came from a determining set. ``case_id``
    records which branch of the computation produced the result; it is
    informational and not serialized.
    """

    n: int
    k: int
    distances: tuple[int, ...]
    dist: int
    coloring: tuple[int, ...]
    upper_method: str
    lower_method: str
    lower_detail: str
    detset: tuple[tuple[int, ...], ...] | None = None
    seed: int | None = None
    case_id: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.upper_method not in UPPER_METHODS:
            raise CertificateError(f"unknown upper method {self.upper_method!r}")
        if self.lower_method not in LOWER_METHODS:
            raise CertificateError(f"unknown lower method {self.lower_method!r}")
        if len(self.coloring) != binom(self.n, self.k):
            raise CertificateError("coloring length does not match the vertex count")

    def color_of(self, subset: KSubset) -> int:
        return self.coloring[rank(subset)]

    def num_colors_used(self) -> int:
        return len(set(self.coloring))

    def to_dict(self) -> dict[str, Any]:
        entries = []
        for i, c in enumerate(self.coloring):
            v = unrank(i, self.n, self.k)
            entries.append({"vertex": list(v.elements), "color": c})
        upper: dict[str, Any] = {"method": self.upper_method}
        if self.detset is not None:
            upper["detset"] = [list(v) for v in self.detset]
        if self.seed is not None:
            upper["seed"] = self.seed
        return {
            "n": self.n,
            "k": self.k,
            "I": list(self.distances),
            "dist": self.dist,
            "coloring": entries,
            "upper": upper,
            "lower": {"method": self.lower_method, "detail": self.lower_detail},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _need(obj: dict[str, Any], key: str, kind: type) -> Any:
    if key not in obj:
        raise CertificateError(f"missing key {key!r}")
    val = obj[key]
    if kind is int and isinstance(val, bool):
        raise CertificateError(f"key {key!r} must be an integer")
    if not isinstance(val, kind):
        raise CertificateError(f"key {key!r} has wrong type")
    return val


def _int_list(val: Any, what: str) -> list[int]:
    if not isinstance(val, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in val
    ):
        raise CertificateError(f"{what} must be a list of integers")
    return val


def from_dict(doc: Any) -> Certificate:
    """Parse and structurally validate a certificate document."""
    if not isinstance(doc, dict):
        raise CertificateError("certificate must be a JSON object")
    extra = set(doc) - {"n", "k", "I", "dist", "coloring", "upper", "lower"}
    if extra:
        raise CertificateError(f"unexpected keys {sorted(extra)}")
    n = _need(doc, "n", int)
    k = _need(doc, "k", int)
    if not 1 <= k < n:
        raise CertificateError("need 1 <= k < n")
    distances = _int_list(_need(doc, "I", list), "I")
    if sorted(set(distances)) != distances:
        raise CertificateError("I must be sorted and duplicate-free")
    if distances and (distances[0] < 1 or distances[-1] > k):
        raise CertificateError("I must lie within 1..k")
    dist = _need(doc, "dist", int)
    if dist < 1:
        raise CertificateError("dist must be positive")

    entries = _need(doc, "coloring", list)
    nv = binom(n, k)
    if len(entries) != nv:
        raise CertificateError(f"coloring must list all {nv} vertices")
    colors = [0] * nv
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or set(entry) != {"vertex", "color"}:
            raise CertificateError("coloring entries need exactly vertex and color")
        elems = _int_list(entry["vertex"], "vertex")
        color = entry["color"]
        if isinstance(color, bool) or not isinstance(color, int) or color < 1:
            raise CertificateError("colors must be positive integers")
        try:
            v = KSubset.from_elements(elems, n)
        except ValueError as exc:
            raise CertificateError(f"bad vertex {elems}: {exc}") from None
        if v.size != k:
            raise CertificateError(f"vertex {elems} is not a {k}-subset")
        if list(v.elements) != elems:
            raise CertificateError(f"vertex {elems} must be sorted ascending")
        if rank(v) != i:
            raise CertificateError("coloring entries must follow colex order")
        colors[i] = color

    upper = _need(doc, "upper", dict)
    if set(upper) - {"method", "detset", "seed"}:
        raise CertificateError("upper allows only method, detset, seed")
    upper_method = _need(upper, "method", str)
    detset = None
    if "detset" in upper:
        raw = upper["detset"]
        if not isinstance(raw, list):
            raise CertificateError("detset must be a list of vertices")
        parsed = []
        for elems in raw:
            elems = _int_list(elems, "detset vertex")
            v = KSubset.from_elements(elems, n)
            if v.size != k or list(v.elements) != elems:
                raise CertificateError(f"bad detset vertex {elems}")
            parsed.append(tuple(elems))
        detset = tuple(parsed)
    seed = None
    if "seed" in upper:
        seed = upper["seed"]
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise CertificateError("seed must be an integer")

    lower = _need(doc, "lower", dict)
    if set(lower) != {"method", "detail"}:
        raise CertificateError("lower needs exactly method and detail")
    lower_method = _need(lower, "method", str)
    lower_detail = _need(lower, "detail", str)

    return Certificate(
        n=n,
        k=k,
        distances=tuple(distances),
        dist=dist,
        coloring=tuple(colors),
        upper_method=upper_method,
        lower_method=lower_method,
        lower_detail=lower_detail,
        detset=detset,
        seed=seed,
    )


def from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"invalid JSON: {exc}") from None
    return from_dict(doc)


def load(path: str) -> Certificate:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())


def dump(cert: Certificate, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(cert.to_json())
        fh.write("\n")
