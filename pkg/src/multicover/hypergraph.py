"""Hypergraph representation, demands, derived parameters, duality,
and multicover feasibility arithmetic.

Conventions: vertex and edge indices are 1-based everywhere in the
public API. Edges are stored canonicalized (strictly increasing vertex
indices). Duplicate edges (same vertex set at different indices) are
allowed; duplicate vertices within one edge are not. All types here are
immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateVertexInEdge,
    EmptyEdge,
    EmptyEdgeList,
    IndexOutOfRange,
    InfeasibleInstance,
)


@dataclass(frozen=True)
class Hypergraph:
    """n vertices plus an ordered family of hyperedges.

    ``edges[j-1]`` is edge j as a strictly increasing tuple of vertex
    indices. Use :func:`build_hypergraph` instead of constructing
    directly; it validates and canonicalizes.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex (1-based position), the sorted tuple of
        incident edge indices."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, edge in enumerate(self.edges, start=1):
            for v in edge:
                inc[v - 1].append(j)
        return tuple(tuple(lst) for lst in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(inc) for inc in self.incidence)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def max_edge_size(self) -> int:
        return max(len(e) for e in self.edges)


@dataclass(frozen=True)
class Demands:
    """Per-vertex coverage requirements.

    b_i >= 1 is accepted here; the hybrid rounding algorithm separately
    requires b_i >= 2 (its analysis assumes it), while the b = 1 regime
    is exercised by the integrality-gap instances and the exact oracle.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise DimensionMismatch("demands must be non-empty")
        for i, b in enumerate(self.values, start=1):
            if b < 1:
                raise InfeasibleInstance(
                    f"demand b_{i} = {b} must be >= 1", vertex=i
                )

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def b_min(self) -> int:
        return min(self.values)


@dataclass(frozen=True)
class DerivedParams:
    """Instance parameters derived by :func:`validate_feasible_instance`.

    delta = max_degree - b_min + 1. ``forced_vertices`` are those with
    d(v) = b_v (every incident edge belongs to every feasible cover);
    ``forced_edges`` is the union of their incident edges.
    ``non_regime_vertices`` fall outside the structural lemmas' regime
    2 <= b_i <= d(v_i) - 1.
    """

    max_degree: int
    max_edge_size: int
    b_min: int
    delta: int
    forced_vertices: tuple[int, ...]
    forced_edges: tuple[int, ...]
    non_regime_vertices: tuple[int, ...]


@dataclass(frozen=True)
class Cover:
    """A set of chosen edge indices (1-based)."""

    chosen: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.chosen)

    def sorted(self) -> list[int]:
        return sorted(self.chosen)


def build_hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and canonicalize a hypergraph.

    Raises IndexOutOfRange, EmptyEdge, EmptyEdgeList, or
    DuplicateVertexInEdge.
    """
    if n < 1:
        raise IndexOutOfRange(f"vertex count must be >= 1, got {n}")
    canon: list[tuple[int, ...]] = []
    for j, edge in enumerate(edges, start=1):
        members = list(edge)
        if not members:
            raise EmptyEdge(f"edge {j} is empty")
        seen: set[int] = set()
        for v in members:
            if not isinstance(v, int) or isinstance(v, bool):
                raise IndexOutOfRange(f"edge {j}: vertex {v!r} is not an integer")
            if not 1 <= v <= n:
                raise IndexOutOfRange(
                    f"edge {j}: vertex {v} outside [1..{n}]"
                )
            if v in seen:
                raise DuplicateVertexInEdge(f"edge {j}: vertex {v} repeated")
            seen.add(v)
        canon.append(tuple(sorted(seen)))
    if not canon:
        raise EmptyEdgeList("hypergraph needs at least one edge")
    return Hypergraph(n=n, edges=tuple(canon))


def _check_vertex(h: Hypergraph, v: int) -> None:
    if not 1 <= v <= h.n:
        raise IndexOutOfRange(f"vertex {v} outside [1..{h.n}]")


def degree(h: Hypergraph, v: int) -> int:
    """Number of edges containing v."""
    _check_vertex(h, v)
    return h.degrees[v - 1]


def incident_edges(h: Hypergraph, v: int) -> frozenset[int]:
    """Edge indices whose edge contains v."""
    _check_vertex(h, v)
    return frozenset(h.incidence[v - 1])


def dual(h: Hypergraph) -> Hypergraph:
    """Swap vertex and edge roles.

    The dual has m vertices (one per edge of h) and n edges; dual-edge i
    is the set of original edges containing v_i. Requires every vertex
    of h to have degree >= 1, otherwise some dual edge would be empty.
    """
    return build_hypergraph(h.m, [list(inc) for inc in h.incidence])


def _check_pair(h: Hypergraph, d: Demands) -> None:
    if d.n != h.n:
        raise DimensionMismatch(
            f"demands length {d.n} != vertex count {h.n}"
        )


def _check_cover(h: Hypergraph, c: Cover) -> None:
    for j in c.chosen:
        if not 1 <= j <= h.m:
            raise IndexOutOfRange(f"cover edge {j} outside [1..{h.m}]")


def coverage_counts(h: Hypergraph, c: Cover) -> list[int]:
    """How many chosen edges contain each vertex."""
    _check_cover(h, c)
    counts = [0] * h.n
    for j in c.chosen:
        for v in h.edges[j - 1]:
            counts[v - 1] += 1
    return counts


def coverage_deficit(h: Hypergraph, d: Demands, c: Cover) -> tuple[int, ...]:
    """Per-vertex shortfall max(0, b_i - #chosen incident edges)."""
    _check_pair(h, d)
    counts = coverage_counts(h, c)
    return tuple(
        max(0, b - got) for b, got in zip(d.values, counts)
    )


def is_multicover(h: Hypergraph, d: Demands, c: Cover) -> bool:
    """True iff every vertex v_i lies in at least b_i chosen edges."""
    return all(x == 0 for x in coverage_deficit(h, d, c))


def validate_feasible_instance(h: Hypergraph, d: Demands) -> DerivedParams:
    """Check d(v_i) >= b_i for all i and derive instance parameters.

    Raises InfeasibleInstance naming the first offending vertex. A
    degree-0 vertex always fails since b_i >= 1.
    """
    _check_pair(h, d)
    forced_vertices: list[int] = []
    forced_edges: set[int] = set()
    non_regime: list[int] = []
    for i, (deg, b) in enumerate(zip(h.degrees, d.values), start=1):
        if deg < b:
            raise InfeasibleInstance(
                f"vertex {i}: degree {deg} < demand {b}", vertex=i
            )
        if deg == b:
            forced_vertices.append(i)
            forced_edges.update(h.incidence[i - 1])
        if not (2 <= b <= deg - 1):
            non_regime.append(i)
    b_min = d.b_min
    delta = h.max_degree - b_min + 1
    return DerivedParams(
        max_degree=h.max_degree,
        max_edge_size=h.max_edge_size,
        b_min=b_min,
        delta=delta,
        forced_vertices=tuple(forced_vertices),
        forced_edges=tuple(sorted(forced_edges)),
        non_regime_vertices=tuple(non_regime),
    )


def edge_csr(h: Hypergraph) -> tuple[list[int], list[int]]:
    """Flatten edges to 0-based CSR (ptr, vertices) for the kernels."""
    ptr = [0]
    flat: list[int] = []
    for edge in h.edges:
        flat.extend(v - 1 for v in edge)
        ptr.append(len(flat))
    return ptr, flat


def vertex_edge_masks(h: Hypergraph) -> list[int]:
    """Per-vertex bitmask over edges (bit j-1 set iff v in E_j).

    Only meaningful for m <= 62; callers guard."""
    masks = [0] * h.n
    for j, edge in enumerate(h.edges):
        bit = 1 << j
        for v in edge:
            masks[v - 1] |= bit
    return masks


def subhypergraph_check_handshake(h: Hypergraph) -> bool:
    """Degree-size handshake: sum of degrees equals sum of edge sizes."""
    return sum(h.degrees) == sum(len(e) for e in h.edges)
