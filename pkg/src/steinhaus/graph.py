"""Steinhaus graphs and the universal embedding of simple graphs into them.

Vertices are 1-based everywhere. A simple graph on ``n`` vertices stores its
upper triangle as one bitset per vertex: bit ``v-1`` of ``upper[u-1]`` is the
edge ``{u, v}`` for ``u < v``.

The Steinhaus graph ``G(S)`` of a bit sequence ``S`` of length ``N-1`` has
order ``N``; its adjacency entries above the superdiagonal form the triangle
``ST(S)`` through ``a[p+1][p+q+2] = ST(S)[p][q]``.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    InternalMismatch,
    NotTriangularOrder,
    ParseError,
    SizeMismatch,
    VertexOutOfRange,
)
from .gensets import DelahanIndexSet, delahan_index_set, reconstruct
from .gf2 import BitMatrix, BitRow
from .triangle import SteinhausTriangle, from_top_row, triangular_number


def triangle_to_edge(p: int, q: int) -> tuple[int, int]:
    """Adjacency coordinates ``(u, v)`` of triangle position ``(p, q)``."""
    return p + 1, p + q + 2


def edge_to_triangle(u: int, v: int) -> tuple[int, int]:
    """Inverse of ``triangle_to_edge``; needs ``u < v``."""
    if not 1 <= u < v:
        raise VertexOutOfRange(f"need 1 <= u < v, got ({u}, {v})")
    return u - 1, v - u - 1


def triangular_root(m: int) -> int | None:
    """``k`` with ``t_k == m``, or ``None`` when ``m`` is not triangular."""
    if m < 0:
        return None
    k = (math.isqrt(8 * m + 1) - 1) // 2
    return k if triangular_number(k) == m else None


class SimpleGraph:
    """Loopless simple graph on vertices ``1..n``."""

    __slots__ = ("n", "upper")

    def __init__(self, n: int, upper: Sequence[int] | None = None):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if upper is None:
            upper = [0] * n
        upper = tuple(upper)
        if len(upper) != n:
            raise SizeMismatch(f"{len(upper)} rows for {n} vertices")
        for u, row in enumerate(upper):
            if row < 0 or row >> n or row & ((2 << u) - 1):
                raise ValueError(f"row {u + 1} has bits outside its upper triangle")
        self.n = n
        self.upper = upper

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        upper = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            u, v = min(u, v), max(u, v)
            if u < 1 or v > n:
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 1..{n}")
            bit = 1 << (v - 1)
            if upper[u - 1] & bit:
                raise ValueError(f"duplicate edge ({u}, {v})")
            upper[u - 1] |= bit
        return cls(n, upper)

    @classmethod
    def from_triangle_bits(cls, n: int, bits: BitRow) -> SimpleGraph:
        """Inverse of ``pair_bits``: bit ``t_r + s`` is the edge ``(s+1, r+2)``."""
        expected = triangular_number(n - 1) if n else 0
        if bits.length != expected:
            raise SizeMismatch(f"{bits.length} bits do not describe a graph on {n} vertices")
        upper = [0] * n
        for r in range(n - 1):
            base = triangular_number(r)
            for s in range(r + 1):
                if (bits.value >> (base + s)) & 1:
                    upper[s] |= 1 << (r + 1)
        return cls(n, upper)

    def pair_bits(self) -> BitRow:
        """Edge indicator over pairs ``(s+1, r+2)`` ordered by ``k = t_r + s``."""
        value = 0
        for r in range(self.n - 1):
            base = triangular_number(r)
            for s in range(r + 1):
                if (self.upper[s] >> (r + 1)) & 1:
                    value |= 1 << (base + s)
        return BitRow(triangular_number(self.n - 1) if self.n else 0, value)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        u, v = min(u, v), max(u, v)
        return bool((self.upper[u - 1] >> (v - 1)) & 1)

    def _check_vertex(self, u: int) -> None:
        if not 1 <= u <= self.n:
            raise VertexOutOfRange(f"vertex {u} outside 1..{self.n}")

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.upper, start=1):
            v = 0
            while row:
                if row & 1:
                    out.append((u, v + 1))
                row >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.upper)

    def neighbors(self, u: int) -> list[int]:
        self._check_vertex(u)
        return [v for v in range(1, self.n + 1) if v != u and self.has_edge(u, v)]

    def adjacency(self) -> BitMatrix:
        up = BitMatrix.from_int_rows(list(self.upper), self.n).to_array()
        return BitMatrix.from_array(up | up.T)

    def __xor__(self, other: SimpleGraph) -> SimpleGraph:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        if other.n != self.n:
            raise SizeMismatch(f"orders differ: {self.n} != {other.n}")
        return SimpleGraph(self.n, [a ^ b for a, b in zip(self.upper, other.upper)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.upper == other.upper

    def __hash__(self) -> int:
        return hash((self.n, self.upper))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"

    def to_edge_list(self) -> str:
        es = self.edges()
        return "\n".join([f"{self.n} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> SimpleGraph:
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ParseError("empty edge list")
        try:
            n, m = (int(x) for x in lines[0])
            edges = [(int(a), int(b)) for a, b in lines[1:]]
        except ValueError as exc:
            raise ParseError(f"malformed edge list: {exc}") from exc
        if n < 0 or m < 0:
            raise ParseError("negative counts in header")
        if len(edges) != m:
            raise ParseError(f"header announces {m} edges, found {len(edges)}")
        try:
            return cls.from_edges(n, edges)
        except (ValueError, VertexOutOfRange) as exc:
            raise ParseError(str(exc)) from exc

    def to_dot(self, name: str = "G", labels: Sequence[str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for u in range(1, self.n + 1):
            if labels is None:
                lines.append(f"  {u};")
            else:
                lines.append(f'  {u} [label="{labels[u - 1]}"];')
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


class SteinhausGraph:
    """The graph ``G(S)`` of order ``len(S) + 1``."""

    def __init__(self, seq: BitRow):
        self.seq = seq

    @property
    def order(self) -> int:
        return self.seq.length + 1

    @cached_property
    def triangle(self) -> SteinhausTriangle:
        return from_top_row(self.seq)

    @cached_property
    def simple(self) -> SimpleGraph:
        """The same graph as a ``SimpleGraph``."""
        upper = [r.value << (p + 1) for p, r in enumerate(self.triangle.rows)]
        return SimpleGraph(self.order, upper + [0])

    @property
    def adjacency(self) -> BitMatrix:
        return self.simple.adjacency()

    def has_edge(self, u: int, v: int) -> bool:
        if not (1 <= u <= self.order and 1 <= v <= self.order):
            raise VertexOutOfRange(f"vertex outside 1..{self.order}")
        if u == v:
            return False
        p, q = edge_to_triangle(min(u, v), max(u, v))
        return bool(self.triangle.rows[p][q])

    def edges(self) -> list[tuple[int, int]]:
        return self.simple.edges()

    def __xor__(self, other: SteinhausGraph) -> SteinhausGraph:
        if not isinstance(other, SteinhausGraph):
            return NotImplemented
        if other.order != self.order:
            raise SizeMismatch(f"orders differ: {self.order} != {other.order}")
        return SteinhausGraph(self.seq ^ other.seq)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SteinhausGraph):
            return NotImplemented
        return self.seq == other.seq

    def __hash__(self) -> int:
        return hash(self.seq)

    def __repr__(self) -> str:
        return f"SteinhausGraph(S='{self.seq}')"

    def to_dot(self, name: str = "G") -> str:
        return self.simple.to_dot(name)


def graph_from_seq(seq: BitRow | str) -> SteinhausGraph:
    if isinstance(seq, str):
        seq = BitRow.from_string(seq)
    return SteinhausGraph(seq)


def w_set(n: int) -> list[int]:
    """``W_n = [t_0 + 1, ..., t_{n-1} + 1]``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [triangular_number(i) + 1 for i in range(n)]


def induced_subgraph(g: SimpleGraph | SteinhausGraph, w: Sequence[int]) -> SimpleGraph:
    """``G[W]`` relabelled ``1..|W|`` in ascending order of ``W``."""
    order = g.order if isinstance(g, SteinhausGraph) else g.n
    w = sorted(w)
    if len(set(w)) != len(w):
        raise ValueError(f"repeated vertices in {w}")
    for u in w:
        if not 1 <= u <= order:
            raise VertexOutOfRange(f"vertex {u} outside 1..{order}")
    edges = [(a + 1, b + 1) for b in range(len(w)) for a in range(b) if g.has_edge(w[a], w[b])]
    return SimpleGraph.from_edges(len(w), edges)


def _embedding_size(g: SteinhausGraph) -> int:
    n = triangular_root(g.order - 1)
    if n is None:
        raise NotTriangularOrder(f"order {g.order}: {g.order - 1} is not a triangular number")
    return n + 1


def extract_direct(g: SteinhausGraph) -> SimpleGraph:
    return induced_subgraph(g, w_set(_embedding_size(g)))


def extract_projection(g: SteinhausGraph) -> SimpleGraph:
    """Read the triangle of ``g`` at ``A_n`` and rebuild a graph from those bits."""
    n = _embedding_size(g)
    return SimpleGraph.from_triangle_bits(n, g.triangle.project(delahan_index_set(n)))


def extract(g: SteinhausGraph) -> SimpleGraph:
    """``G[W_n]`` for a Steinhaus graph of order ``t_{n-1} + 1``, computed two ways."""
    direct = extract_direct(g)
    if extract_projection(g) != direct:
        raise InternalMismatch(f"induced subgraph and index-set projection disagree for {g!r}")
    return direct


def embed(h: SimpleGraph, method: str = "block") -> SteinhausGraph:
    """The unique Steinhaus graph of order ``t_{n-1} + 1`` with ``extract(G) == h``.

    ``method`` is passed to ``reconstruct``: ``"block"`` (default),
    ``"generic"`` or ``"both"``.
    """
    if h.n < 1:
        raise ValueError("graph must have at least one vertex")
    a: DelahanIndexSet = delahan_index_set(h.n)
    tri = reconstruct(a, h.pair_bits(), method=method)
    return SteinhausGraph(tri.top_row)


def xor_graphs(g1: SteinhausGraph, g2: SteinhausGraph) -> SteinhausGraph:
    return g1 ^ g2


def xor_simple(h1: SimpleGraph, h2: SimpleGraph) -> SimpleGraph:
    return h1 ^ h2


def all_simple_graphs(n: int) -> Iterable[SimpleGraph]:
    """Every graph on ``1..n``, in order of the pair-bit encoding."""
    m = triangular_number(n - 1) if n else 0
    for code in range(1 << m):
        yield SimpleGraph.from_triangle_bits(n, BitRow(m, code))


__all__ = [
    "SimpleGraph",
    "SteinhausGraph",
    "triangle_to_edge",
    "edge_to_triangle",
    "triangular_root",
    "graph_from_seq",
    "w_set",
    "induced_subgraph",
    "extract",
    "extract_direct",
    "extract_projection",
    "embed",
    "xor_graphs",
    "xor_simple",
    "all_simple_graphs",
]
