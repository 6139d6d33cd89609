"""Generating index sets of the space of Steinhaus triangles of size ``n``.

An ``n``-subset ``A`` of ``T_n`` is generating when the bits of a triangle at
the positions of ``A`` determine the triangle. That happens exactly when the
matrix ``M_A[k][l] = binom(i_k, l - j_k) mod 2`` is invertible over GF(2).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .binomial import binomial_submatrix, pascal_row_mod2
from .errors import (
    InternalMismatch,
    LengthMismatch,
    MixedSizes,
    NotGenerating,
    OutOfTriangle,
    ParseError,
    Singular,
    StructureViolation,
    TooLarge,
    TooMany,
    WrongCardinality,
)
from .gf2 import BitMatrix, BitRow, BlockPartition, rank, solve, solve_block_lower
from .triangle import (
    SteinhausTriangle,
    TrianglePos,
    dihedral_maps,
    from_top_row,
    left_positions,
    positions,
    right_positions,
    top_positions,
    triangular_number,
)

DEFAULT_ENUMERATION_BOUND = 6
# C(t_9, 9) is already ~1e11 raw subsets; no override goes past this.
HARD_ENUMERATION_LIMIT = 8


class IndexSet:
    """Ordered positions inside ``T_size_n``.

    The stored order is the order of ``project``; equality and hashing use
    the sorted canonical form.
    """

    __slots__ = ("size_n", "positions")

    def __init__(self, size_n: int, positions: Iterable):
        pos = tuple(TrianglePos(*p) for p in positions)
        for p in pos:
            if not p.in_triangle(size_n):
                raise OutOfTriangle(f"{tuple(p)} is not in T_{size_n}")
        if len(set(pos)) != len(pos):
            raise ValueError(f"repeated positions in {pos}")
        self.size_n = size_n
        self.positions = pos

    def __iter__(self):
        return iter(self.positions)

    def __len__(self) -> int:
        return len(self.positions)

    def canonical(self) -> tuple[TrianglePos, ...]:
        return tuple(sorted(self.positions))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexSet):
            return NotImplemented
        return self.size_n == other.size_n and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.size_n, self.canonical()))

    def __lt__(self, other: IndexSet) -> bool:
        return (self.size_n, self.canonical()) < (other.size_n, other.canonical())

    def sorted(self) -> IndexSet:
        return IndexSet(self.size_n, self.canonical())

    def to_text(self) -> str:
        return f"{self.size_n}; " + " ".join(f"({i},{j})" for i, j in self.positions)

    def __repr__(self) -> str:
        return f"IndexSet({self.to_text()!r})"

    @classmethod
    def from_text(cls, line: str) -> IndexSet:
        head, sep, body = line.partition(";")
        if not sep:
            raise ParseError(f"missing ';' in {line!r}")
        try:
            n = int(head.strip())
        except ValueError as exc:
            raise ParseError(f"bad size in {line!r}") from exc
        body = body.strip()
        pairs = _PAIR.findall(body)
        if _PAIR.sub("", body).strip():
            raise ParseError(f"unparseable positions in {line!r}")
        try:
            return cls(n, [(int(i), int(j)) for i, j in pairs])
        except (OutOfTriangle, ValueError) as exc:
            raise ParseError(str(exc)) from exc


_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


class DelahanIndexSet(IndexSet):
    """``A_n = {(t_s, t_{r+1} - t_s - 1) : 0 <= s <= r <= n-2}`` inside ``T_{t_{n-1}}``.

    Position ``k = t_r + s`` of the stored order corresponds to the vertex pair
    ``(s+1, r+2)`` of an ``n``-vertex graph.
    """

    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        t = triangular_number
        pos = [(t(s), t(r + 1) - t(s) - 1) for r in range(n - 1) for s in range(r + 1)]
        super().__init__(t(n - 1), pos)
        self.n = n

    def partition(self) -> BlockPartition:
        return BlockPartition(tuple(range(1, self.n)))


def top_set(n: int) -> IndexSet:
    return IndexSet(n, top_positions(n))


def right_set(n: int) -> IndexSet:
    return IndexSet(n, right_positions(n))


def left_set(n: int) -> IndexSet:
    return IndexSet(n, left_positions(n))


def delahan_index_set(n: int) -> DelahanIndexSet:
    return DelahanIndexSet(n)


def _row_of(p: TrianglePos, n: int) -> int:
    """Row ``(binom(i, l - j) mod 2)_{l < n}`` of ``M_A`` as a bitset."""
    return (pascal_row_mod2(p.i) << p.j) & ((1 << n) - 1)


def _ma_rows(a: IndexSet) -> list[int]:
    if len(a) != a.size_n:
        raise WrongCardinality(f"index set has {len(a)} positions, expected {a.size_n}")
    return [_row_of(p, a.size_n) for p in a.positions]


def build_MA(a: IndexSet) -> BitMatrix:
    return BitMatrix.from_int_rows(_ma_rows(a), a.size_n)


def is_generating(a: IndexSet) -> bool:
    return rank(build_MA(a)) == a.size_n


def reconstruct(a: IndexSet, values: BitRow, method: str = "auto") -> SteinhausTriangle:
    """The unique triangle whose bits at ``a`` are ``values``.

    Solves ``M_A @ top = values`` for the top row. ``method`` is ``"block"``
    (only for ``DelahanIndexSet``), ``"generic"``, ``"auto"`` (block when
    possible) or ``"both"`` (solve twice and compare).
    """
    if values.length != len(a):
        raise LengthMismatch(f"{values.length} values for {len(a)} positions")
    m = build_MA(a)
    if method == "auto":
        method = "block" if isinstance(a, DelahanIndexSet) else "generic"
    try:
        if method == "generic":
            top = solve(m, values)
        elif method in ("block", "both"):
            if not isinstance(a, DelahanIndexSet):
                raise ValueError("block solve needs a DelahanIndexSet")
            top = solve_block_lower(m, a.partition(), values)
            if method == "both" and solve(m, values) != top:
                raise InternalMismatch("block and generic solves disagree")
        else:
            raise ValueError(f"unknown method {method!r}")
    except Singular as exc:
        raise NotGenerating(f"{a.to_text()} is not a generating index set") from exc
    return from_top_row(top)


def is_generating_bruteforce(a: IndexSet) -> bool:
    """Check that projection onto ``a`` is injective over all ``2**n`` triangles."""
    n = a.size_n
    if len(a) != n:
        raise WrongCardinality(f"index set has {len(a)} positions, expected {n}")
    if n > 16:
        raise TooLarge(f"brute force over 2**{n} triangles refused")
    seen = set()
    for s in range(1 << n):
        seen.add(from_top_row(BitRow(n, s)).project(a).value)
    return len(seen) == 1 << n


def matroid_independent(pos: Sequence, n: int) -> bool:
    """Whether the ``M_A`` rows of ``pos`` are linearly independent over GF(2)."""
    pos = [TrianglePos(*p) for p in pos]
    if len(pos) > n:
        raise TooMany(f"{len(pos)} positions exceed rank bound {n}")
    for p in pos:
        if not p.in_triangle(n):
            raise OutOfTriangle(f"{tuple(p)} is not in T_{n}")
    if not pos:
        return True
    return rank(BitMatrix.from_int_rows([_row_of(p, n) for p in pos], n)) == len(pos)


def _reduce(basis: dict[int, int], row: int) -> int:
    while row:
        top = row.bit_length() - 1
        b = basis.get(top)
        if b is None:
            return row
        row ^= b
    return 0


def enumerate_generating(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[IndexSet]:
    """All generating ``n``-subsets of ``T_n`` in lexicographic order.

    Depth-first over positions in lexicographic order, extending only
    prefixes whose rows stay independent.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > min(bound, HARD_ENUMERATION_LIMIT):
        raise TooLarge(f"n={n} exceeds the enumeration bound {min(bound, HARD_ENUMERATION_LIMIT)}")
    cells = positions(n)
    rows = [_row_of(p, n) for p in cells]
    out: list[IndexSet] = []
    chosen: list[int] = []

    def extend(start: int, basis: dict[int, int]) -> None:
        if len(chosen) == n:
            out.append(IndexSet(n, [cells[c] for c in chosen]))
            return
        # not enough cells left to reach n
        for c in range(start, len(cells) - (n - len(chosen)) + 1):
            r = _reduce(basis, rows[c])
            if not r:
                continue
            basis[r.bit_length() - 1] = r
            chosen.append(c)
            extend(c + 1, basis)
            chosen.pop()
            del basis[r.bit_length() - 1]

    extend(0, {})
    return out


def count_subsets(n: int) -> int:
    return math.comb(triangular_number(n), n)


def enumerate_nongenerating(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[IndexSet]:
    """The complement: ``n``-subsets of ``T_n`` that are not generating (small ``n`` only)."""
    if n > min(bound, HARD_ENUMERATION_LIMIT):
        raise TooLarge(f"n={n} exceeds the enumeration bound")
    good = set(enumerate_generating(n, bound))
    out = []
    for combo in itertools.combinations(positions(n), n):
        a = IndexSet(n, combo)
        if a not in good:
            out.append(a)
    return out


@dataclass(frozen=True)
class Orbit:
    representative: IndexSet
    members: tuple[IndexSet, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.members)


def orbit_key(a: IndexSet) -> tuple[TrianglePos, ...]:
    """Lexicographically least image of ``a`` under the six symmetries."""
    return min(tuple(sorted(g(p) for p in a.positions)) for g in dihedral_maps(a.size_n))


def d3_orbits(sets: Sequence[IndexSet]) -> list[Orbit]:
    """Partition ``sets`` into orbits of the dihedral group of the triangle."""
    if not sets:
        return []
    sizes = {a.size_n for a in sets}
    if len(sizes) > 1:
        raise MixedSizes(f"index sets of different sizes: {sorted(sizes)}")
    groups: dict[tuple, list[IndexSet]] = {}
    for a in sets:
        groups.setdefault(orbit_key(a), []).append(a)
    orbits = [Orbit(min(ms).sorted(), tuple(sorted(set(ms)))) for ms in groups.values()]
    return sorted(orbits, key=lambda o: o.representative)


@dataclass(frozen=True)
class BlockReport:
    partition: BlockPartition
    blocks: tuple[BitMatrix, ...]
    block_det_parities: tuple[int, ...]


def verify_block_structure(n: int) -> BlockReport:
    """Check that ``M_{A_n}`` is block lower-triangular with the expected diagonal blocks.

    Block ``r`` (rows and columns ``t_r .. t_r + r``) must equal
    ``B(t_0..t_r; r, r-1, ..., 0) mod 2`` and everything to its right must vanish.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    a = delahan_index_set(n)
    m = build_MA(a)
    rows = m.row_ints()
    part = a.partition()
    blocks = []
    parities = []
    for r, (start, stop) in enumerate(part.blocks()):
        for k in range(start, stop):
            high = rows[k] >> stop
            if high:
                col = stop + (high & -high).bit_length() - 1
                raise StructureViolation(f"M_A{n}[{k}][{col}] is nonzero above block {r}", (k, col))
        got = m.submatrix(start, stop, start, stop)
        want = binomial_submatrix([triangular_number(s) for s in range(r + 1)], range(r, -1, -1)).mod2
        if got != want:
            diff = (got ^ want).to_array()
            bad = tuple(int(x) for x in next(zip(*diff.nonzero())))
            raise StructureViolation(
                f"diagonal block {r} differs from the binomial submatrix at {bad}",
                (start + bad[0], start + bad[1]),
            )
        blocks.append(got)
        parities.append(int(rank(got) == got.rows))
    return BlockReport(part, tuple(blocks), tuple(parities))


__all__ = [
    "IndexSet",
    "DelahanIndexSet",
    "Orbit",
    "BlockReport",
    "top_set",
    "right_set",
    "left_set",
    "delahan_index_set",
    "build_MA",
    "is_generating",
    "is_generating_bruteforce",
    "reconstruct",
    "matroid_independent",
    "enumerate_generating",
    "enumerate_nongenerating",
    "count_subsets",
    "orbit_key",
    "d3_orbits",
    "verify_block_structure",
    "DEFAULT_ENUMERATION_BOUND",
    "HARD_ENUMERATION_LIMIT",
]
