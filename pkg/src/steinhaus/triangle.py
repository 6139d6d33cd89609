"""Binary Steinhaus triangles.

A triangle of size ``n`` holds one bit at every position of
``T_n = {(i, j) : i, j >= 0, i + j < n}``; row ``i`` has ``n - i`` entries and
each entry below the top row is the XOR of the two entries above it::

    a[i][j] = a[i-1][j] ^ a[i-1][j+1]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from .binomial import pascal_row_mod2
from .errors import OutOfTriangle, ParseError, SizeMismatch
from .gf2 import BitRow, parity


class TrianglePos(NamedTuple):
    i: int
    j: int

    def in_triangle(self, n: int) -> bool:
        return self.i >= 0 and self.j >= 0 and self.i + self.j < n


def triangular_number(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return n * (n + 1) // 2


def positions(n: int) -> list[TrianglePos]:
    """All of ``T_n`` in lexicographic order."""
    return [TrianglePos(i, j) for i in range(n) for j in range(n - i)]


def _check_pos(p, n: int) -> TrianglePos:
    p = TrianglePos(*p)
    if not p.in_triangle(n):
        raise OutOfTriangle(f"{tuple(p)} is not in T_{n}")
    return p


def _low_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class SteinhausTriangle:
    """Immutable triangle; ``rows[i]`` is a ``BitRow`` of length ``size - i``."""

    rows: tuple[BitRow, ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return self.size

    def entry(self, i: int, j: int) -> int:
        _check_pos((i, j), self.size)
        return self.rows[i][j]

    def __getitem__(self, p) -> int:
        return self.entry(*p)

    @property
    def top_row(self) -> BitRow:
        return self.rows[0] if self.rows else BitRow(0)

    def right_side(self) -> BitRow:
        """``(a[0][n-1], a[1][n-2], ..., a[n-1][0])``."""
        n = self.size
        return BitRow.from_bits((self.rows[k].value >> (n - 1 - k)) & 1 for k in range(n))

    def left_side(self) -> BitRow:
        """``(a[0][0], a[1][0], ..., a[n-1][0])``."""
        return BitRow.from_bits(r.value & 1 for r in self.rows)

    def satisfies_local_rule(self) -> bool:
        for i in range(1, self.size):
            prev = self.rows[i - 1].value
            if self.rows[i].value != (prev ^ (prev >> 1)) & _low_mask(self.size - i):
                return False
        return all(r.length == self.size - i for i, r in enumerate(self.rows))

    def bit_count(self) -> int:
        return sum(r.length for r in self.rows)

    def rotate120(self) -> SteinhausTriangle:
        """The entry at ``(i, j)`` of the result is ``self[j, n-1-i-j]``.

        With this orientation the top row of the result is ``self.right_side()``.
        """
        n = self.size
        return _from_entries(n, lambda i, j: self.rows[j][n - 1 - i - j])

    def rotate240(self) -> SteinhausTriangle:
        n = self.size
        return _from_entries(n, lambda i, j: self.rows[n - 1 - i - j][i])

    def reflect(self) -> SteinhausTriangle:
        """Mirror left to right: ``(i, j) -> (i, n-1-i-j)``."""
        return SteinhausTriangle(tuple(r.reversed() for r in self.rows))

    def __xor__(self, other: SteinhausTriangle) -> SteinhausTriangle:
        if not isinstance(other, SteinhausTriangle):
            return NotImplemented
        if other.size != self.size:
            raise SizeMismatch(f"sizes differ: {self.size} != {other.size}")
        return SteinhausTriangle(tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def xor(self, other: SteinhausTriangle) -> SteinhausTriangle:
        return self ^ other

    def project(self, index_positions: Iterable) -> BitRow:
        """The bits at the given positions, in the order given."""
        n = self.size
        return BitRow.from_bits(self.rows[p.i][p.j] for p in (_check_pos(q, n) for q in index_positions))

    def to_text(self) -> str:
        lines = [f"size={self.size}"] + [str(r) for r in self.rows]
        return "\n".join(lines) + "\n"

    def pretty(self) -> str:
        return "\n".join(" " * i + " ".join(str(r)) for i, r in enumerate(self.rows))

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def from_text(cls, text: str) -> SteinhausTriangle:
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if not lines or not lines[0].startswith("size="):
            raise ParseError("missing 'size=' header")
        try:
            n = int(lines[0][5:])
        except ValueError as exc:
            raise ParseError(f"bad header {lines[0]!r}") from exc
        body = lines[1:]
        if len(body) != n:
            raise ParseError(f"expected {n} rows, got {len(body)}")
        try:
            rows = tuple(BitRow.from_string(ln) for ln in body)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        tri = cls(rows)
        if not tri.satisfies_local_rule():
            raise ParseError("rows do not satisfy the local rule")
        return tri


def _from_entries(n: int, f: Callable[[int, int], int]) -> SteinhausTriangle:
    return SteinhausTriangle(tuple(BitRow.from_bits(f(i, j) for j in range(n - i)) for i in range(n)))


def from_top_row(top: BitRow) -> SteinhausTriangle:
    n = top.length
    rows = []
    cur = top.value
    for i in range(n):
        rows.append(BitRow(n - i, cur))
        cur = (cur ^ (cur >> 1)) & _low_mask(n - i - 1)
    return SteinhausTriangle(tuple(rows))


def from_right_side(right: BitRow) -> SteinhausTriangle:
    return from_top_row(right).rotate240()


def from_left_side(left: BitRow) -> SteinhausTriangle:
    return from_right_side(left).reflect()


def zero_triangle(n: int) -> SteinhausTriangle:
    return from_top_row(BitRow.zeros(n))


def entry_via_top(top: BitRow, p) -> int:
    """``a[i][j] = sum_k binom(i, k - j) * a[0][k]  (mod 2)``."""
    n = top.length
    i, j = _check_pos(p, n)
    return parity(top.value & (pascal_row_mod2(i) << j) & _low_mask(n))


def entry_via_right(right: BitRow, p) -> int:
    """``a[i][j] = sum_k binom(n-1-i-j, k - i) * a[k][n-1-k]  (mod 2)``."""
    n = right.length
    i, j = _check_pos(p, n)
    return parity(right.value & (pascal_row_mod2(n - 1 - i - j) << i) & _low_mask(n))


def entry_via_left(left: BitRow, p) -> int:
    """``a[i][j] = sum_k binom(j, k - i) * a[k][0]  (mod 2)``."""
    n = left.length
    i, j = _check_pos(p, n)
    return parity(left.value & (pascal_row_mod2(j) << i) & _low_mask(n))


def top_positions(n: int) -> list[TrianglePos]:
    return [TrianglePos(0, j) for j in range(n)]


def right_positions(n: int) -> list[TrianglePos]:
    return [TrianglePos(k, n - 1 - k) for k in range(n)]


def left_positions(n: int) -> list[TrianglePos]:
    return [TrianglePos(k, 0) for k in range(n)]


def rotate120_pos(p, n: int) -> TrianglePos:
    """Where the entry at ``p`` lands under ``SteinhausTriangle.rotate120``."""
    i, j = p
    return TrianglePos(n - 1 - i - j, i)


def reflect_pos(p, n: int) -> TrianglePos:
    i, j = p
    return TrianglePos(i, n - 1 - i - j)


def dihedral_maps(n: int) -> list[Callable[[TrianglePos], TrianglePos]]:
    """The six position maps of the symmetry group of ``T_n``."""
    rot = lambda p: rotate120_pos(p, n)  # noqa: E731
    ref = lambda p: reflect_pos(p, n)  # noqa: E731
    return [
        lambda p: TrianglePos(*p),
        rot,
        lambda p: rot(rot(p)),
        ref,
        lambda p: ref(rot(p)),
        lambda p: ref(rot(rot(p))),
    ]


__all__ = [
    "TrianglePos",
    "SteinhausTriangle",
    "triangular_number",
    "positions",
    "from_top_row",
    "from_right_side",
    "from_left_side",
    "zero_triangle",
    "entry_via_top",
    "entry_via_right",
    "entry_via_left",
    "top_positions",
    "right_positions",
    "left_positions",
    "rotate120_pos",
    "reflect_pos",
    "dihedral_maps",
]
