"""Word-packed linear algebra over GF(2).

Rows are bitsets: column ``c`` lives in word ``c // 64`` at bit ``c % 64``.
``BitRow`` keeps its bits in a Python ``int`` (arbitrary length, word-parallel
XOR/AND in C); ``BitMatrix`` keeps a ``(rows, words)`` array of ``uint64`` so
that the elimination kernel XORs whole blocks of rows at once with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotBlockTriangular, ShapeMismatch, Singular

WORD_BITS = 64
_WORD = np.dtype("<u8")


def _n_words(n_bits: int) -> int:
    return (n_bits + WORD_BITS - 1) // WORD_BITS


def _mask(n_bits: int) -> int:
    return (1 << n_bits) - 1


def _int_to_words(value: int, n_words: int) -> np.ndarray:
    return np.frombuffer(value.to_bytes(8 * n_words, "little"), dtype=_WORD)


def _words_to_int(words: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(words, dtype=_WORD).tobytes(), "little")


def parity(value: int) -> int:
    return value.bit_count() & 1


@dataclass(frozen=True)
class BitRow:
    """Immutable bit vector of fixed ``length``; bit ``c`` of ``value`` is entry ``c``."""

    length: int
    value: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"bits set beyond length {self.length}")

    @classmethod
    def zeros(cls, length: int) -> BitRow:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitRow:
        return cls(length, _mask(length))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitRow:
        value = 0
        length = 0
        for c, b in enumerate(bits):
            if b not in (0, 1, True, False):
                raise ValueError(f"not a bit: {b!r}")
            if b:
                value |= 1 << c
            length = c + 1
        return cls(length, value)

    @classmethod
    def from_string(cls, text: str) -> BitRow:
        """Parse ``"0010100"`` (leftmost character is entry 0)."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"malformed bit string: {text!r}")
        return cls(len(text), int(text[::-1], 2) if text else 0)

    @classmethod
    def from_words(cls, words: np.ndarray, length: int) -> BitRow:
        return cls(length, _words_to_int(words) & _mask(length))

    @property
    def words(self) -> np.ndarray:
        return _int_to_words(self.value, _n_words(self.length))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, c: int) -> int:
        if c < 0:
            c += self.length
        if not 0 <= c < self.length:
            raise IndexError(c)
        return (self.value >> c) & 1

    def __iter__(self):
        v = self.value
        for _ in range(self.length):
            yield v & 1
            v >>= 1

    def _check(self, other: BitRow) -> None:
        if not isinstance(other, BitRow):
            raise TypeError(f"expected BitRow, got {type(other).__name__}")
        if other.length != self.length:
            raise ShapeMismatch(f"lengths differ: {self.length} != {other.length}")

    def __xor__(self, other: BitRow) -> BitRow:
        self._check(other)
        return BitRow(self.length, self.value ^ other.value)

    def __and__(self, other: BitRow) -> BitRow:
        self._check(other)
        return BitRow(self.length, self.value & other.value)

    def dot(self, other: BitRow) -> int:
        self._check(other)
        return parity(self.value & other.value)

    def to_bits(self) -> tuple[int, ...]:
        return tuple(self)

    def reversed(self) -> BitRow:
        return BitRow.from_bits(reversed(self.to_bits()))

    def count(self) -> int:
        return self.value.bit_count()

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self)

    def __repr__(self) -> str:
        return f"BitRow('{self}')"


@dataclass(frozen=True)
class BlockPartition:
    """Sizes of consecutive square diagonal blocks."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if any(s < 1 for s in self.sizes):
            raise ShapeMismatch(f"block sizes must be positive: {self.sizes}")

    @property
    def dimension(self) -> int:
        return sum(self.sizes)

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return out

    def blocks(self) -> list[tuple[int, int]]:
        """``(start, stop)`` index range of each block."""
        return [(o, o + s) for o, s in zip(self.offsets(), self.sizes)]


class BitMatrix:
    """Dense GF(2) matrix, one packed ``uint64`` word array per row."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ShapeMismatch("negative dimension")
        nw = _n_words(cols)
        if data is None:
            data = np.zeros((rows, nw), dtype=_WORD)
        else:
            data = np.array(data, dtype=_WORD, copy=True).reshape(rows, nw)
            if cols % WORD_BITS and nw:
                data[:, -1] &= np.uint64(_mask(cols % WORD_BITS))
        data.flags.writeable = False
        self.rows = rows
        self.cols = cols
        self.data = data

    # construction

    @classmethod
    def from_int_rows(cls, rows: Sequence[int], cols: int) -> BitMatrix:
        nw = _n_words(cols)
        if any(r < 0 or r >> cols for r in rows):
            raise ShapeMismatch(f"row wider than {cols} columns")
        buf = b"".join(r.to_bytes(8 * nw, "little") for r in rows)
        data = np.frombuffer(buf, dtype=_WORD).reshape(len(rows), nw)
        return cls(len(rows), cols, data)

    @classmethod
    def from_rows(cls, rows: Sequence[BitRow], cols: int | None = None) -> BitMatrix:
        if cols is None:
            if not rows:
                raise ShapeMismatch("cannot infer column count from zero rows")
            cols = rows[0].length
        for r in rows:
            if r.length != cols:
                raise ShapeMismatch(f"row length {r.length} != {cols}")
        return cls.from_int_rows([r.value for r in rows], cols)

    @classmethod
    def from_array(cls, array) -> BitMatrix:
        arr = np.asarray(array)
        if arr.ndim != 2:
            raise ShapeMismatch("expected a 2-d array")
        rows, cols = arr.shape
        bits = (arr.astype(np.int64) & 1).astype(np.uint8)
        pad = 8 * _n_words(cols) * 8 - cols
        bits = np.pad(bits, ((0, 0), (0, pad)))
        packed = np.packbits(bits, axis=1, bitorder="little")
        data = packed.view(_WORD) if packed.size else np.zeros((rows, _n_words(cols)), _WORD)
        return cls(rows, cols, data)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_int_rows([1 << i for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def row_ints(self) -> list[int]:
        nw = self.data.shape[1]
        buf = self.data.tobytes()
        step = 8 * nw
        return [int.from_bytes(buf[i * step:(i + 1) * step], "little") for i in range(self.rows)]

    def row(self, i: int) -> BitRow:
        return BitRow(self.cols, _words_to_int(self.data[i]))

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return int(self.data[i, j // WORD_BITS] >> np.uint64(j % WORD_BITS)) & 1

    def to_array(self) -> np.ndarray:
        """Unpacked ``uint8`` array of shape ``(rows, cols)``."""
        if self.rows == 0 or self.cols == 0:
            return np.zeros((self.rows, self.cols), dtype=np.uint8)
        as_bytes = self.data.view(np.uint8).reshape(self.rows, -1)
        return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, : self.cols]

    def to_lists(self) -> list[list[int]]:
        return self.to_array().tolist()

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> BitMatrix:
        m = _mask(c1 - c0)
        return BitMatrix.from_int_rows([(r >> c0) & m for r in self.row_ints()[r0:r1]], c1 - c0)

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_array(self.to_array().T)

    # algebra

    def __matmul__(self, other):
        if isinstance(other, BitRow):
            if other.length != self.cols:
                raise ShapeMismatch(f"{self.shape} @ vector of length {other.length}")
            if self.rows == 0:
                return BitRow(0)
            prod = np.bitwise_count(self.data & other.words).sum(axis=1) & 1
            return BitRow.from_bits(int(b) for b in prod)
        if isinstance(other, BitMatrix):
            if other.rows != self.cols:
                raise ShapeMismatch(f"{self.shape} @ {other.shape}")
            out = np.zeros((self.rows, other.data.shape[1]), dtype=_WORD)
            left = self.to_array().astype(bool)
            for i in range(self.rows):
                sel = other.data[left[i]]
                if sel.shape[0]:
                    out[i] = np.bitwise_xor.reduce(sel, axis=0)
            return BitMatrix(self.rows, other.cols, out)
        return NotImplemented

    def __xor__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} ^ {other.shape}")
        return BitMatrix(self.rows, self.cols, self.data ^ other.data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.data, other.data)

    __hash__ = None

    def __repr__(self) -> str:
        body = "\n".join("".join(map(str, r)) for r in self.to_lists())
        return f"BitMatrix({self.rows}x{self.cols})" + (f"\n{body}" if body else "")


def _eliminate(work: np.ndarray, n_pivot_cols: int, full: bool) -> list[int]:
    """Gaussian elimination in place on packed rows; returns pivot columns.

    Only the first ``n_pivot_cols`` columns are searched for pivots; the
    remaining columns of ``work`` (augmented blocks) are carried along.
    With ``full`` the pivot columns are also cleared above each pivot.
    """
    n_rows = work.shape[0]
    pivots: list[int] = []
    r = 0
    for col in range(n_pivot_cols):
        if r == n_rows:
            break
        w, b = divmod(col, WORD_BITS)
        column = (work[:, w] >> np.uint64(b)) & np.uint64(1)
        below = np.flatnonzero(column[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
            column[[r, p]] = column[[p, r]]
        hit = column.astype(bool)
        hit[r] = False
        if not full:
            hit[:r] = False
        if hit.any():
            work[hit, w:] ^= work[r, w:]
        pivots.append(col)
        r += 1
    return pivots


def _rank_int_rows(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def rank(m: BitMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.cols <= WORD_BITS:
        return _rank_int_rows(m.row_ints())
    return len(_eliminate(np.array(m.data), m.cols, full=False))


def _require_square(m: BitMatrix) -> None:
    if not m.is_square():
        raise ShapeMismatch(f"expected a square matrix, got {m.shape}")


def invert(m: BitMatrix) -> BitMatrix:
    _require_square(m)
    n = m.rows
    if n == 0:
        return BitMatrix(0, 0)
    nw = m.data.shape[1]
    work = np.hstack([m.data, BitMatrix.identity(n).data])
    if len(_eliminate(work, n, full=True)) < n:
        raise Singular(f"matrix of dimension {n} is singular")
    return BitMatrix(n, n, work[:, nw:])


def solve(m: BitMatrix, rhs: BitRow) -> BitRow:
    """Return ``x`` with ``m @ x == rhs``."""
    _require_square(m)
    n = m.rows
    if rhs.length != n:
        raise ShapeMismatch(f"rhs length {rhs.length} != {n}")
    if n == 0:
        return BitRow(0)
    if n <= WORD_BITS:
        return BitRow(n, solve_int_rows(m.row_ints(), rhs.value, n))
    nw = m.data.shape[1]
    rhs_col = np.array([[b] for b in rhs], dtype=_WORD)
    work = np.hstack([m.data, rhs_col])
    pivots = _eliminate(work, n, full=True)
    if len(pivots) < n:
        raise Singular(f"matrix of dimension {n} is singular")
    x = 0
    for i, col in enumerate(pivots):
        if work[i, nw]:
            x |= 1 << col
    return BitRow(n, x)


def solve_int_rows(rows: Sequence[int], rhs: int, n: int) -> int:
    """Solve a small square system held as ``int`` rows; bit ``k`` of ``rhs`` is row ``k``'s target."""
    aug = [r | (((rhs >> k) & 1) << n) for k, r in enumerate(rows)]
    for col in range(n):
        bit = 1 << col
        p = next((i for i in range(col, n) if aug[i] & bit), None)
        if p is None:
            raise Singular(f"block of dimension {n} is singular")
        aug[col], aug[p] = aug[p], aug[col]
        pivot = aug[col]
        for i in range(n):
            if i != col and aug[i] & bit:
                aug[i] ^= pivot
    x = 0
    for k in range(n):
        x |= ((aug[k] >> n) & 1) << k
    return x


def solve_block_lower(m: BitMatrix, part: BlockPartition, rhs: BitRow) -> BitRow:
    """Forward substitution over the diagonal blocks of a block lower-triangular system."""
    _require_square(m)
    n = m.rows
    if part.dimension != n:
        raise ShapeMismatch(f"partition sums to {part.dimension}, matrix has dimension {n}")
    if rhs.length != n:
        raise ShapeMismatch(f"rhs length {rhs.length} != {n}")
    rows = m.row_ints()
    x = 0
    for start, stop in part.blocks():
        size = stop - start
        block_rows = []
        target = 0
        for k in range(start, stop):
            r = rows[k]
            if r >> stop:
                col = stop + ((r >> stop) & -(r >> stop)).bit_length() - 1
                raise NotBlockTriangular(f"nonzero entry at ({k}, {col}) above the block diagonal")
            block_rows.append(r >> start)
            target |= (rhs[k] ^ parity(r & x)) << (k - start)
        x |= solve_int_rows(block_rows, target, size) << start
    return BitRow(n, x)


__all__ = [
    "BitRow",
    "BitMatrix",
    "BlockPartition",
    "rank",
    "invert",
    "solve",
    "solve_block_lower",
    "solve_int_rows",
    "parity",
]
