"""Dense bit-packed linear algebra over GF(2).

A BitMatrix stores each row in little-endian 64-bit words: bit j of row i
lives in ``words[i, j >> 6]`` at position ``j & 63``.  Trailing pad bits are
kept zero, so whole-word XOR/AND/popcount never need masking.

Rank and kernel use word-packed Gaussian elimination with first-nonzero
pivoting.  Elimination is vectorised across rows with numpy, which keeps a
30000 x 30000 instance inside desk-scale time and memory (the packed words
for that size are ~112 MB).  Results are deterministic and the input matrix
is never modified.

Text dump format (also used by the CLI ``--dump`` option):

    line 1:     "<rows> <cols>"
    lines 2..:  one hex string per row, ceil(cols/4) digits; digit k encodes
                columns 4k..4k+3, with column 4k in the least significant
                bit of the digit.

SparseBitMatrix holds only the positions of 1-entries, keyed by pairs of
integers (for coefficient matrices the keys are exponent pairs).  Ranks are
invariant under dropping all-zero rows and columns, so ``compact`` maps the
occupied keys, in sorted order, onto a dense BitMatrix.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import BudgetError, ParameterError

WORD = 64
MAX_BITS = 1 << 33  # rows * cols cap; 2^33 bits = 1 GiB packed
_DENSE_BITS = 1 << 28  # cap for operations that expand to one byte per bit


def _words_per_row(cols: int) -> int:
    return max((cols + WORD - 1) // WORD, 1) if cols else 0


def _int_to_words(value: int, cols: int) -> np.ndarray:
    w = _words_per_row(cols)
    raw = value.to_bytes(w * 8, "little")
    return np.frombuffer(raw, dtype="<u8").astype(np.uint64)


class BitMatrix:
    """A rows x cols matrix over GF(2), packed 64 columns per word."""

    __slots__ = ("rows", "cols", "words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ParameterError("negative dimension")
        if rows * cols > MAX_BITS:
            raise BudgetError(f"matrix of {rows}x{cols} bits exceeds the {MAX_BITS}-bit cap")
        self.rows = rows
        self.cols = cols
        w = _words_per_row(cols)
        if words is None:
            words = np.zeros((rows, w), dtype=np.uint64)
        else:
            if words.shape != (rows, w) or words.dtype != np.uint64:
                raise ParameterError("word buffer has the wrong shape or dtype")
        self.words = words

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        m = cls(n, n)
        for i in range(n):
            m.words[i, i >> 6] = np.uint64(1) << np.uint64(i & 63)
        return m

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BitMatrix":
        m = cls(rows, cols)
        if rows and cols:
            m.words[:, :] = ~np.uint64(0)
            m._mask_pad()
        return m

    @classmethod
    def from_dense(cls, arr) -> "BitMatrix":
        """Build from a 2-d array of 0/1 values."""
        a = np.asarray(arr)
        if a.ndim != 2:
            raise ParameterError("need a 2-d array")
        rows, cols = a.shape
        m = cls(rows, cols)
        if rows == 0 or cols == 0:
            return m
        packed = np.packbits(a.astype(bool), axis=1, bitorder="little")
        buf = np.zeros((rows, _words_per_row(cols) * 8), dtype=np.uint8)
        buf[:, : packed.shape[1]] = packed
        m.words = np.ascontiguousarray(buf).view("<u8").astype(np.uint64)
        return m

    @classmethod
    def from_row_ints(cls, row_values: Iterable[int], cols: int) -> "BitMatrix":
        """Build from little-endian row integers (bit j = column j)."""
        vals = list(row_values)
        m = cls(len(vals), cols)
        for i, v in enumerate(vals):
            if v < 0 or v >> cols:
                raise ParameterError(f"row {i} does not fit in {cols} columns")
            m.words[i] = _int_to_words(v, cols)
        return m

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator) -> "BitMatrix":
        return cls.from_dense(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8))

    # -- accessors ------------------------------------------------------

    def _mask_pad(self) -> None:
        rem = self.cols & 63
        if rem and self.words.size:
            self.words[:, -1] &= (np.uint64(1) << np.uint64(rem)) - np.uint64(1)

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, self.words.copy())

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ParameterError("index out of range")
        return int(self.words[i, j >> 6] >> np.uint64(j & 63)) & 1

    def row_int(self, i: int) -> int:
        return int.from_bytes(self.words[i].tobytes(), "little")

    def to_dense(self) -> np.ndarray:
        if self.rows * self.cols > _DENSE_BITS:
            raise BudgetError("dense expansion beyond the byte-per-bit cap")
        if self.rows == 0 or self.cols == 0:
            return np.zeros((self.rows, self.cols), dtype=np.uint8)
        bits = np.unpackbits(self.words.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self.cols]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and np.array_equal(self.words, other.words)
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def count_ones(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    # -- elementwise ops ------------------------------------------------

    def complement(self) -> "BitMatrix":
        """Entrywise complement: self + J over GF(2)."""
        out = BitMatrix(self.rows, self.cols, ~self.words)
        out._mask_pad()
        return out

    def xor(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ParameterError("dimension mismatch")
        return BitMatrix(self.rows, self.cols, self.words ^ other.words)

    def hadamard(self, other: "BitMatrix") -> "BitMatrix":
        """Entrywise product, i.e. bitwise AND."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ParameterError("dimension mismatch")
        return BitMatrix(self.rows, self.cols, self.words & other.words)

    def tensor(self, other: "BitMatrix") -> "BitMatrix":
        """Kronecker product: block (i1, j1) equals self[i1,j1] * other."""
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        if rows * cols > MAX_BITS:
            raise BudgetError("tensor result exceeds the bit cap")
        b_rows = [other.row_int(i) for i in range(other.rows)]
        out = []
        for i1 in range(self.rows):
            a = self.row_int(i1)
            js = []
            aa = a
            while aa:
                js.append((aa & -aa).bit_length() - 1)
                aa &= aa - 1
            for b in b_rows:
                r = 0
                for j1 in js:
                    r |= b << (j1 * other.cols)
                out.append(r)
        return BitMatrix.from_row_ints(out, cols)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    def mat_vec(self, v: int) -> int:
        """Matrix-vector product over GF(2); v is a little-endian bit int."""
        if v < 0 or v >> self.cols:
            raise ParameterError(f"vector does not fit in {self.cols} coordinates")
        vw = _int_to_words(v, self.cols)
        parities = np.bitwise_count(self.words & vw).sum(axis=1) & 1
        out = 0
        for i in np.nonzero(parities)[0]:
            out |= 1 << int(i)
        return out

    # -- elimination ----------------------------------------------------

    def rank(self) -> int:
        """Rank over GF(2).  The matrix itself is left untouched."""
        if self.rows == 0 or self.cols == 0:
            return 0
        M = self.words.copy()
        R = self.rows
        r = 0
        one = np.uint64(1)
        misses = 0
        check_at = WORD  # exponential backoff for the all-zero early exit
        for c in range(self.cols):
            col = (M[r:, c >> 6] >> np.uint64(c & 63)) & one
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                misses += 1
                if misses >= check_at:
                    if not M[r:].any():
                        break
                    check_at *= 2
                continue
            p = r + int(nz[0])
            if p != r:
                tmp = M[r].copy()
                M[r] = M[p]
                M[p] = tmp
            rest = nz[1:] + r
            if rest.size:
                M[rest] ^= M[r]
            r += 1
            if r == R:
                break
        return r

    def _rref(self) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form of a copy; returns (words, pivot columns)."""
        M = self.words.copy()
        pivots: list[int] = []
        if self.rows == 0 or self.cols == 0:
            return M, pivots
        r = 0
        one = np.uint64(1)
        for c in range(self.cols):
            col = (M[r:, c >> 6] >> np.uint64(c & 63)) & one
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            p = r + int(nz[0])
            if p != r:
                tmp = M[r].copy()
                M[r] = M[p]
                M[p] = tmp
            full = (M[:, c >> 6] >> np.uint64(c & 63)) & one
            hit = np.nonzero(full)[0]
            hit = hit[hit != r]
            if hit.size:
                M[hit] ^= M[r]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return M, pivots

    def kernel_basis(self) -> list[int]:
        """A basis of {v : M v = 0}, as little-endian bit ints.

        Returns cols - rank vectors; standard free-column construction from
        the reduced row echelon form.
        """
        M, pivots = self._rref()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            v = 1 << f
            fw, fb = f >> 6, np.uint64(f & 63)
            for ri, c in enumerate(pivots):
                if (M[ri, fw] >> fb) & np.uint64(1):
                    v |= 1 << c
            basis.append(v)
        return basis

    # -- text dump ------------------------------------------------------

    def dump(self, fh) -> None:
        """Write the documented hex dump format to a text stream."""
        fh.write(f"{self.rows} {self.cols}\n")
        digits = (self.cols + 3) // 4
        for i in range(self.rows):
            v = self.row_int(i)
            fh.write("".join("0123456789abcdef"[(v >> (4 * k)) & 15] for k in range(digits)))
            fh.write("\n")

    @classmethod
    def load(cls, fh) -> "BitMatrix":
        header = fh.readline().split()
        if len(header) != 2:
            raise ParameterError("bad dump header")
        rows, cols = int(header[0]), int(header[1])
        vals = []
        for _ in range(rows):
            line = fh.readline().strip()
            v = 0
            for k, ch in enumerate(line):
                v |= int(ch, 16) << (4 * k)
            vals.append(v)
        return cls.from_row_ints(vals, cols)


class SparseBitMatrix:
    """Positions of the 1-entries of a 0/1 matrix with integer-pair keys.

    Keys are pairs (a, b) of non-negative ints below 2^32, packed into one
    uint64 so that integer order on packed keys equals lexicographic order
    on the pairs.
    """

    __slots__ = ("_row_keys", "_col_keys")

    def __init__(self, entries: Iterable[tuple[tuple[int, int], tuple[int, int]]] = ()):
        rows = []
        cols = []
        for (a, b), (c, d) in entries:
            rows.append(self._pack(a, b))
            cols.append(self._pack(c, d))
        r = np.array(rows, dtype=np.uint64)
        c = np.array(cols, dtype=np.uint64)
        packed = np.unique(np.stack([r, c], axis=1), axis=0) if r.size else np.zeros((0, 2), np.uint64)
        self._row_keys = packed[:, 0]
        self._col_keys = packed[:, 1]

    @staticmethod
    def _pack(a: int, b: int) -> int:
        if not (0 <= a < 1 << 32 and 0 <= b < 1 << 32):
            raise ParameterError("key component outside 0..2^32-1")
        return (a << 32) | b

    @staticmethod
    def _unpack(k: int) -> tuple[int, int]:
        return (int(k) >> 32, int(k) & 0xFFFFFFFF)

    @classmethod
    def from_packed(cls, row_keys: np.ndarray, col_keys: np.ndarray) -> "SparseBitMatrix":
        """Adopt packed uint64 key arrays (deduplicated here)."""
        self = cls.__new__(cls)
        packed = np.stack([row_keys.astype(np.uint64), col_keys.astype(np.uint64)], axis=1)
        packed = np.unique(packed, axis=0) if packed.size else np.zeros((0, 2), np.uint64)
        self._row_keys = packed[:, 0]
        self._col_keys = packed[:, 1]
        return self

    @property
    def nnz(self) -> int:
        return int(self._row_keys.size)

    def entries(self) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
        for rk, ck in zip(self._row_keys, self._col_keys):
            yield self._unpack(rk), self._unpack(ck)

    def row_keys(self) -> list[tuple[int, int]]:
        return [self._unpack(k) for k in np.unique(self._row_keys)]

    def col_keys(self) -> list[tuple[int, int]]:
        return [self._unpack(k) for k in np.unique(self._col_keys)]

    def compact(self) -> BitMatrix:
        """Dense matrix on the occupied rows/columns, keys in sorted order.

        Dropping the untouched all-zero rows and columns does not change the
        rank, and the sorted key order makes the result reproducible.
        """
        if self.nnz == 0:
            return BitMatrix(0, 0)
        urows, ridx = np.unique(self._row_keys, return_inverse=True)
        ucols, cidx = np.unique(self._col_keys, return_inverse=True)
        R, C = int(urows.size), int(ucols.size)
        out = BitMatrix(R, C)
        w = out.words.reshape(-1)
        flat = ridx.astype(np.int64) * out.words.shape[1] + (cidx >> 6).astype(np.int64)
        bits = np.uint64(1) << (cidx.astype(np.uint64) & np.uint64(63))
        np.bitwise_or.at(w, flat, bits)
        return out
