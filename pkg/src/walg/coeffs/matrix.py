"""Sparse matrices over an exact field (Fraction or RatFunc entries)."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from walg.errors import DimensionMismatch


class SparseMatrix:
    """Row-major sparse matrix with no stored zeros.

    Instances are treated as immutable; every operation returns a new matrix.
    """

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, object]] | None = None):
        if nrows < 0 or ncols < 0:
            raise DimensionMismatch("negative matrix shape")
        self.nrows = nrows
        self.ncols = ncols
        clean: dict[int, dict[int, object]] = {}
        for i, row in (rows or {}).items():
            if not 0 <= i < nrows:
                raise DimensionMismatch(f"row index {i} out of range for {nrows} rows")
            r = {}
            for j, v in row.items():
                if not 0 <= j < ncols:
                    raise DimensionMismatch(f"column index {j} out of range for {ncols} columns")
                if v != 0:
                    r[j] = v
            if r:
                clean[i] = r
        self._rows = clean

    @classmethod
    def _raw(cls, nrows, ncols, rows) -> "SparseMatrix":
        m = cls.__new__(cls)
        m.nrows, m.ncols, m._rows = nrows, ncols, rows
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls._raw(nrows, ncols, {})

    @classmethod
    def identity(cls, n: int, one=1) -> "SparseMatrix":
        return cls._raw(n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def from_dense(cls, data: Iterable[Iterable], ncols: int | None = None) -> "SparseMatrix":
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionMismatch("ragged dense matrix")
        return cls(len(data), ncols, {i: dict(enumerate(r)) for i, r in enumerate(data)})

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Mapping[tuple[int, int], object]) -> "SparseMatrix":
        rows: dict[int, dict[int, object]] = {}
        for (i, j), v in entries.items():
            rows.setdefault(i, {})[j] = v
        return cls(nrows, ncols, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def entries(self) -> dict[tuple[int, int], object]:
        return {(i, j): v for i, row in self._rows.items() for j, v in row.items()}

    def row(self, i: int) -> dict[int, object]:
        return self._rows.get(i, {})

    def nonzero_rows(self):
        """Yield ``(index, row_dict)`` in increasing row order."""
        for i in sorted(self._rows):
            yield i, self._rows[i]

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def to_dense(self, zero=0) -> list[list]:
        out = [[zero] * self.ncols for _ in range(self.nrows)]
        for i, row in self._rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        rows: dict[int, dict[int, object]] = {}
        for i, row in self._rows.items():
            for j, v in row.items():
                rows.setdefault(j, {})[i] = v
        return SparseMatrix._raw(self.ncols, self.nrows, rows)

    def map(self, f: Callable) -> "SparseMatrix":
        """Apply ``f`` entrywise (e.g. specialization of an indeterminate)."""
        return SparseMatrix(self.nrows, self.ncols, {i: {j: f(v) for j, v in r.items()} for i, r in self._rows.items()})

    def scale(self, c) -> "SparseMatrix":
        if c == 0:
            return SparseMatrix.zeros(self.nrows, self.ncols)
        return SparseMatrix._raw(self.nrows, self.ncols, {i: {j: v * c for j, v in r.items()} for i, r in self._rows.items()})

    def _check_same_shape(self, other: "SparseMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same_shape(other)
        rows = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            acc = rows.setdefault(i, {})
            for j, v in r.items():
                s = acc.get(j, 0) + v
                if s == 0:
                    acc.pop(j, None)
                else:
                    acc[j] = s
            if not acc:
                del rows[i]
        return SparseMatrix._raw(self.nrows, self.ncols, rows)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix._raw(self.nrows, self.ncols, {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        rows = {}
        orows = other._rows
        for i, r in self._rows.items():
            acc: dict[int, object] = {}
            for k, a in r.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v != 0}
            if acc:
                rows[i] = acc
        return SparseMatrix._raw(self.nrows, other.ncols, rows)

    def apply(self, vec):
        """Matrix-vector product for a dense vector (sequence of length ``ncols``)."""
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length mismatch")
        out = [0] * self.nrows
        for i, r in self._rows.items():
            s = 0
            for j, v in r.items():
                s = s + v * vec[j]
            out[i] = s
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def vstack(mats: Iterable[SparseMatrix]) -> SparseMatrix:
    mats = list(mats)
    if not mats:
        return SparseMatrix.zeros(0, 0)
    ncols = mats[0].ncols
    rows = {}
    off = 0
    for m in mats:
        if m.ncols != ncols:
            raise DimensionMismatch("vstack column mismatch")
        for i, r in m._rows.items():
            rows[off + i] = dict(r)
        off += m.nrows
    return SparseMatrix._raw(off, ncols, rows)
