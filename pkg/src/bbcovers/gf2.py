"""Dense GF(2) linear algebra on machine-word-packed rows.

Rows are Python ints used as bit vectors: bit j of ``rows[i]`` is the matrix
entry (i, j), so the lowest bit of a row is column 0.  Python ints give
single-instruction XOR/popcount on vectors of a few hundred bits, which is
the regime everything in this package lives in.

All values are immutable after construction.  Row reduction always picks the
leftmost nonzero column with the topmost unreduced row, so ranks, kernels and
membership certificates are deterministic functions of their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ShapeError(ValueError):
    """Raised when matrix dimensions are incompatible."""


def _mask(n_cols: int) -> int:
    return (1 << n_cols) - 1


@dataclass(frozen=True)
class BinMatrix:
    """An n_rows x n_cols matrix over GF(2), one int per row."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0:
            raise ShapeError(f"negative shape ({self.n_rows}, {self.n_cols})")
        if len(self.rows) != self.n_rows:
            raise ShapeError(f"{len(self.rows)} rows for declared n_rows={self.n_rows}")
        m = _mask(self.n_cols)
        for i, r in enumerate(self.rows):
            if r & ~m:
                raise ShapeError(f"row {i} has bits beyond column {self.n_cols - 1}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinMatrix":
        """Build from an iterable of 0/1 iterables."""
        packed = []
        width = None
        for row in rows:
            bits = list(row)
            if width is None:
                width = len(bits)
            elif len(bits) != width:
                raise ShapeError("ragged rows")
            packed.append(sum((b & 1) << j for j, b in enumerate(bits)))
        return cls(len(packed), width or 0, tuple(packed))

    @classmethod
    def from_ints(cls, rows: Iterable[int], n_cols: int) -> "BinMatrix":
        rows = tuple(rows)
        return cls(len(rows), n_cols, rows)

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BinMatrix":
        return cls(n_rows, n_cols, (0,) * n_rows)

    # -- element access ----------------------------------------------------

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_weight(self, i: int) -> int:
        return self.rows[i].bit_count()

    def column(self, j: int) -> int:
        """Column j as an int over row indices."""
        v = 0
        for i, r in enumerate(self.rows):
            v |= ((r >> j) & 1) << i
        return v

    def is_zero(self) -> bool:
        return not any(self.rows)

    def is_permutation(self) -> bool:
        """True iff the matrix is square with exactly one 1 per row and column."""
        if self.n_rows != self.n_cols:
            return False
        seen = 0
        for r in self.rows:
            if r.bit_count() != 1 or seen & r:
                return False
            seen |= r
        return seen == _mask(self.n_cols)

    # -- arithmetic --------------------------------------------------------

    def mul(self, other: "BinMatrix") -> "BinMatrix":
        """Matrix product over GF(2)."""
        if self.n_cols != other.n_rows:
            raise ShapeError(
                f"cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}"
            )
        out = []
        orows = other.rows
        for r in self.rows:
            acc = 0
            x = r
            while x:
                i = (x & -x).bit_length() - 1
                acc ^= orows[i]
                x &= x - 1
            out.append(acc)
        return BinMatrix(self.n_rows, other.n_cols, tuple(out))

    def __matmul__(self, other: "BinMatrix") -> "BinMatrix":
        return self.mul(other)

    def mul_vec(self, v: int) -> int:
        """Apply to a column vector (int over self.n_cols bits); returns int over n_rows."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & v).bit_count() & 1) << i
        return out

    def add(self, other: "BinMatrix") -> "BinMatrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ShapeError("shape mismatch in add")
        return BinMatrix(
            self.n_rows, self.n_cols, tuple(a ^ b for a, b in zip(self.rows, other.rows))
        )

    def transpose(self) -> "BinMatrix":
        cols = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            x = r
            while x:
                j = (x & -x).bit_length() - 1
                cols[j] |= 1 << i
                x &= x - 1
        return BinMatrix(self.n_cols, self.n_rows, tuple(cols))

    def hstack(self, other: "BinMatrix") -> "BinMatrix":
        if self.n_rows != other.n_rows:
            raise ShapeError(f"hstack row mismatch {self.n_rows} vs {other.n_rows}")
        rows = tuple(a | (b << self.n_cols) for a, b in zip(self.rows, other.rows))
        return BinMatrix(self.n_rows, self.n_cols + other.n_cols, rows)

    def vstack(self, other: "BinMatrix") -> "BinMatrix":
        if self.n_cols != other.n_cols:
            raise ShapeError(f"vstack column mismatch {self.n_cols} vs {other.n_cols}")
        return BinMatrix(self.n_rows + other.n_rows, self.n_cols, self.rows + other.rows)

    def kron(self, other: "BinMatrix") -> "BinMatrix":
        """Kronecker product; shape (r1*r2) x (c1*c2)."""
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                acc = 0
                x = ra
                while x:
                    j = (x & -x).bit_length() - 1
                    acc |= rb << (j * other.n_cols)
                    x &= x - 1
                rows.append(acc)
        return BinMatrix(self.n_rows * other.n_rows, self.n_cols * other.n_cols, tuple(rows))

    # -- rank / kernel -----------------------------------------------------

    def rank(self) -> int:
        """Rank over GF(2); the input is never mutated."""
        red = RowReducer(self.n_cols)
        for r in self.rows:
            red.add(r)
        return len(red)

    def kernel_basis(self) -> "BinMatrix":
        """Basis of the right kernel {v : self @ v^T = 0}, one vector per row.

        Pivots are chosen leftmost-column first; basis vectors are emitted in
        ascending free-column order, so the result is deterministic.
        """
        pivots: list[int] = []
        echelon: list[int] = []
        for r in self.rows:
            v = r
            for col, prow in zip(pivots, echelon):
                if (v >> col) & 1:
                    v ^= prow
            if v:
                c = (v & -v).bit_length() - 1
                # back-substitute to keep the pivot column pure
                echelon = [e ^ v if (e >> c) & 1 else e for e in echelon]
                # keep pivot lists sorted by column
                k = 0
                while k < len(pivots) and pivots[k] < c:
                    k += 1
                pivots.insert(k, c)
                echelon.insert(k, v)
        pivot_set = set(pivots)
        basis = []
        for fc in range(self.n_cols):
            if fc in pivot_set:
                continue
            v = 1 << fc
            for col, prow in zip(pivots, echelon):
                if (prow >> fc) & 1:
                    v |= 1 << col
            basis.append(v)
        return BinMatrix(len(basis), self.n_cols, tuple(basis))

    def in_row_space(self, v: int, length: int | None = None) -> bool:
        """True iff v (int bit vector of n_cols bits) is a combination of rows."""
        if length is not None and length != self.n_cols:
            raise ShapeError(f"vector length {length} != n_cols {self.n_cols}")
        if v & ~_mask(self.n_cols):
            raise ShapeError("vector has bits beyond n_cols")
        red = RowReducer(self.n_cols)
        for r in self.rows:
            red.add(r)
        return red.reduce(v) == 0

    # -- debug serialization ------------------------------------------------

    def to_text(self) -> str:
        """Serialize as '<rows>x<cols>' header plus one hex row per line.

        Bit order inside the hex: the row int is encoded little-end first,
        i.e. hex digit 0 carries columns 0..3.
        """
        width = max((self.n_cols + 3) // 4, 1)
        lines = [f"{self.n_rows}x{self.n_cols}"]
        for r in self.rows:
            lines.append(format(r, f"0{width}x")[::-1])
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "BinMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines()]
        n_rows, n_cols = (int(p) for p in lines[0].split("x"))
        rows = tuple(int(ln[::-1], 16) for ln in lines[1 : 1 + n_rows])
        return cls(n_rows, n_cols, rows)

    def __str__(self) -> str:
        return "\n".join(
            "".join("1" if (r >> j) & 1 else "." for j in range(self.n_cols)) for r in self.rows
        )


class RowReducer:
    """Incremental row-echelon form for rank and membership queries.

    Each stored row has its lowest set bit at a distinct pivot column, which
    makes ``reduce`` a loop over set bits instead of a full elimination.
    """

    def __init__(self, n_cols: int, rows: Iterable[int] = ()) -> None:
        self.n_cols = n_cols
        self._pivot_rows: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def __len__(self) -> int:
        return len(self._pivot_rows)

    def reduce(self, v: int) -> int:
        """Residual of v after elimination against the stored rows."""
        pr = self._pivot_rows
        while v:
            c = (v & -v).bit_length() - 1
            row = pr.get(c)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> int:
        """Insert v; returns its residual (0 if it was already in the span)."""
        v = self.reduce(v)
        if v:
            self._pivot_rows[(v & -v).bit_length() - 1] = v
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def basis_rows(self) -> list[int]:
        """Current echelon rows, ascending by pivot column."""
        return [row for _, row in sorted(self._pivot_rows.items())]


class RowBasis:
    """Row reducer that tracks how each pivot was formed from the inserted rows.

    ``express`` returns the combination of originally inserted rows that
    produces a target vector, as a bitmask over insertion indices.
    """

    def __init__(self, n_cols: int) -> None:
        self.n_cols = n_cols
        self._pivot_rows: dict[int, tuple[int, int]] = {}  # col -> (row, combo)
        self._count = 0

    def add(self, v: int) -> None:
        combo = 1 << self._count
        self._count += 1
        pr = self._pivot_rows
        while v:
            c = (v & -v).bit_length() - 1
            hit = pr.get(c)
            if hit is None:
                pr[c] = (v, combo)
                return
            v ^= hit[0]
            combo ^= hit[1]

    def express(self, v: int) -> int | None:
        """Combination mask over inserted rows reproducing v, or None."""
        combo = 0
        pr = self._pivot_rows
        while v:
            c = (v & -v).bit_length() - 1
            hit = pr.get(c)
            if hit is None:
                return None
            v ^= hit[0]
            combo ^= hit[1]
        return combo


def iter_bits(v: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while v:
        yield (v & -v).bit_length() - 1
        v &= v - 1
