"""Dense exact matrices over Q or Q(i).

Matrices are immutable.  Vectors are columns and maps act by left
multiplication.  Zero-dimensional matrices (0 rows and/or 0 columns) are
legal and represent maps to or from the zero space; products with an empty
inner dimension follow the empty-sum convention and come out zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FieldMismatchError,
    InconsistentSystemError,
    NotInvertibleError,
    ShapeError,
)


class Matrix:
    __slots__ = ("field", "rows", "cols", "_e")

    def __init__(self, field, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative shape {rows}x{cols}")
        coerce = field.coerce
        e = tuple(coerce(x) for x in entries)
        if len(e) != rows * cols:
            raise ShapeError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(e)}"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_e", e)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows, cols: int | None = None) -> "Matrix":
        """Build from a list of row lists; ``cols`` disambiguates 0-row shapes."""
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeError("ragged rows")
        else:
            width = 0 if cols is None else cols
        if cols is not None and width != cols:
            raise ShapeError(f"rows have width {width}, expected {cols}")
        flat = [x for r in rows for x in r]
        return cls(field, len(rows), width, flat)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "Matrix":
        zero = field.zero()
        return cls(field, rows, cols, [zero] * (rows * cols))

    @classmethod
    def column(cls, field, entries) -> "Matrix":
        entries = list(entries)
        return cls(field, len(entries), 1, entries)

    @classmethod
    def hstack(cls, field, blocks, rows: int | None = None) -> "Matrix":
        """Concatenate matrices with equal row counts side by side."""
        blocks = list(blocks)
        if not blocks:
            if rows is None:
                raise ShapeError("hstack of no blocks needs an explicit row count")
            return cls.zeros(field, rows, 0)
        nrows = blocks[0].rows
        if any(b.rows != nrows for b in blocks):
            raise ShapeError("hstack blocks disagree on row count")
        if rows is not None and rows != nrows:
            raise ShapeError(f"hstack blocks have {nrows} rows, expected {rows}")
        out = []
        for i in range(nrows):
            for b in blocks:
                out.extend(b._e[i * b.cols:(i + 1) * b.cols])
        return cls(field, nrows, sum(b.cols for b in blocks), out)

    @classmethod
    def block_diag(cls, field, blocks) -> "Matrix":
        blocks = list(blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        zero = field.zero()
        out = [zero] * (rows * cols)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                base = (r0 + i) * cols + c0
                out[base:base + b.cols] = b._e[i * b.cols:(i + 1) * b.cols]
            r0 += b.rows
            c0 += b.cols
        return cls(field, rows, cols, out)

    # -- access ------------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) out of range for {self.shape_str()}")
        return self._e[i * self.cols + j]

    def row_list(self, i: int) -> list:
        return list(self._e[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list]:
        return [self.row_list(i) for i in range(self.rows)]

    def column_matrix(self, j: int) -> "Matrix":
        return Matrix(self.field, self.rows, 1, [self._e[i * self.cols + j] for i in range(self.rows)])

    def select_columns(self, indices) -> "Matrix":
        idx = list(indices)
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.extend(self._e[base + j] for j in idx)
        return Matrix(self.field, self.rows, len(idx), out)

    def shape_str(self) -> str:
        return f"{self.rows}x{self.cols}"

    def is_zero(self) -> bool:
        return not any(self._e)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field is other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.to_rows()!r})"

    # -- arithmetic ---------------------------------------------------------

    def _check_field(self, other: "Matrix"):
        if self.field is not other.field:
            raise FieldMismatchError(
                f"mixed fields {self.field.name} and {other.field.name}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"cannot add {self.shape_str()} and {other.shape_str()}")
        return Matrix(self.field, self.rows, self.cols,
                      [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(f"cannot subtract {other.shape_str()} from {self.shape_str()}")
        return Matrix(self.field, self.rows, self.cols,
                      [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [-a for a in self._e])

    def scale(self, scalar) -> "Matrix":
        s = self.field.coerce(scalar)
        return Matrix(self.field, self.rows, self.cols, [s * a for a in self._e])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.shape_str()} by {other.shape_str()}"
            )
        n, m, p = self.rows, self.cols, other.cols
        a, b = self._e, other._e
        zero = self.field.zero()
        out = [zero] * (n * p)
        for i in range(n):
            abase = i * m
            obase = i * p
            for k in range(m):
                aik = a[abase + k]
                if not aik:
                    continue
                bbase = k * p
                for j in range(p):
                    bkj = b[bbase + j]
                    if bkj:
                        out[obase + j] = out[obase + j] + aik * bkj
        return Matrix(self.field, n, p, out)

    def transpose(self) -> "Matrix":
        out = []
        for j in range(self.cols):
            out.extend(self._e[i * self.cols + j] for i in range(self.rows))
        return Matrix(self.field, self.cols, self.rows, out)

    def power(self, k: int) -> "Matrix":
        if not self.is_square():
            raise ShapeError(f"power of non-square {self.shape_str()} matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    # -- elimination ---------------------------------------------------------

    def rref(self) -> "RrefResult":
        """Reduced row echelon form with an invertible left transform.

        Returns ``(reduced, pivot_cols, transform)`` with
        ``transform @ self == reduced`` exactly.  Pivots are chosen as the
        first nonzero entry scanning top to bottom; exact arithmetic needs
        no pivoting heuristics.
        """
        n, m = self.rows, self.cols
        rows = [self.row_list(i) for i in range(n)]
        one, zero = self.field.one(), self.field.zero()
        trans = [[one if i == j else zero for j in range(n)] for i in range(n)]
        pivots: list[int] = []
        r = 0
        for c in range(m):
            if r >= n:
                break
            src = next((i for i in range(r, n) if rows[i][c]), None)
            if src is None:
                continue
            if src != r:
                rows[r], rows[src] = rows[src], rows[r]
                trans[r], trans[src] = trans[src], trans[r]
            pivot = rows[r][c]
            if pivot != one:
                inv = one / pivot
                rows[r] = [inv * x for x in rows[r]]
                trans[r] = [inv * x for x in trans[r]]
            rr, tr = rows[r], trans[r]
            for i in range(n):
                if i == r:
                    continue
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], rr)]
                    trans[i] = [x - f * y for x, y in zip(trans[i], tr)]
            pivots.append(c)
            r += 1
        reduced = Matrix(self.field, n, m, [x for row in rows for x in row])
        transform = Matrix(self.field, n, n, [x for row in trans for x in row])
        return RrefResult(reduced, pivots, transform)

    def rank(self) -> int:
        """Number of pivots; forward elimination only."""
        n, m = self.rows, self.cols
        rows = [self.row_list(i) for i in range(n)]
        r = 0
        for c in range(m):
            if r >= n:
                break
            src = next((i for i in range(r, n) if rows[i][c]), None)
            if src is None:
                continue
            if src != r:
                rows[r], rows[src] = rows[src], rows[r]
            pivot = rows[r][c]
            for i in range(r + 1, n):
                f = rows[i][c]
                if f:
                    ratio = f / pivot
                    rows[i] = [x - ratio * y for x, y in zip(rows[i], rows[r])]
            r += 1
        return r

    def kernel_basis(self) -> "Matrix":
        """Columns form a basis of the null space; column count = cols - rank."""
        res = self.rref()
        pivots = res.pivot_cols
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        zero, one = self.field.zero(), self.field.one()
        cols = []
        for f in free:
            v = [zero] * self.cols
            v[f] = one
            for r, pc in enumerate(pivots):
                v[pc] = -res.reduced[r, f]
            cols.append(v)
        out = []
        for i in range(self.cols):
            out.extend(col[i] for col in cols)
        return Matrix(self.field, self.cols, len(free), out)

    def image_basis(self) -> "Matrix":
        """Pivot columns of the matrix itself; a basis of the column space."""
        return self.select_columns(self.rref().pivot_cols)

    def column_echelon_basis(self) -> "Matrix":
        """Echelonized basis of the column space (small, canonical entries)."""
        red = self.transpose().rref().reduced
        keep = [i for i in range(red.rows) if any(red.row_list(i))]
        if not keep:
            return Matrix.zeros(self.field, self.rows, 0)
        return red.transpose().select_columns(keep)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise NotInvertibleError(f"non-square {self.shape_str()} matrix")
        res = self.rref()
        if len(res.pivot_cols) != self.rows:
            raise NotInvertibleError(
                f"singular matrix of rank {len(res.pivot_cols)} < {self.rows}"
            )
        return res.transform

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def determinant(self):
        """Exact determinant by fraction elimination with swap sign tracking."""
        if not self.is_square():
            raise ShapeError(f"determinant of non-square {self.shape_str()} matrix")
        n = self.rows
        rows = [self.row_list(i) for i in range(n)]
        det = self.field.one()
        for c in range(n):
            src = next((i for i in range(c, n) if rows[i][c]), None)
            if src is None:
                return self.field.zero()
            if src != c:
                rows[c], rows[src] = rows[src], rows[c]
                det = -det
            pivot = rows[c][c]
            det = det * pivot
            for i in range(c + 1, n):
                f = rows[i][c]
                if f:
                    ratio = f / pivot
                    rows[i] = [x - ratio * y for x, y in zip(rows[i], rows[c])]
        return det


@dataclass(frozen=True)
class RrefResult:
    reduced: Matrix
    pivot_cols: list[int]
    transform: Matrix


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def solve_columns(basis: Matrix, targets: Matrix) -> Matrix:
    """Solve ``basis @ X = targets`` exactly for every target column.

    Raises InconsistentSystemError if some column is outside the span.
    """
    if basis.field is not targets.field:
        raise FieldMismatchError(
            f"mixed fields {basis.field.name} and {targets.field.name}"
        )
    if basis.rows != targets.rows:
        raise ShapeError(
            f"cannot solve {basis.shape_str()} against {targets.shape_str()}"
        )
    aug = Matrix.hstack(basis.field, [basis, targets], rows=basis.rows)
    res = aug.rref()
    pivots = res.pivot_cols
    if any(p >= basis.cols for p in pivots):
        raise InconsistentSystemError("target column outside the basis span")
    zero = basis.field.zero()
    out = [[zero] * targets.cols for _ in range(basis.cols)]
    for r, pc in enumerate(pivots):
        for j in range(targets.cols):
            out[pc][j] = res.reduced[r, basis.cols + j]
    return Matrix.from_rows(basis.field, out, cols=targets.cols)


def in_span(basis_vectors: list[Matrix], vector: Matrix) -> bool:
    """Membership of a column vector in the span of given column vectors."""
    if vector.is_zero():
        return True
    if not basis_vectors:
        return False
    field = vector.field
    b = Matrix.hstack(field, basis_vectors, rows=vector.rows)
    stacked = Matrix.hstack(field, [b, vector], rows=vector.rows)
    return b.rank() == stacked.rank()


def identity_like(m: Matrix) -> Matrix:
    return Matrix.identity(m.field, m.rows)
