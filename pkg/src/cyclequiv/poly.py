"""Univariate polynomials over the field and matrix similarity.

Two square matrices over the same field are similar exactly when the
characteristic matrices ``x*I - A`` and ``x*I - B`` have the same invariant
factors, so the similarity decision reduces to a Smith normal form
computation over the polynomial ring.
"""

from __future__ import annotations

import random

from .errors import FieldMismatchError, InternalInvariantError, ShapeError
from .matrix import Matrix


class Poly:
    """Polynomial with exact field coefficients, lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one()])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero(), field.one()])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero()
        a = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [zero] * (n - len(other.coeffs))
        return Poly(self.field, [x + y for x, y in zip(a, b)])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, scalar) -> "Poly":
        s = self.field.coerce(scalar)
        return Poly(self.field, [s * c for c in self.coeffs])

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.field), self
        zero = self.field.zero()
        rem = list(self.coeffs)
        quo = [zero] * (self.degree - other.degree + 1)
        lead = other.leading()
        for shift in range(len(quo) - 1, -1, -1):
            c = rem[shift + other.degree]
            if not c:
                continue
            q = c / lead
            quo[shift] = q
            for k, oc in enumerate(other.coeffs):
                rem[shift + k] = rem[shift + k] - q * oc
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == self.field.one():
            return self
        return Poly(self.field, [c / lead for c in self.coeffs])

    def evaluate(self, point):
        x = self.field.coerce(point)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def pretty(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                term = f"{c}"
            else:
                xk = var if k == 1 else f"{var}^{k}"
                term = xk if c == self.field.one() else (
                    f"-{xk}" if c == -self.field.one() else f"{c}*{xk}"
                )
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                text += " - " + term[1:]
            else:
                text += " + " + term
        return text

    def __repr__(self):
        return f"Poly({self.pretty()!r})"


def characteristic_matrix(a: Matrix) -> list[list[Poly]]:
    """The polynomial matrix ``x*I - A`` as row lists."""
    if not a.is_square():
        raise ShapeError(f"characteristic matrix of non-square {a.shape_str()}")
    field = a.field
    n = a.rows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Poly(field, [-a[i, j], field.one()]))
            else:
                row.append(Poly(field, [-a[i, j]]))
        out.append(row)
    return out


def _min_degree_entry(m, r):
    best = None
    for i in range(r, len(m)):
        for j in range(r, len(m[0])):
            p = m[i][j]
            if p and (best is None or p.degree < best[0]):
                best = (p.degree, i, j)
                if p.degree == 0:
                    return best
    return best


def _smith_diagonal(m: list[list[Poly]]) -> list[Poly]:
    """Diagonalize a polynomial matrix by row/column operations (in place).

    Pivoting picks the nonzero entry of minimal degree; reduction by
    polynomial division strictly shrinks that degree whenever a remainder
    appears, so the loop terminates.  The divisibility sweep folds offending
    rows into the pivot row until each diagonal entry divides the next.
    """
    if not m or not m[0]:
        return []
    nrows, ncols = len(m), len(m[0])
    diag = []
    for r in range(min(nrows, ncols)):
        while True:
            best = _min_degree_entry(m, r)
            if best is None:
                return diag
            _, pi, pj = best
            if pi != r:
                m[r], m[pi] = m[pi], m[r]
            if pj != r:
                for row in m:
                    row[r], row[pj] = row[pj], row[r]
            pivot = m[r][r]
            dirty = False
            for i in range(r + 1, nrows):
                if m[i][r]:
                    q = m[i][r] // pivot
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][r]:
                        dirty = True
            for j in range(r + 1, ncols):
                if m[r][j]:
                    q = m[r][j] // pivot
                    for row in m:
                        row[j] = row[j] - q * row[r]
                    if m[r][j]:
                        dirty = True
            if dirty:
                continue
            offender = None
            for i in range(r + 1, nrows):
                for j in range(r + 1, ncols):
                    if m[i][j] and not (m[i][j] % pivot).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            m[r] = [a + b for a, b in zip(m[r], m[offender])]
        diag.append(m[r][r].monic())
    return diag


def invariant_factors(a: Matrix) -> list[Poly]:
    """Nontrivial invariant factors of ``x*I - A``, monic, each dividing the next."""
    m = characteristic_matrix(a)
    diag = _smith_diagonal(m)
    return [d for d in diag if d.degree >= 1]


def poly_smith(a: Matrix) -> list[Poly]:
    """Alias of invariant_factors; input is the matrix A, not x*I - A."""
    return invariant_factors(a)


def are_similar(a: Matrix, b: Matrix) -> bool:
    """Exact similarity over the base field via invariant factor lists."""
    if not a.is_square() or not b.is_square():
        raise ShapeError("similarity is defined for square matrices")
    if a.field is not b.field:
        raise FieldMismatchError(
            f"mixed fields {a.field.name} and {b.field.name}"
        )
    if a.rows != b.rows:
        return False
    return invariant_factors(a) == invariant_factors(b)


def _intertwiner_space(a: Matrix, b: Matrix) -> list[Matrix]:
    """Basis of ``{S : S @ A == B @ S}`` as a list of n x n matrices."""
    field = a.field
    n = a.rows
    zero = field.zero()
    # Row (i, j): the (i, j) entry of S@A - B@S; unknown vec index u*n + v.
    sys_rows = []
    for i in range(n):
        for j in range(n):
            row = [zero] * (n * n)
            for v in range(n):
                row[i * n + v] = row[i * n + v] + a[v, j]
            for u in range(n):
                row[u * n + j] = row[u * n + j] - b[i, u]
            sys_rows.append(row)
    system = Matrix.from_rows(field, sys_rows, cols=n * n)
    kernel = system.kernel_basis()
    basis = []
    for c in range(kernel.cols):
        entries = [kernel[k, c] for k in range(n * n)]
        basis.append(Matrix(field, n, n, entries))
    return basis


def similarity_witness(a: Matrix, b: Matrix, seed: int = 0) -> Matrix:
    """An explicit invertible S with ``S @ A == B @ S``.

    Invertible intertwiners are dense among all intertwiners once the
    matrices are similar, so a seeded random combination of the intertwiner
    space hits one almost immediately; the result is checked exactly.
    """
    if not are_similar(a, b):
        raise ValueError("matrices are not similar; no witness exists")
    field = a.field
    n = a.rows
    if n == 0:
        return Matrix.identity(field, 0)
    basis = _intertwiner_space(a, b)
    rng = random.Random(seed)
    bound = 3
    for attempt in range(200):
        if attempt and attempt % 10 == 0:
            bound += 2
        coeffs = [rng.randint(-bound, bound) for _ in basis]
        s = Matrix.zeros(field, n, n)
        for c, base in zip(coeffs, basis):
            if c:
                s = s + base.scale(c)
        if s.is_invertible():
            if (s @ a) != (b @ s):
                raise NotInvertibleError("intertwiner space is corrupt")
            return s
    raise NotInvertibleError(
        "no invertible intertwiner found; matrices may not be similar"
    )
