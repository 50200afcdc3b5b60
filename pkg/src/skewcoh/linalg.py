"""Dense exact linear algebra: RREF, kernels, images, complements,
eigenspaces, and the subspace lattice.

Matrices are tuples of tuples of field scalars (see fields.Field) and are
immutable after construction.  Subspaces are stored by their reduced
row-echelon basis, so equal subspaces compare identically and every
downstream choice (complements, quotient coordinates, representative
bases) is deterministic.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .fields import Field, NotInvertibleError, Scalar

Vector = Tuple[Scalar, ...]


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Sequence], ncols: int | None = None):
        rs = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if rs:
            ncols = len(rs[0])
            for r in rs:
                if len(r) != ncols:
                    raise ValueError("ragged rows")
        elif ncols is None:
            raise ValueError("empty matrix needs explicit ncols")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "nrows", len(rs))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        return Matrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @staticmethod
    def zeros(field: Field, r: int, c: int) -> "Matrix":
        return Matrix(field, [[0] * c for _ in range(r)], ncols=c)

    @staticmethod
    def from_columns(field: Field, cols: Sequence[Sequence]) -> "Matrix":
        n = len(cols[0])
        return Matrix(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.ncols == other.ncols)

    def __hash__(self):
        return hash((self.field, self.rows, self.ncols))

    def __repr__(self):
        return "Matrix(%r, %d x %d)" % (self.field, self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __add__(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)], ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)], ncols=self.ncols)

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.neg(a) for a in r] for r in self.rows], ncols=self.ncols)

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(f, [[f.mul(c, a) for a in r] for r in self.rows], ncols=self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %dx%d @ %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        f = self.field
        out = []
        for r in self.rows:
            orow = []
            for j in range(other.ncols):
                s = f.zero()
                for k in range(self.ncols):
                    if r[k] != 0:
                        s = f.add(s, f.mul(r[k], other.rows[k][j]))
                orow.append(s)
            out.append(orow)
        return Matrix(f, out, ncols=other.ncols)

    def apply(self, v: Sequence) -> Vector:
        """Matrix times column vector, returned as a tuple."""
        f = self.field
        v = [f.coerce(x) for x in v]
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(
            _dot(f, r, v) for r in self.rows
        )

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], ncols=self.nrows)

    def stack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols)

    def augment(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols + other.ncols)

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("not square")
        aug = self.augment(Matrix.identity(self.field, n))
        red, piv = rref(aug)
        if list(piv[:n]) != list(range(n)) or len(piv) != n:
            raise NotInvertibleError("matrix is singular")
        return Matrix(self.field, [r[n:] for r in red.rows], ncols=n)

    def det(self) -> Scalar:
        n = self.nrows
        if n != self.ncols:
            raise ValueError("not square")
        f = self.field
        rows = [list(r) for r in self.rows]
        det = f.one()
        for c in range(n):
            piv = None
            for r in range(c, n):
                if rows[r][c] != 0:
                    piv = r
                    break
            if piv is None:
                return f.zero()
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = f.neg(det)
            det = f.mul(det, rows[c][c])
            inv = f.inv(rows[c][c])
            for r in range(c + 1, n):
                if rows[r][c] != 0:
                    factor = f.mul(rows[r][c], inv)
                    for j in range(c, n):
                        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[c][j]))
        return det


def _dot(f: Field, a: Sequence, b: Sequence) -> Scalar:
    s = f.zero()
    for x, y in zip(a, b):
        if x != 0 and y != 0:
            s = f.add(s, f.mul(x, y))
    return s


def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    f = m.field
    rows = [list(r) for r in m.rows]
    pivots: List[int] = []
    r = 0
    for c in range(m.ncols):
        pr = None
        for i in range(r, m.nrows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = f.inv(rows[r][c])
        rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(m.nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return Matrix(f, rows, ncols=m.ncols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class Subspace:
    """A subspace of F^n held by its RREF basis (rows = basis vectors)."""

    __slots__ = ("field", "ambient", "basis", "dim")

    def __init__(self, field: Field, ambient: int, spanning_rows: Iterable[Sequence] = ()):
        rows = list(spanning_rows)
        if rows:
            red, piv = rref(Matrix(field, rows, ncols=ambient))
            basis = Matrix(field, red.rows[:len(piv)], ncols=ambient)
        else:
            basis = Matrix(field, [], ncols=ambient)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "dim", basis.nrows)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient)

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, Matrix.identity(field, ambient).rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of F^%d)" % (self.dim, self.ambient)

    def basis_rows(self) -> Tuple[Vector, ...]:
        return self.basis.rows

    def contains(self, v: Sequence) -> bool:
        f = self.field
        v = [f.coerce(x) for x in v]
        # reduce v against the RREF basis
        _, piv = rref(self.basis)
        for brow, c in zip(self.basis.rows, piv):
            if v[c] != 0:
                factor = v[c]
                v = [f.sub(x, f.mul(factor, y)) for x, y in zip(v, brow)]
        return all(x == 0 for x in v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        return Subspace(self.field, self.ambient, self.basis.rows + other.basis.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        f = self.field
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(f, self.ambient)
        # solve a*U = b*W: kernel of [U^T | -W^T]
        ut = self.basis.transpose()
        wt = other.basis.transpose()
        sys = ut.augment(-wt)
        ker = kernel_basis(sys)
        vecs = []
        for k in ker.basis.rows:
            a = k[:self.dim]
            vecs.append(tuple(_dot(f, a, self.basis.col(j)) for j in range(self.ambient)))
        return Subspace(f, self.ambient, vecs)

    def complement(self) -> "Subspace":
        """Pivot-completion complement: standard basis vectors at non-pivot columns."""
        _, piv = rref(self.basis)
        pivset = set(piv)
        rows = []
        for j in range(self.ambient):
            if j not in pivset:
                rows.append([1 if k == j else 0 for k in range(self.ambient)])
        return Subspace(self.field, self.ambient, rows)

    def quotient_map(self) -> Matrix:
        """Coordinates on F^ambient / self, taken w.r.t. the pivot-completion
        complement: an (ambient - dim) x ambient matrix."""
        f = self.field
        comp = self.complement()
        cols = list(self.basis.rows) + list(comp.basis.rows)
        if len(cols) != self.ambient:
            raise ValueError("basis + complement do not span")
        p = Matrix.from_columns(f, cols)
        pinv = p.inverse()
        return Matrix(f, pinv.rows[self.dim:], ncols=self.ambient)


def kernel_basis(m: Matrix) -> Subspace:
    """Solution space of m v = 0."""
    f = m.field
    red, piv = rref(m)
    pivset = set(piv)
    free = [j for j in range(m.ncols) if j not in pivset]
    rows = []
    for j in free:
        v = [f.zero()] * m.ncols
        v[j] = f.one()
        for r, c in enumerate(piv):
            v[c] = f.neg(red.rows[r][j])
        rows.append(v)
    return Subspace(f, m.ncols, rows)


def image_basis(m: Matrix) -> Subspace:
    """Column space of m."""
    return Subspace(m.field, m.nrows, [m.col(j) for j in range(m.ncols)])


def eigenspace(m: Matrix, c) -> Subspace:
    if m.nrows != m.ncols:
        raise ValueError("not square")
    f = m.field
    return kernel_basis(m - Matrix.identity(f, m.nrows).scale(f.coerce(c)))


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """One solution of m x = b, or None if inconsistent."""
    f = m.field
    bcol = Matrix(f, [[x] for x in b], ncols=1)
    red, piv = rref(m.augment(bcol))
    if m.ncols in piv:
        return None
    x = [f.zero()] * m.ncols
    for r, c in enumerate(piv):
        x[c] = red.rows[r][m.ncols]
    return tuple(x)


def char_poly(m: Matrix) -> Tuple[Scalar, ...]:
    """Coefficients (low to high) of det(x*I - m), by cofactor expansion
    over the polynomial ring.  Fine for the small n used here."""
    f = m.field
    n = m.nrows
    if n != m.ncols:
        raise ValueError("not square")

    def padd(a, b):
        la, lb = len(a), len(b)
        return tuple(f.add(a[i] if i < la else f.zero(), b[i] if i < lb else f.zero())
                     for i in range(max(la, lb)))

    def pmul(a, b):
        out = [f.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y != 0:
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
        return tuple(out)

    def pneg(a):
        return tuple(f.neg(x) for x in a)

    # entries of x*I - m as polynomials
    ent = [[(f.neg(m.rows[i][j]), f.one()) if i == j else (f.neg(m.rows[i][j]),)
            for j in range(n)] for i in range(n)]

    def pdet(rows_idx, cols_idx):
        k = len(rows_idx)
        if k == 1:
            return ent[rows_idx[0]][cols_idx[0]]
        total = (f.zero(),)
        i = rows_idx[0]
        rest = rows_idx[1:]
        for s, j in enumerate(cols_idx):
            sub = pdet(rest, cols_idx[:s] + cols_idx[s + 1:])
            term = pmul(ent[i][j], sub)
            total = padd(total, term if s % 2 == 0 else pneg(term))
        return total

    poly = pdet(tuple(range(n)), tuple(range(n)))
    # pad to degree n
    poly = poly + (f.zero(),) * (n + 1 - len(poly))
    return poly


def poly_splits(field: Field, coeffs: Sequence[Scalar]) -> bool:
    """Whether the monic polynomial with the given coefficients factors into
    linear factors over the field.  Over F_p every element is tried; over Q
    only +-1 need checking here (callers only pass characteristic polynomials
    of finite-order matrices, whose rational eigenvalues are +-1)."""
    f = field
    coeffs = [f.coerce(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    candidates = list(f.elements()) if f.kind == "prime" else [f.coerce(1), f.coerce(-1)]
    for root in candidates:
        while len(coeffs) > 1:
            # synthetic division by (x - root), coefficients low to high
            quot = [f.zero()] * (len(coeffs) - 1)
            quot[-1] = coeffs[-1]
            for i in range(len(coeffs) - 2, 0, -1):
                quot[i - 1] = f.add(coeffs[i], f.mul(root, quot[i]))
            remainder = f.add(coeffs[0], f.mul(root, quot[0]))
            if remainder == 0:
                coeffs = quot
            else:
                break
    return len(coeffs) == 1
