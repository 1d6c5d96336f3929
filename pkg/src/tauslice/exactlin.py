"""Exact linear algebra over the rationals and prime fields.

Everything downstream (path algebra arithmetic, Hom spaces, AR translates)
reduces to row reduction of smallish dense matrices, so this module keeps a
deliberately plain implementation: immutable matrices, fraction/int entries,
deterministic leftmost-pivot elimination.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(TypeError):
    """Raised when elements of different fields are mixed."""


class Field:
    """Base class for the two supported exact fields."""

    characteristic: int

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero()

    def parse(self, text: str):
        """Parse an element from its decimal / p/q string form."""
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)


class RationalField(Field):
    characteristic = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def parse(self, text):
        return Fraction(text)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """GF(p) with elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"denominator divisible by {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.parse(x)
        raise FieldError(f"cannot coerce {x!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def parse(self, text):
        return self.coerce(Fraction(text))

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


class Matrix:
    """Immutable dense matrix over a fixed :class:`Field`.

    Rows are tuples of field elements; ``m[i][j]`` is row i, column j.
    A matrix representing a linear map k^c -> k^r has shape (r, c) and acts
    on column vectors.
    """

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        self.field = field
        rows = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        self.nrows = len(rows)
        if rows:
            self.ncols = len(rows[0])
            if any(len(r) != self.ncols for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols mismatch")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            self.ncols = ncols
        self.rows = rows
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, [[z] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @staticmethod
    def from_rows(field: Field, rows, ncols: int | None = None) -> "Matrix":
        return Matrix(field, rows, ncols)

    @staticmethod
    def column(field: Field, entries) -> "Matrix":
        return Matrix(field, [[x] for x in entries], 1)

    # -- basic protocol ----------------------------------------------

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nrows, self.ncols, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in row) for row in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for row in self.rows for x in row)

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldError(f"field mismatch: {self.field!r} vs {other.field!r}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        f = self.field
        return Matrix(
            f,
            [
                [f.add(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(self.field.coerce(-1))

    def __neg__(self) -> "Matrix":
        return self.scale(self.field.coerce(-1))

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(f, [[f.mul(c, x) for x in row] for row in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        f = self.field
        z = f.zero()
        ocols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for row in self.rows:
            new = []
            for col in ocols:
                acc = z
                for a, b in zip(row, col):
                    if a != z and b != z:
                        acc = f.add(acc, f.mul(a, b))
                new.append(acc)
            out.append(new)
        if not out:
            return Matrix.zero(f, 0, other.ncols)
        return Matrix(f, out, other.ncols)

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix.zero(self.field, self.ncols, 0)
        return Matrix(self.field, list(zip(*self.rows)), self.nrows)

    # -- block operations --------------------------------------------

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(
            self.field,
            [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
            self.ncols + other.ncols,
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    @staticmethod
    def block_diagonal(field: Field, blocks) -> "Matrix":
        blocks = list(blocks)
        nr = sum(b.nrows for b in blocks)
        nc = sum(b.ncols for b in blocks)
        out = [[field.zero()] * nc for _ in range(nr)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                for j, x in enumerate(row):
                    out[r0 + i][c0 + j] = x
            r0 += b.nrows
            c0 += b.ncols
        return Matrix(field, out, nc)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return Matrix(
            self.field,
            [[self.rows[i][j] for j in col_idx] for i in row_idx],
            len(col_idx),
        )

    def column_vector(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def flatten(self) -> tuple:
        """Row-major vectorisation."""
        return tuple(x for row in self.rows for x in row)

    # -- elimination --------------------------------------------------

    def rref(self):
        """Reduced row echelon form.

        Returns ``(R, pivots)`` where pivots are the pivot column indices in
        increasing order.  Pivoting is deterministic: for each column, the
        first row (top to bottom) with a nonzero entry is used.
        """
        f = self.field
        z = f.zero()
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r >= len(rows):
                break
            pr = None
            for i in range(r, len(rows)):
                if rows[i][c] != z:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = f.inv(rows[r][c])
            rows[r] = [f.mul(inv, x) for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != z:
                    factor = rows[i][c]
                    rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(f, rows, self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list:
        """Basis of the right kernel {v : self @ v = 0}.

        Returns a list of column matrices (shape (ncols, 1)), one per free
        column of the rref, in increasing free-column order.  Each basis
        vector has a 1 in its free coordinate.
        """
        f = self.field
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivset]
        basis = []
        for fc in free:
            v = [f.zero()] * self.ncols
            v[fc] = f.one()
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(R.rows[r][fc])
            basis.append(Matrix.column(f, v))
        return basis

    def solve(self, b: "Matrix"):
        """Solve ``self @ x = b`` for a matrix ``x`` (free variables set to 0).

        Returns the solution matrix, or ``None`` when the system is
        inconsistent.
        """
        self._check_field(b)
        if b.nrows != self.nrows:
            raise ValueError("right-hand side has wrong number of rows")
        f = self.field
        z = f.zero()
        aug = self.hstack(b)
        R, pivots = aug.rref()
        n = self.ncols
        for r in range(R.nrows):
            if all(R.rows[r][c] == z for c in range(n)) and any(
                R.rows[r][c] != z for c in range(n, R.ncols)
            ):
                return None
        sol = [[z] * b.ncols for _ in range(n)]
        for r, pc in enumerate(pivots):
            if pc >= n:
                return None  # pivot in the augmented block: inconsistent
            for k in range(b.ncols):
                sol[pc][k] = R.rows[r][n + k]
        return Matrix(f, sol, b.ncols)

    def inverse(self):
        """Inverse of a square matrix, or ``None`` if singular."""
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        sol = self.solve(Matrix.identity(self.field, self.nrows))
        if sol is None or (self @ sol) != Matrix.identity(self.field, self.nrows):
            return None
        return sol


# -- subspace helpers -------------------------------------------------
#
# Subspaces of k^n are handled as row spans.  All functions return
# echelonised bases so identical subspaces give identical output.


def row_space_basis(m: Matrix) -> list:
    """Echelonised basis of the row space, as row tuples."""
    R, pivots = m.rref()
    return [R.rows[i] for i in range(len(pivots))]


def span_matrix(field: Field, vectors, n: int) -> Matrix:
    """Matrix whose rows are an echelonised basis of span(vectors) in k^n."""
    rows = [tuple(v) for v in vectors]
    if not rows:
        return Matrix.zero(field, 0, n)
    basis = row_space_basis(Matrix(field, rows, n))
    if not basis:
        return Matrix.zero(field, 0, n)
    return Matrix(field, basis, n)


def in_span(span: Matrix, vector) -> bool:
    """Whether ``vector`` (length span.ncols) lies in the row span."""
    v = Matrix(span.field, [vector], span.ncols)
    return span.transpose().solve(v.transpose()) is not None


def coordinates_in_basis(basis: Matrix, vector):
    """Coefficients expressing ``vector`` in the rows of ``basis`` (or None)."""
    v = Matrix(basis.field, [vector], basis.ncols)
    sol = basis.transpose().solve(v.transpose())
    if sol is None:
        return None
    return tuple(sol.rows[i][0] for i in range(sol.nrows))


def complement_basis(span: Matrix) -> list:
    """Standard-vector completion of a row span to all of k^n.

    Deterministically picks those standard basis vectors e_i that are
    independent from ``span``, scanning i = 0, 1, ....  Returns row tuples.
    """
    f = span.field
    n = span.ncols
    current = [list(r) for r in row_space_basis(span)]
    rank = len(current)
    out = []
    for i in range(n):
        if rank == n:
            break
        e = [f.zero()] * n
        e[i] = f.one()
        cand = Matrix(f, current + [e], n)
        if cand.rank() > rank:
            current.append(e)
            rank += 1
            out.append(tuple(e))
    return out


def intersect_row_spaces(a: Matrix, b: Matrix) -> Matrix:
    """Row-span intersection via the kernel of the stacked system."""
    f = a.field
    if a.ncols != b.ncols:
        raise ValueError("ambient dimension mismatch")
    if a.nrows == 0 or b.nrows == 0:
        return Matrix.zero(f, 0, a.ncols)
    # Solve x*a = y*b: kernel of [a^T | -b^T] acting on (x, y).
    stacked = a.transpose().hstack(b.transpose().scale(f.coerce(-1)))
    vecs = []
    for k in stacked.kernel_basis():
        coeffs = [k.rows[i][0] for i in range(a.nrows)]
        vec = [f.zero()] * a.ncols
        for c, row in zip(coeffs, a.rows):
            if c != f.zero():
                vec = [f.add(v, f.mul(c, x)) for v, x in zip(vec, row)]
        vecs.append(vec)
    return span_matrix(f, vecs, a.ncols)
