"""Exact dense linear algebra over the rationals or a prime field.

Everything downstream (module homomorphisms, radicals, flags, tilting
theory) reduces to row reduction of exact matrices, so this module is the
substrate of the whole package.  Matrices are dense lists of field
elements; rationals are `fractions.Fraction`, prime-field elements are
ints in [0, p).  All values are treated as immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class FieldError(ValueError):
    pass


class Rationals:
    """The field of rational numbers, with Fraction elements."""

    name = "Q"
    characteristic = 0

    def of(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """The prime field F_p; elements are ints reduced mod p."""

    characteristic = None

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"

    def of(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise FieldError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(den, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.of(Fraction(x))
        raise FieldError(f"cannot coerce {x!r} into F_{self.p}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def to_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()


def field_from_name(name):
    """Parse a field tag: "Q" or "Fp:<p>"."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name.split(":", 1)[1]))
    raise FieldError(f"unknown field {name!r}")


class Matrix:
    """Dense matrix over an exact field.

    Rows are stored as lists.  Instances are never mutated after they leave
    this module; row reduction results are cached on the instance.
    """

    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        self._rref = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(field, nrows, ncols):
        z = field.zero
        return Matrix(field, [[z] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(field, n):
        z, o = field.zero, field.one
        return Matrix(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @staticmethod
    def from_columns(field, cols, nrows=None):
        if not cols:
            if nrows is None:
                raise ValueError("nrows required for a matrix with no columns")
            return Matrix(field, [[] for _ in range(nrows)], 0)
        nrows = len(cols[0])
        return Matrix(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    # -- basic algebra --------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __add__(self, other):
        f = self.field
        return Matrix(
            f,
            [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other):
        f = self.field
        return Matrix(
            f,
            [[f.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self):
        f = self.field
        return Matrix(f, [[f.neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        f = self.field
        return Matrix(f, [[f.mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
        f = self.field
        zero = f.zero
        ocols = other.ncols
        out = [[zero] * ocols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, a in enumerate(row):
                if f.is_zero(a):
                    continue
                orow = other.rows[k]
                for j in range(ocols):
                    b = orow[j]
                    if not f.is_zero(b):
                        acc[j] = f.add(acc[j], f.mul(a, b))
        return Matrix(f, out, ocols)

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        f = self.field
        out = []
        for row in self.rows:
            s = f.zero
            for a, v in zip(row, vec):
                if not (f.is_zero(a) or f.is_zero(v)):
                    s = f.add(s, f.mul(a, v))
            out.append(s)
        return out

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def transpose(self):
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)], self.nrows)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def is_zero(self):
        f = self.field
        return all(f.is_zero(a) for r in self.rows for a in r)

    def __repr__(self):
        body = "; ".join(" ".join(self.field.to_str(a) for a in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    # -- elimination ----------------------------------------------------

    def rref(self):
        """Reduced row-echelon form.

        Returns (R, pivots) where pivots is the strictly increasing list of
        pivot columns.  Over Q the forward pass runs fraction-free on scaled
        integer rows; the reduced form is produced in one normalisation pass
        at the end, which keeps Fraction arithmetic off the hot path.
        """
        if self._rref is not None:
            return self._rref
        if isinstance(self.field, Rationals):
            res = self._rref_rational()
        else:
            res = self._rref_modular()
        self._rref = res
        return res

    def _rref_rational(self):
        # Scale every row to integers once, then eliminate with integer
        # cross-multiplication; gcd reduction keeps entries small.
        n, m = self.nrows, self.ncols
        rows = []
        for r in self.rows:
            den = 1
            for a in r:
                den = den * a.denominator // gcd(den, a.denominator)
            ir = [int(a * den) for a in r]
            g = 0
            for a in ir:
                g = gcd(g, a)
            if g > 1:
                ir = [a // g for a in ir]
            rows.append(ir)
        pivots = []
        piv_r = 0
        for col in range(m):
            sel = None
            for i in range(piv_r, n):
                if rows[i][col] != 0:
                    sel = i
                    break
            if sel is None:
                continue
            rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
            prow = rows[piv_r]
            p = prow[col]
            for i in range(piv_r + 1, n):
                ri = rows[i]
                a = ri[col]
                if a == 0:
                    continue
                g = gcd(p, a)
                cp, ca = p // g, a // g
                for j in range(col, m):
                    ri[j] = cp * ri[j] - ca * prow[j]
                g2 = 0
                for v in ri:
                    g2 = gcd(g2, v)
                if g2 > 1:
                    for j in range(m):
                        ri[j] //= g2
            pivots.append(col)
            piv_r += 1
        # Back-substitute upward, still over the integers.
        for k in range(len(pivots) - 1, -1, -1):
            col = pivots[k]
            prow = rows[k]
            p = prow[col]
            for i in range(k):
                ri = rows[i]
                a = ri[col]
                if a == 0:
                    continue
                g = gcd(p, a)
                cp, ca = p // g, a // g
                for j in range(m):
                    ri[j] = cp * ri[j] - ca * prow[j]
        out = []
        for k in range(n):
            if k < len(pivots):
                p = rows[k][pivots[k]]
                out.append([Fraction(v, p) for v in rows[k]])
            else:
                out.append([Fraction(0)] * m)
        R = Matrix(QQ, out, m)
        R._rref = (R, list(pivots))
        return (R, list(pivots))

    def _rref_modular(self):
        p = self.field.p
        n, m = self.nrows, self.ncols
        rows = [[a % p for a in r] for r in self.rows]
        pivots = []
        piv_r = 0
        for col in range(m):
            sel = None
            for i in range(piv_r, n):
                if rows[i][col] % p != 0:
                    sel = i
                    break
            if sel is None:
                continue
            rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
            inv = pow(rows[piv_r][col], -1, p)
            rows[piv_r] = [(v * inv) % p for v in rows[piv_r]]
            prow = rows[piv_r]
            for i in range(n):
                if i == piv_r:
                    continue
                a = rows[i][col]
                if a:
                    ri = rows[i]
                    for j in range(col, m):
                        ri[j] = (ri[j] - a * prow[j]) % p
            pivots.append(col)
            piv_r += 1
        R = Matrix(self.field, rows, m)
        R._rref = (R, list(pivots))
        return (R, list(pivots))

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Basis of the right null space, as the columns of a matrix."""
        R, pivots = self.rref()
        f = self.field
        free = [j for j in range(self.ncols) if j not in pivots]
        cols = []
        for j in free:
            v = [f.zero] * self.ncols
            v[j] = f.one
            for k, pc in enumerate(pivots):
                v[pc] = f.neg(R.rows[k][j])
            cols.append(v)
        return Matrix.from_columns(f, cols, nrows=self.ncols)

    def solve(self, rhs):
        """Solve self * x = rhs column by column; None if inconsistent."""
        if rhs.nrows != self.nrows:
            raise ValueError("row count mismatch in solve")
        aug = self.hstack(rhs)
        R, pivots = aug.rref()
        f = self.field
        n = self.ncols
        if any(pc >= n for pc in pivots):
            return None
        cols = []
        for j in range(rhs.ncols):
            x = [f.zero] * n
            for k, pc in enumerate(pivots):
                x[pc] = R.rows[k][n + j]
            cols.append(x)
        return Matrix.from_columns(f, cols, nrows=n)

    def column_space_basis(self):
        """Columns of self giving a basis of its column space."""
        _, pivots = self.rref()
        return Matrix.from_columns(self.field, [self.column(j) for j in pivots], nrows=self.nrows)

    def row_space_rref(self):
        """The nonzero rows of the rref: a canonical basis of the row space."""
        R, pivots = self.rref()
        return Matrix(self.field, [R.rows[k] for k in range(len(pivots))], self.ncols)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("det of a non-square matrix")
        f = self.field
        n = self.nrows
        if n == 0:
            return f.one
        rows = [list(r) for r in self.rows]
        det = f.one
        for col in range(n):
            sel = None
            for i in range(col, n):
                if not f.is_zero(rows[i][col]):
                    sel = i
                    break
            if sel is None:
                return f.zero
            if sel != col:
                rows[col], rows[sel] = rows[sel], rows[col]
                det = f.neg(det)
            piv = rows[col][col]
            det = f.mul(det, piv)
            inv = f.inv(piv)
            for i in range(col + 1, n):
                a = rows[i][col]
                if f.is_zero(a):
                    continue
                c = f.mul(a, inv)
                ri = rows[i]
                prow = rows[col]
                for j in range(col, n):
                    ri[j] = f.sub(ri[j], f.mul(c, prow[j]))
        return det

    def inverse(self):
        inv = self.solve(Matrix.identity(self.field, self.nrows))
        if inv is None or self.nrows != self.ncols or self.rank() != self.nrows:
            raise ValueError("matrix is not invertible")
        return inv

    def is_invertible(self):
        return self.nrows == self.ncols and not self.field.is_zero(self.det())


def span_rref(field, vectors, length):
    """Canonical (rref) basis, as rows, of the span of the given vectors."""
    if not vectors:
        return Matrix(field, [], length)
    return Matrix(field, [list(v) for v in vectors], length).row_space_rref()


def vector_in_span(span_rows, vec):
    """Membership test against a row-space rref produced by span_rref."""
    f = span_rows.field
    v = list(vec)
    # pivot of each rref row
    for row in span_rows.rows:
        lead = next((j for j, a in enumerate(row) if not f.is_zero(a)), None)
        if lead is None:
            continue
        c = v[lead]
        if not f.is_zero(c):
            for j in range(len(v)):
                v[j] = f.sub(v[j], f.mul(c, row[j]))
    return all(f.is_zero(a) for a in v)
