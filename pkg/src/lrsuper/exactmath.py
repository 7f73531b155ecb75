"""Exact arithmetic over the Gaussian rationals Q(i).

Scalars are pairs of Fractions.  Linear algebra is done by sparse
Gauss-Jordan elimination with a deterministic pivot rule (first nonzero
column), so reduced row echelon forms, nullspace bases and particular
solutions are reproducible.
"""

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Scalar", "ZERO", "ONE", "I", "as_scalar", "parse_scalar",
    "Matrix", "rank", "nullspace", "solve", "rref",
    "RowReducer", "SparseTensor3",
]


class Scalar:
    """Gaussian rational re + im*i, immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("cannot combine a Scalar real part with an imaginary part")
            re, im = re.re, re.im
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.re, self.im))

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.im and not other.im:
            return Scalar(self.re * other.re)
        return Scalar(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self):
        if not self:
            raise ZeroDivisionError("division by zero in Q(i)")
        if not self.im:
            return Scalar(1 / self.re)
        n = self.re * self.re + self.im * self.im
        return Scalar(self.re / n, -self.im / n)

    def conjugate(self):
        return Scalar(self.re, -self.im)

    # comparison

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self):
        return not self.im

    # text

    def __repr__(self):
        return "Scalar(%s)" % self

    def __str__(self):
        if not self.im:
            return _frac_str(self.re)
        if self.im == 1:
            im = "i"
        elif self.im == -1:
            im = "-i"
        else:
            im = _frac_str(self.im) + "i"
        if not self.re:
            return im
        if not im.startswith("-"):
            im = "+" + im
        return _frac_str(self.re) + im

    def to_pair(self):
        """Serialized form: two strings "a/b" for real and imaginary parts."""
        return ["%d/%d" % (self.re.numerator, self.re.denominator),
                "%d/%d" % (self.im.numerator, self.im.denominator)]

    @classmethod
    def from_pair(cls, re, im="0/1"):
        return cls(Fraction(str(re)), Fraction(str(im)))


def _frac_str(x):
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar(x)
    return NotImplemented


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(x):
    """Coerce int, Fraction, str or Scalar to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError("not an exact scalar: %r" % (x,))
    return out


_NUM = r"[+-]?\d+(?:/\d+)?"


def parse_scalar(text):
    """Parse "a/b", "a/b+c/d i", "i", "-2i", "1/2-3/4i" and similar forms."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty scalar")
    try:
        if not s.endswith("i"):
            if not re.fullmatch(_NUM, s):
                raise ValueError
            return Scalar(Fraction(s))
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "", body
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        elif re.fullmatch(_NUM, im_part):
            im = Fraction(im_part)
        else:
            raise ValueError
        if re_part and not re.fullmatch(_NUM, re_part):
            raise ValueError
        return Scalar(Fraction(re_part) if re_part else 0, im)
    except (ValueError, ZeroDivisionError):
        raise ValueError("malformed scalar: %r" % text) from None


# ---------------------------------------------------------------- matrices

class Matrix:
    """Dense matrix of Scalars stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data, cols=None):
        data = [[as_scalar(x) for x in row] for row in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self.entries = tuple(tuple(row) for row in data)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, rows):
        return cls([[col[i] for col in columns] for i in range(rows)], len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return "Matrix(%dx%d)" % (self.rows, self.cols)

    def sparse_rows(self):
        return [{j: x for j, x in enumerate(row) if x} for row in self.entries]

    def column(self, j):
        return [row[j] for row in self.entries]

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch %r @ %r" % (self, other))
        out = []
        for row in self.entries:
            nz = [(k, x) for k, x in enumerate(row) if x]
            out.append([sum((x * other.entries[k][j] for k, x in nz), ZERO)
                        for j in range(other.cols)])
        return Matrix(out, other.cols)

    __matmul__ = matmul

    def apply(self, v):
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        return [sum((x * v[j] for j, x in enumerate(row) if x), ZERO)
                for row in self.entries]

    def is_zero(self):
        return not any(x for row in self.entries for x in row)


def _as_sparse_rows(M):
    if isinstance(M, Matrix):
        return M.sparse_rows(), M.cols
    rows = [[as_scalar(x) for x in r] for r in M]
    cols = len(rows[0]) if rows else 0
    return [{j: x for j, x in enumerate(r) if x} for r in rows], cols


class RowReducer:
    """Incremental sparse Gauss-Jordan elimination.

    Rows are dicts column -> Scalar.  The reduced rows are kept in fully
    reduced echelon form, so the result is the (unique) RREF of the row
    space no matter the insertion order.
    """

    def __init__(self):
        self.pivots = {}   # pivot column -> normalized row

    def reduce(self, row):
        r = {c: as_scalar(x) for c, x in row.items() if x}
        for c in [c for c in r if c in self.pivots]:
            f = r.get(c)
            if not f:
                continue
            for k, x in self.pivots[c].items():
                v = r.get(k, ZERO) - f * x
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return r

    def add(self, row):
        """Insert a row; return True if it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        inv = r[c].inverse()
        r = {k: x * inv for k, x in r.items()}
        for p, prow in self.pivots.items():
            f = prow.get(c)
            if f:
                for k, x in r.items():
                    v = prow.get(k, ZERO) - f * x
                    if v:
                        prow[k] = v
                    else:
                        prow.pop(k, None)
        self.pivots[c] = r
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def contains(self, row):
        return not self.reduce(row)

    def echelon(self):
        return [self.pivots[c] for c in sorted(self.pivots)]

    def kernel_basis(self, ncols):
        """Basis of {x : row . x = 0 for all rows}, one vector per free column."""
        free = [j for j in range(ncols) if j not in self.pivots]
        basis = []
        for j in free:
            v = {j: ONE}
            for c, prow in self.pivots.items():
                x = prow.get(j)
                if x:
                    v[c] = -x
            basis.append(v)
        return free, basis


def _reducer(rows):
    red = RowReducer()
    for r in rows:
        red.add(r)
    return red


def rref(M):
    """Return (list of reduced rows as dense lists, pivot columns)."""
    rows, cols = _as_sparse_rows(M)
    red = _reducer(rows)
    piv = sorted(red.pivots)
    dense = [[red.pivots[c].get(j, ZERO) for j in range(cols)] for c in piv]
    return dense, piv


def rank(M):
    rows, _ = _as_sparse_rows(M)
    return _reducer(rows).rank


def nullspace(M):
    """Basis of ker M as dense lists; one vector per non-pivot column."""
    rows, cols = _as_sparse_rows(M)
    _, basis = _reducer(rows).kernel_basis(cols)
    return [[v.get(j, ZERO) for j in range(cols)] for v in basis]


def solve(M, b):
    """Some x with M x = b (free variables set to zero), or None."""
    rows, cols = _as_sparse_rows(M)
    if len(b) != len(rows):
        raise ValueError("right-hand side has wrong length")
    aug = []
    for r, bi in zip(rows, b):
        r = dict(r)
        bi = as_scalar(bi)
        if bi:
            r[cols] = bi
        aug.append(r)
    red = _reducer(aug)
    if cols in red.pivots:
        return None
    x = [ZERO] * cols
    for c, prow in red.pivots.items():
        x[c] = prow.get(cols, ZERO)
    return x


# ---------------------------------------------------------------- tensors

class SparseTensor3:
    """Sparse rank-3 array of Scalars; zeros are never stored."""

    __slots__ = ("dims", "_entries", "_fibers")

    def __init__(self, dims, entries=()):
        dims = tuple(int(d) for d in dims)
        if len(dims) != 3 or min(dims) < 0:
            raise ValueError("bad tensor dims %r" % (dims,))
        items = entries.items() if isinstance(entries, dict) else entries
        data = {}
        for key, x in items:
            i, j, k = key
            for idx, d in zip(key, dims):
                if not (isinstance(idx, int) and 0 <= idx < d):
                    raise ValueError("tensor index %r out of range for dims %r" % (key, dims))
            x = as_scalar(x)
            v = data.get((i, j, k), ZERO) + x
            if v:
                data[(i, j, k)] = v
            else:
                data.pop((i, j, k), None)
        self.dims = dims
        self._entries = dict(sorted(data.items()))
        fibers = {}
        for (i, j, k), x in self._entries.items():
            fibers.setdefault((i, j), {})[k] = x
        self._fibers = fibers

    def __getitem__(self, key):
        return self._entries.get(key, ZERO)

    def fiber(self, i, j):
        """Sparse vector k -> value of the (i, j) slice.  Do not mutate."""
        return self._fibers.get((i, j), _EMPTY)

    def items(self):
        return self._entries.items()

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return (isinstance(other, SparseTensor3) and self.dims == other.dims
                and self._entries == other._entries)

    def __hash__(self):
        return hash((self.dims, tuple(self._entries.items())))

    def __repr__(self):
        return "SparseTensor3(%r, %d nonzeros)" % (self.dims, len(self._entries))

    def to_json(self):
        return [[i, j, k] + x.to_pair() for (i, j, k), x in self._entries.items()]

    @classmethod
    def from_json(cls, dims, rows):
        entries = []
        for row in rows:
            if len(row) != 5:
                raise ValueError("tensor entry must be [i, j, k, re, im]: %r" % (row,))
            i, j, k, re_, im_ = row
            entries.append(((i, j, k), Scalar.from_pair(re_, im_)))
        return cls(dims, entries)


_EMPTY = {}
