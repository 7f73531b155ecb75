"""Super vector spaces, supercommutative algebras and Lie superalgebras.

Everything is given by structure constants over an ordered basis whose even
elements come first.  Vectors are handled internally as sparse dicts
``index -> Scalar``; the public ``multiply``/``bracket`` helpers accept
dense sequences.
"""

from .exactmath import ONE, ZERO, RowReducer, Scalar, SparseTensor3, as_scalar

__all__ = [
    "SuperBasis", "SuperAlgebra", "LieSuperAlgebra", "GradedLinearMap",
    "CheckReport", "multiply", "bracket",
    "check_supercommutative", "check_associative", "check_unital",
    "check_super_skew", "check_super_jacobi", "check_grading",
    "superderivations", "der_bracket", "leibniz_report",
    "axpy", "scale", "vec_str",
]


def sign(n):
    return -1 if n & 1 else 1


# ---------------------------------------------------------------- vectors

def axpy(acc, c, v):
    """acc += c * v for sparse vectors (acc mutated)."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def scale(c, v):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def dense(v, n):
    return [v.get(i, ZERO) for i in range(n)]


def sparse(v):
    return {i: as_scalar(x) for i, x in enumerate(v) if x}


def vec_str(v, names=None):
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        name = names[k] if names else "b%d" % k
        parts.append("(%s)%s" % (v[k], name))
    return " + ".join(parts)


class CheckReport:
    """Outcome of an axiom check: a list of violated identities.

    Each violation is a dict with at least ``identity`` and ``at`` (basis
    indices) plus a printable ``residual``.  Truthiness means "passed".
    """

    def __init__(self, name, violations=None, checked=0):
        self.name = name
        self.violations = list(violations or [])
        self.checked = checked

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, identity, at, residual):
        self.violations.append({"identity": identity, "at": list(at), "residual": residual})

    def extend(self, other):
        self.violations.extend(other.violations)
        self.checked += other.checked
        return self

    def to_json(self):
        return {"check": self.name, "ok": self.ok, "checked": self.checked,
                "violations": self.violations}

    def __repr__(self):
        return "CheckReport(%s, %s, %d violations)" % (
            self.name, "pass" if self.ok else "FAIL", len(self.violations))


# ---------------------------------------------------------------- bases

class SuperBasis:
    """Ordered basis labels with parities; even labels precede odd ones."""

    __slots__ = ("names", "parities")

    def __init__(self, labels):
        names, pars = [], []
        for name, p in labels:
            if p not in (0, 1):
                raise ValueError("parity must be 0 or 1, got %r for %r" % (p, name))
            names.append(str(name))
            pars.append(int(p))
        if len(set(names)) != len(names):
            raise ValueError("basis names must be unique")
        if any(a > b for a, b in zip(pars, pars[1:])):
            raise ValueError("even basis elements must be listed before odd ones")
        self.names = tuple(names)
        self.parities = tuple(pars)

    @classmethod
    def standard(cls, n_even, n_odd, letter="e"):
        return cls([("%s%d^0" % (letter, i + 1), 0) for i in range(n_even)]
                   + [("%s%d^1" % (letter, i + 1), 1) for i in range(n_odd)])

    @property
    def dim(self):
        return len(self.names)

    @property
    def dims(self):
        n = self.parities.count(0)
        return (n, len(self.parities) - n)

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError("unknown basis element %r" % name) from None

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, SuperBasis) and (self.names, self.parities) == (other.names, other.parities)

    def __hash__(self):
        return hash((self.names, self.parities))

    def __repr__(self):
        return "SuperBasis(%d|%d)" % self.dims

    def to_json(self):
        return [{"name": n, "parity": p} for n, p in zip(self.names, self.parities)]


def check_grading(basis_i, basis_j, basis_k, tensor, rule_offset=0):
    """Offending entries of a tensor breaking |k| = |i| + |j| + offset."""
    bad = []
    for (i, j, k), _ in tensor.items():
        if (basis_i.parities[i] + basis_j.parities[j] + rule_offset - basis_k.parities[k]) % 2:
            bad.append((i, j, k))
    return bad


# ---------------------------------------------------------------- algebras

class SuperAlgebra:
    """Associative superalgebra by structure constants e_i e_j = sum c_ij^k e_k."""

    def __init__(self, basis, product, unit_index=None, name=None):
        if not isinstance(product, SparseTensor3):
            product = SparseTensor3((basis.dim,) * 3, product)
        if product.dims != (basis.dim,) * 3:
            raise ValueError("product tensor dims %r do not match basis" % (product.dims,))
        bad = check_grading(basis, basis, basis, product)
        if bad:
            raise ValueError("product breaks the grading at %r" % (bad[0],))
        self.basis = basis
        self.product = product
        self.name = name
        self.unit_index = unit_index
        if unit_index is not None:
            if not 0 <= unit_index < basis.dim or basis.parities[unit_index]:
                raise ValueError("unit must be an even basis element")
            for j in range(basis.dim):
                e = {j: ONE}
                if product.fiber(unit_index, j) != e or product.fiber(j, unit_index) != e:
                    raise ValueError("basis element %s is not a two-sided unit" % basis.names[unit_index])

    @property
    def dim(self):
        return self.basis.dim

    @property
    def parities(self):
        return self.basis.parities

    def mul_basis(self, i, j):
        return self.product.fiber(i, j)

    def mul(self, u, v):
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                axpy(out, x * y, self.product.fiber(i, j))
        return out

    def __repr__(self):
        return "SuperAlgebra(%s, %d|%d)" % ((self.name or "?",) + self.basis.dims)


class LieSuperAlgebra:
    """Lie superalgebra by structure constants [f_i, f_j] = sum c_ij^k f_k."""

    def __init__(self, basis, bracket, name=None):
        if not isinstance(bracket, SparseTensor3):
            bracket = SparseTensor3((basis.dim,) * 3, bracket)
        if bracket.dims != (basis.dim,) * 3:
            raise ValueError("bracket tensor dims %r do not match basis" % (bracket.dims,))
        bad = check_grading(basis, basis, basis, bracket)
        if bad:
            raise ValueError("bracket breaks the grading at %r" % (bad[0],))
        self.basis = basis
        self.bracket = bracket
        self.name = name

    @property
    def dim(self):
        return self.basis.dim

    @property
    def parities(self):
        return self.basis.parities

    def br_basis(self, i, j):
        return self.bracket.fiber(i, j)

    def br(self, u, v):
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                axpy(out, x * y, self.bracket.fiber(i, j))
        return out

    def is_abelian(self):
        return len(self.bracket) == 0

    def __repr__(self):
        return "LieSuperAlgebra(%s, %d|%d)" % ((self.name or "?",) + self.basis.dims)


def multiply(A, u, v):
    """Product of two dense coordinate vectors in A."""
    if len(u) != A.dim or len(v) != A.dim:
        raise ValueError("dimension mismatch")
    return dense(A.mul(sparse(u), sparse(v)), A.dim)


def bracket(L, u, v):
    if len(u) != L.dim or len(v) != L.dim:
        raise ValueError("dimension mismatch")
    return dense(L.br(sparse(u), sparse(v)), L.dim)


def check_supercommutative(A):
    rep = CheckReport("supercommutativity")
    p = A.parities
    for i in range(A.dim):
        for j in range(A.dim):
            r = dict(A.mul_basis(j, i))
            axpy(r, Scalar(-sign(p[i] * p[j])), A.mul_basis(i, j))
            rep.checked += 1
            if r:
                rep.add("ba = (-1)^{|a||b|} ab", (i, j), vec_str(r, A.basis.names))
    return rep


def check_associative(A):
    rep = CheckReport("associativity")
    n = A.dim
    for i in range(n):
        for j in range(n):
            ij = A.mul_basis(i, j)
            for k in range(n):
                left = A.mul(ij, {k: ONE})
                right = A.mul({i: ONE}, A.mul_basis(j, k))
                r = axpy(dict(left), -ONE, right)
                rep.checked += 1
                if r:
                    rep.add("(ab)c = a(bc)", (i, j, k), vec_str(r, A.basis.names))
    return rep


def check_unital(A):
    rep = CheckReport("unitality")
    if A.unit_index is None:
        rep.add("unit exists", (), "no unit declared")
        return rep
    u = A.unit_index
    for j in range(A.dim):
        rep.checked += 1
        for a, b in ((u, j), (j, u)):
            r = axpy(dict(A.mul_basis(a, b)), -ONE, {j: ONE})
            if r:
                rep.add("1a = a1 = a", (a, b), vec_str(r, A.basis.names))
    return rep


def check_super_skew(L):
    rep = CheckReport("super-skew")
    p = L.parities
    for i in range(L.dim):
        for j in range(i, L.dim):
            r = dict(L.br_basis(i, j))
            axpy(r, Scalar(sign(p[i] * p[j])), L.br_basis(j, i))
            rep.checked += 1
            if r:
                rep.add("[x,y] = -(-1)^{|x||y|}[y,x]", (i, j), vec_str(r, L.basis.names))
    return rep


def check_super_jacobi(L):
    """(-1)^{|x||z|}[x,[y,z]] + (-1)^{|z||y|}[z,[x,y]] + (-1)^{|x||y|}[y,[z,x]] = 0."""
    rep = CheckReport("super-Jacobi")
    p = L.parities
    n = L.dim
    for x in range(n):
        for y in range(n):
            for z in range(n):
                r = {}
                axpy(r, Scalar(sign(p[x] * p[z])), L.br({x: ONE}, L.br_basis(y, z)))
                axpy(r, Scalar(sign(p[z] * p[y])), L.br({z: ONE}, L.br_basis(x, y)))
                axpy(r, Scalar(sign(p[x] * p[y])), L.br({y: ONE}, L.br_basis(z, x)))
                rep.checked += 1
                if r:
                    rep.add("super-Jacobi", (x, y, z), vec_str(r, L.basis.names))
    return rep


# ---------------------------------------------------------------- linear maps

class GradedLinearMap:
    """Linear map between super vector spaces; column j is the image of basis j.

    ``parity`` is the declared parity for homogeneous maps (None when the map
    mixes both parts); use ``even_part``/``odd_part`` to decompose.
    """

    def __init__(self, domain, codomain, columns, parity=None):
        cols = []
        for c in columns:
            if isinstance(c, dict):
                cols.append({k: as_scalar(x) for k, x in c.items() if x})
            else:
                cols.append(sparse(c))
        if len(cols) != domain.dim:
            raise ValueError("need one image per domain basis vector")
        for c in cols:
            if any(not 0 <= k < codomain.dim for k in c):
                raise ValueError("image index out of range")
        self.domain = domain
        self.codomain = codomain
        self.cols = tuple(cols)
        if parity is not None:
            for j, c in enumerate(cols):
                for k in c:
                    if (domain.parities[j] + parity - codomain.parities[k]) % 2:
                        raise ValueError("map does not have parity %d" % parity)
        self._parity = parity

    @classmethod
    def from_matrix(cls, domain, codomain, rows, parity=None):
        cols = [{i: as_scalar(rows[i][j]) for i in range(codomain.dim) if rows[i][j]}
                for j in range(domain.dim)]
        return cls(domain, codomain, cols, parity)

    @classmethod
    def zero(cls, domain, codomain, parity=0):
        return cls(domain, codomain, [{} for _ in range(domain.dim)], parity)

    @classmethod
    def identity(cls, basis):
        return cls(basis, basis, [{j: ONE} for j in range(basis.dim)], 0)

    @property
    def parity(self):
        if self._parity is not None:
            return self._parity
        ev, od = self._split()
        if not od:
            return 0
        if not ev:
            return 1
        return None

    def _split(self):
        ev, od = [], []
        dp, cp = self.domain.parities, self.codomain.parities
        for j, c in enumerate(self.cols):
            e = {k: x for k, x in c.items() if dp[j] == cp[k]}
            o = {k: x for k, x in c.items() if dp[j] != cp[k]}
            ev.append(e)
            od.append(o)
        has = lambda part: any(part)
        return (ev if has(ev) else None), (od if has(od) else None)

    def even_part(self):
        ev, _ = self._split()
        return GradedLinearMap(self.domain, self.codomain, ev or [{}] * self.domain.dim, 0)

    def odd_part(self):
        _, od = self._split()
        return GradedLinearMap(self.domain, self.codomain, od or [{}] * self.domain.dim, 1)

    def homogeneous_parts(self):
        return [self.even_part(), self.odd_part()]

    def apply_basis(self, j):
        return self.cols[j]

    def apply(self, v):
        out = {}
        for j, x in v.items():
            axpy(out, x, self.cols[j])
        return out

    def __call__(self, v):
        if isinstance(v, dict):
            return self.apply(v)
        return dense(self.apply(sparse(v)), self.codomain.dim)

    def compose(self, other):
        """self o other."""
        if other.codomain != self.domain:
            raise ValueError("cannot compose: basis mismatch")
        par = None
        if self.parity is not None and other.parity is not None:
            par = (self.parity + other.parity) % 2
        return GradedLinearMap(other.domain, self.codomain,
                               [self.apply(c) for c in other.cols], par)

    def combine(self, other, a=ONE, b=ONE):
        """a*self + b*other."""
        cols = []
        for c1, c2 in zip(self.cols, other.cols):
            c = scale(as_scalar(a), c1)
            axpy(c, as_scalar(b), c2)
            cols.append(c)
        par = self._parity if self._parity == other._parity else None
        return GradedLinearMap(self.domain, self.codomain, cols, par)

    def matrix(self):
        return [[self.cols[j].get(i, ZERO) for j in range(self.domain.dim)]
                for i in range(self.codomain.dim)]

    def is_zero(self):
        return not any(self.cols)

    def flat(self):
        """Sparse vector over (row, col) pairs flattened row-major."""
        n = self.domain.dim
        return {i * n + j: x for j, c in enumerate(self.cols) for i, x in c.items()}

    def __eq__(self, other):
        return (isinstance(other, GradedLinearMap) and self.domain == other.domain
                and self.codomain == other.codomain and self.cols == other.cols)

    def __repr__(self):
        return "GradedLinearMap(%s -> %s, parity=%r)" % (self.domain, self.codomain, self.parity)


def leibniz_report(A, D, parity, name="super-Leibniz"):
    """Check D(ab) = D(a)b + (-1)^{|a||D|} a D(b) on all basis pairs."""
    rep = CheckReport(name)
    p = A.parities
    for a in range(A.dim):
        Da = D.apply_basis(a)
        for b in range(A.dim):
            r = D.apply(A.mul_basis(a, b))
            axpy(r, -ONE, A.mul(Da, {b: ONE}))
            axpy(r, Scalar(-sign(p[a] * parity)), A.mul({a: ONE}, D.apply_basis(b)))
            rep.checked += 1
            if r:
                rep.add("D(ab) = D(a)b + (-1)^{|a||D|} a D(b)", (a, b), vec_str(r, A.basis.names))
    return rep


def superderivations(A):
    """(even basis, odd basis) of the superderivations of A.

    Unknowns are the matrix entries D[k][j] allowed by the parity; the
    super-Leibniz rule on every ordered basis pair gives linear equations.
    """
    n = A.dim
    p = A.parities
    out = []
    for par in (0, 1):
        unknowns = [(k, j) for j in range(n) for k in range(n) if (p[j] + par - p[k]) % 2 == 0]
        col = {u: t for t, u in enumerate(unknowns)}
        red = RowReducer()
        for a in range(n):
            for b in range(n):
                eqs = {}
                # D(e_a e_b)_k
                for c, x in A.mul_basis(a, b).items():
                    for k in range(n):
                        if (k, c) in col:
                            eqs.setdefault(k, {})
                            _acc(eqs[k], col[(k, c)], x)
                # - (D(e_a) e_b)_k
                for c in range(n):
                    if (c, a) in col:
                        for k, x in A.mul_basis(c, b).items():
                            eqs.setdefault(k, {})
                            _acc(eqs[k], col[(c, a)], -x)
                # - (-1)^{|a||D|} (e_a D(e_b))_k
                s = Scalar(-sign(p[a] * par))
                for c in range(n):
                    if (c, b) in col:
                        for k, x in A.mul_basis(a, c).items():
                            eqs.setdefault(k, {})
                            _acc(eqs[k], col[(c, b)], s * x)
                for row in eqs.values():
                    if row:
                        red.add(row)
        _, kernel = red.kernel_basis(len(unknowns))
        maps = []
        for v in kernel:
            cols = [{} for _ in range(n)]
            for t, x in v.items():
                k, j = unknowns[t]
                cols[j][k] = x
            maps.append(GradedLinearMap(A.basis, A.basis, cols, par))
        out.append(maps)
    return out[0], out[1]


def _acc(row, c, x):
    y = row.get(c, ZERO) + x
    if y:
        row[c] = y
    else:
        row.pop(c, None)


def der_bracket(D1, D2):
    """[D1, D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1 for homogeneous maps."""
    p1, p2 = D1.parity, D2.parity
    if p1 is None or p2 is None:
        raise ValueError("der_bracket needs homogeneous maps; decompose first")
    left = D1.compose(D2)
    right = D2.compose(D1)
    out = left.combine(right, ONE, Scalar(-sign(p1 * p2)))
    return GradedLinearMap(D1.domain, D1.codomain, out.cols, (p1 + p2) % 2)
