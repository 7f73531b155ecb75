"""The deformation complex C^n = Der^{n-1}(L, L) with delta = [m, .].

delta is implemented twice: through the graded bracket (``delta``) and by
the explicit two-sum expansion with closed-form signs (``delta_explicit``).
The second never calls the shuffle machinery of ``multider`` and serves as
an oracle for the first.
"""

import itertools

from .exactmath import ONE, ZERO, Matrix, RowReducer, Scalar, SparseTensor3, rank
from .gradedcore import LieSuperAlgebra, SuperBasis, axpy
from .lierinehart import LieRinehartStructure
from .multider import (
    MultiDerivation, _der_add, _rho_vec, der_commutator, md_basis, nr_bracket,
    structure_to_multider,
)

__all__ = [
    "MAX_DEGREE", "delta", "delta_explicit", "ComplexSlice", "complex_slice",
    "CohomologyReport", "cohomology_report", "z1_check", "z2_explicit_check",
    "cocycle_basis", "coboundary_basis", "same_subspace", "coboundary_preimage",
    "permute_structure",
]

MAX_DEGREE = 4


def _m(S, m=None):
    return m if m is not None else structure_to_multider(S)


def delta(n, D, m=None):
    """delta^n D = [m, D] for D in C^n (arity n-1)."""
    if D.arity != n - 1:
        raise ValueError("C^%d holds arity %d, got arity %d" % (n, n - 1, D.arity))
    return nr_bracket(_m(D.S, m), D)


def _sgn(k):
    return -1 if k % 2 else 1


def delta_explicit(n, D):
    """delta^n D from the two-sum expansion.

    (dD)(x_0..x_n) = sum_i eps_i m(D(.. x_i omitted ..), x_i)
                     - (-1)^{n-1} sum_{i<j} eps_ij D(m(x_i, x_j), rest)

    where eps_i moves x_i to the end and eps_ij moves x_i, x_j to the front.
    The symbol is
        rho(D(x)) - (-1)^{n-1} sum_{i<j} eps_ij sigma_D(m(x_i, x_j), rest)
        + (-1)^{n-1} sum_i eps'_i (-1)^{|D||x_i|} [rho(x_i), sigma_D(rest)].
    """
    if D.arity != n - 1:
        raise ValueError("C^%d holds arity %d, got arity %d" % (n, n - 1, D.arity))
    S = D.S
    L = S.L
    pl = L.parities
    out = MultiDerivation(S, n)
    s_n = _sgn(n - 1)
    for j, P in D.parts():
        vals = {}
        for x in itertools.product(range(L.dim), repeat=n + 1):
            p = [pl[k] for k in x]
            v = {}
            for i in range(n + 1):
                e = _sgn(n - i) * _sgn(p[i] * sum(p[i + 1:]))
                inner = P.value(x[:i] + x[i + 1:])
                axpy(v, Scalar(e), L.br(inner, {x[i]: ONE}))
            for i in range(n + 1):
                for k in range(i + 1, n + 1):
                    e = _sgn(i + k - 1) * _sgn(p[i] * sum(p[:i]) + p[k] * (sum(p[:k]) - p[i]))
                    rest = [{y: ONE} for y in x[:i] + x[i + 1:k] + x[k + 1:]]
                    axpy(v, Scalar(-s_n * e), P.evaluate([L.br_basis(x[i], x[k])] + rest))
            if v:
                vals[x] = v
        sym = {}
        if n >= 0:
            dimA = S.A.dim
            for x in itertools.product(range(L.dim), repeat=n):
                p = [pl[k] for k in x]
                Dx = _rho_vec(S, P.value(x))
                for i in range(n):
                    for k in range(i + 1, n):
                        e = _sgn(i + k - 1) * _sgn(p[i] * sum(p[:i]) + p[k] * (sum(p[:k]) - p[i]))
                        rest = [{y: ONE} for y in x[:i] + x[i + 1:k] + x[k + 1:]]
                        _der_add(Dx, Scalar(-s_n * e),
                                 P.evaluate_symbol([L.br_basis(x[i], x[k])] + rest))
                for i in range(n):
                    e = _sgn(i) * _sgn(p[i] * sum(p[:i])) * _sgn(j * p[i])
                    rest = x[:i] + x[i + 1:]
                    sig = P.sym(rest)
                    if not sig:
                        continue
                    r = _rho_vec(S, {x[i]: ONE})
                    X = sum(p) - p[i]
                    _der_add(Dx, Scalar(s_n * e), der_commutator(r, p[i], sig, (j + X) % 2, dimA))
                if Dx:
                    sym[x] = Dx
        out = out + MultiDerivation(S, n, vals, sym)
    return out


# ---------------------------------------------------------------- slices

class ComplexSlice:
    """Basis of C^n and the matrix of delta^n into the basis of C^{n+1}."""

    def __init__(self, n, basis, next_basis, matrix):
        self.n = n
        self.basis = basis
        self.next_basis = next_basis
        self.matrix = matrix

    @property
    def dim(self):
        return self.basis.dim

    @property
    def rank(self):
        return rank(self.matrix)


def _check_degree(n):
    if n > MAX_DEGREE + 1:
        raise ValueError("degrees above %d are not supported" % MAX_DEGREE)


def complex_slice(S, n, bases=None, m=None, route="bracket"):
    """delta^n : C^n -> C^{n+1} as an exact matrix (columns = images)."""
    _check_degree(n)
    bases = bases if bases is not None else {}
    for k in (n, n + 1):
        if k not in bases:
            bases[k] = md_basis(k - 1, S)
    m = _m(S, m)
    src, dst = bases[n], bases[n + 1]
    cols = []
    for b in src.elements:
        img = delta(n, b, m) if route == "bracket" else delta_explicit(n, b)
        cols.append(dst.coordinates(img))
    if cols:
        M = Matrix.from_columns(cols, dst.dim)
    else:
        M = Matrix([[] for _ in range(dst.dim)], 0)
    return ComplexSlice(n, src, dst, M)


class CohomologyReport:
    """Per degree: dim C, rank delta, dim Z, dim B, dim H."""

    def __init__(self, degrees, checks):
        self.degrees = degrees
        self.checks = checks

    def degree(self, n):
        for d in self.degrees:
            if d["n"] == n:
                return d
        raise KeyError(n)

    def to_json(self):
        return {"degrees": self.degrees, "checks": self.checks}


def cohomology_report(S, max_degree=2, m=None):
    """Exact dims of Z^n, B^n, H^n for 0 <= n <= max_degree.

    Also asserts delta^{n+1} delta^n = 0 for every computed pair.
    """
    if max_degree > MAX_DEGREE:
        raise ValueError("max_degree must be at most %d" % MAX_DEGREE)
    m = _m(S, m)
    bases = {}
    slices = [complex_slice(S, n, bases, m) for n in range(max_degree + 1)]
    checks = []
    for a, b in zip(slices, slices[1:]):
        ok = (b.matrix @ a.matrix).is_zero()
        checks.append({"identity": "delta^%d delta^%d = 0" % (b.n, a.n), "ok": ok})
        if not ok:
            raise AssertionError("delta^2 != 0 between degrees %d and %d" % (a.n, b.n))
    degrees = []
    prev = 0
    for sl in slices:
        r = sl.rank
        dz = sl.dim - r
        degrees.append({"n": sl.n, "dimC": sl.dim, "rank": r, "dimZ": dz,
                        "dimB": prev, "dimH": dz - prev})
        prev = r
    return CohomologyReport(degrees, checks)


# ---------------------------------------------------------------- subspaces

def cocycle_basis(S, n, bases=None, m=None):
    """Basis of Z^n as MultiDerivations."""
    sl = complex_slice(S, n, bases, m)
    red = RowReducer()
    for row in sl.matrix.sparse_rows():
        red.add(row)
    _, ker = red.kernel_basis(sl.dim)
    return [sl.basis.combination([v.get(i, ZERO) for i in range(sl.dim)]) for v in ker]


def coboundary_basis(S, n, bases=None, m=None):
    """Images delta(b) of a basis of C^{n-1} (spanning B^n, maybe dependent)."""
    if n == 0:
        return []
    m = _m(S, m)
    return [delta(n - 1, b, m) for b in md_basis(n - 2, S).elements]


def same_subspace(U, V):
    """(U in span V, V in span U) for lists of MultiDerivations."""
    def span(vs):
        red = RowReducer()
        idx = {}
        rows = []
        for v in vs:
            raw = v.raw()
            rows.append({idx.setdefault(k, len(idx)): x for k, x in raw.items()})
        for r in rows:
            red.add(r)
        return red, idx

    def inside(us, vs):
        red, idx = span(vs)
        for u in us:
            raw = u.raw()
            if any(k not in idx for k in raw):
                return False
            if not red.contains({idx[k]: x for k, x in raw.items()}):
                return False
        return True

    return inside(U, V), inside(V, U)


def coboundary_preimage(n, D, m=None):
    """Some E in C^{n-1} with delta E = D, or None (rank certificate in the solve)."""
    S = D.S
    m = _m(S, m)
    src = md_basis(n - 2, S)
    images = [delta(n - 1, b, m) for b in src.elements]
    keys = sorted({k for im in images for k in im.raw()} | set(D.raw()), key=repr)
    idx = {k: i for i, k in enumerate(keys)}
    red = RowReducer()
    # columns: coefficients of the images; augmented column: D
    ncols = len(images)
    rows = {}
    for c, im in enumerate(images):
        for k, x in im.raw().items():
            rows.setdefault(idx[k], {})[c] = x
    for k, x in D.raw().items():
        rows.setdefault(idx[k], {})[ncols] = x
    for i in sorted(rows):
        red.add(rows[i])
    if ncols in red.pivots:
        return None
    coeffs = [ZERO] * ncols
    for c, prow in red.pivots.items():
        coeffs[c] = prow.get(ncols, ZERO)
    return src.combination(coeffs)


# ---------------------------------------------------------------- explicit checks

def z1_check(D):
    """D in Z^1: D[x,y] = [Dx, y] - (-1)^{|x||y|}[Dy, x] on basis pairs,
    plus the symbol sector rho(Dx) + (-1)^{|D||x|}[rho_x, sigma_D] = 0."""
    if D.arity != 0:
        raise ValueError("Z^1 holds arity 0 multiderivations")
    S = D.S
    L = S.L
    pl = L.parities
    for j, P in D.parts():
        for x in range(L.dim):
            for y in range(L.dim):
                r = P.evaluate([L.br_basis(x, y)])
                axpy(r, -ONE, L.br(P.value((x,)), {y: ONE}))
                axpy(r, Scalar(_sgn(pl[x] * pl[y])), L.br(P.value((y,)), {x: ONE}))
                if r:
                    return False
        sig = P.sym(())
        for x in range(L.dim):
            T = _rho_vec(S, P.value((x,)))
            if sig:
                _der_add(T, Scalar(_sgn(j * pl[x])),
                         der_commutator(_rho_vec(S, {x: ONE}), pl[x], sig, j, S.A.dim))
            if T:
                return False
    return True


def z2_explicit_check(D, printed=False):
    """D in Z^2 via the six-term identity on basis triples, plus the symbol sector.

    [D(x,y),z] - (-1)^{|y||z|}[D(x,z),y] + (-1)^{|x||y|+|x||z|}[D(y,z),x]
      = -D([x,y],z) + (-1)^{|y||z|}D([x,z],y) - (-1)^{|x||y|+|x||z|}D([y,z],x)

    ``printed=True`` uses +(-1)^{..}D([y,z],x) for the last term instead.
    """
    if D.arity != 1:
        raise ValueError("Z^2 holds arity 1 multiderivations")
    S = D.S
    L = S.L
    pl = L.parities
    last = ONE if printed else -ONE
    n = L.dim
    for j, P in D.parts():
        for x, y, z in itertools.product(range(n), repeat=3):
            e1 = Scalar(_sgn(pl[y] * pl[z]))
            e2 = Scalar(_sgn(pl[x] * pl[y] + pl[x] * pl[z]))
            r = L.br(P.value((x, y)), {z: ONE})
            axpy(r, -e1, L.br(P.value((x, z)), {y: ONE}))
            axpy(r, e2, L.br(P.value((y, z)), {x: ONE}))
            axpy(r, ONE, P.evaluate([L.br_basis(x, y), {z: ONE}]))
            axpy(r, -e1, P.evaluate([L.br_basis(x, z), {y: ONE}]))
            axpy(r, -last * e2, P.evaluate([L.br_basis(y, z), {x: ONE}]))
            if r:
                return False
        for x, y in itertools.product(range(n), repeat=2):
            T = _rho_vec(S, P.value((x, y)))
            _der_add(T, ONE, P.evaluate_symbol([L.br_basis(x, y)]))
            sy, sx = P.sym((y,)), P.sym((x,))
            if sy:
                _der_add(T, Scalar(-_sgn(j * pl[x])),
                         der_commutator(_rho_vec(S, {x: ONE}), pl[x], sy, (j + pl[y]) % 2, S.A.dim))
            if sx:
                _der_add(T, Scalar(_sgn(pl[x] * pl[y] + j * pl[y])),
                         der_commutator(_rho_vec(S, {y: ONE}), pl[y], sx, (j + pl[x]) % 2, S.A.dim))
            if T:
                return False
    return True


# ---------------------------------------------------------------- basis changes

def permute_structure(S, perm):
    """S with the basis of L reordered: new basis element i is old perm[i].

    ``perm`` must keep even elements before odd ones.
    """
    L = S.L
    n = L.dim
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")
    inv = {old: new for new, old in enumerate(perm)}
    basis = SuperBasis([(L.basis.names[o], L.parities[o]) for o in perm])
    br = {(inv[i], inv[j], inv[k]): x for (i, j, k), x in L.bracket.items()}
    L2 = LieSuperAlgebra(basis, SparseTensor3((n, n, n), br), name=L.name)
    act = {(a, inv[x], inv[y]): c for (a, x, y), c in S.action.items()}
    anc = {(inv[x], a, b): c for (x, a, b), c in S.anchor.items()}
    return LieRinehartStructure(S.A, L2, SparseTensor3(S.action.dims, act),
                                SparseTensor3(S.anchor.dims, anc), name=S.name)
