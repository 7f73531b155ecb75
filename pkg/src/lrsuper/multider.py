"""Super-multiderivations of a Lie-Rinehart superalgebra.

A multiderivation of arity n is a pair (f, sigma_f): f takes n+1 arguments
in L and is graded antisymmetric; sigma_f takes n arguments and returns a
superderivation of A, and the two are tied by

    f(x_1..x_n, a y) = (-1)^{|a|(|f| + |x_1|+..+|x_n|)} a f(x_1..x_n, y)
                       + sigma_f(x_1..x_n)(a) y.

Arity -1 elements are plain vectors of L (no symbol).

Storage: ``values`` maps every ordered basis tuple (length n+1) to a sparse
L-vector, ``symbol`` maps every ordered n-tuple to {a: sparse A-vector}.
Zero entries are never stored.

Signs.  Reordering graded arguments picks up -(-1)^{|u||v|} per adjacent
swap (``koszul_sign``).  Composition uses shuffles with no further sign:

    (f o g)(x) = sum_{Sh(q+1,p)} eps f(g(x_F), x_G)

and the bracket of homogeneous f (arity p) and g (arity q) is

    [f, g] = f o g - (-1)^{pq + |f||g|} g o f.

The extra |f||g| only matters when both are odd.  The symbol is

    sigma_[f,g] = sigma_f o g - (-1)^{pq+|f||g|} sigma_g o f
                  + (-1)^{pq} sum_{Sh(p,q)} eps (-1)^{|g| X_F} [sigma_f(x_F), sigma_g(x_G)]

with X_F the total parity of x_F and sigma_f o g inserting g's output into
the first slot of sigma_f over Sh(q+1, p-1).
"""

import itertools
from functools import lru_cache

from .exactmath import ONE, ZERO, RowReducer, Scalar, SparseTensor3
from .gradedcore import CheckReport, LieSuperAlgebra, axpy, scale, vec_str
from .lierinehart import LieRinehartStructure, is_lie_rinehart

__all__ = [
    "koszul_sign", "koszul_sign_cycles", "shuffles", "MultiDerivation",
    "md_compose", "symbol_compose", "nr_bracket", "MDBasis", "md_basis",
    "structure_to_multider", "multider_to_structure", "check_multider",
]


# ---------------------------------------------------------------- signs

def _swap(pu, pv):
    return 1 if pu & pv else -1


def _koszul_bubble(perm, parities):
    # bubble the reordered sequence back to the identity, one swap at a time
    seq = list(perm)
    s = 1
    n = len(seq)
    for i in range(n):
        for j in range(n - 1 - i):
            if seq[j] > seq[j + 1]:
                s *= _swap(parities[seq[j]], parities[seq[j + 1]])
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
    return s


def _koszul_cycles(perm, parities):
    # permutation sign from its cycle type, parity sign from odd-odd inversions
    n = len(perm)
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    sgn = -1 if (n - cycles) % 2 else 1
    odd = [p for p in perm if parities[p]]
    inv = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])
    return sgn * (-1 if inv % 2 else 1)


def _check_perm(perm, parities):
    perm = tuple(perm)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError("not a permutation: %r" % (perm,))
    if len(parities) != len(perm):
        raise ValueError("need one parity per position")
    return perm


def koszul_sign(perm, parities):
    """Sign eps with x_perm[0] ... x_perm[k-1] = eps * (x_0 ... x_{k-1}).

    ``parities[i]`` is the parity of x_i.  Every adjacent swap of u, v
    contributes -(-1)^{|u||v|}.  Computed by bubble sort.
    """
    perm = _check_perm(perm, parities)
    return Scalar(_koszul_bubble(perm, tuple(parities)))


def koszul_sign_cycles(perm, parities):
    """Same sign as koszul_sign, from the cycle decomposition and odd inversions."""
    perm = _check_perm(perm, parities)
    return Scalar(_koszul_cycles(perm, tuple(parities)))


def shuffles(k, l):
    """Sh(k, l) as tuples of positions: the first k entries, then the rest."""
    n = k + l
    for first in itertools.combinations(range(n), k):
        rest = tuple(i for i in range(n) if i not in first)
        yield first + rest


@lru_cache(maxsize=None)
def _shuffle_signs(k, l, pars):
    return tuple((perm, _koszul_bubble(perm, pars)) for perm in shuffles(k, l))


@lru_cache(maxsize=None)
def _canon(tup, pars):
    """(sign, sorted tuple) with f(tup) = sign * f(sorted), or (0, None).

    A repeated even index forces the value to vanish.
    """
    seq = list(tup)
    s = 1
    n = len(seq)
    for i in range(n):
        for j in range(n - 1 - i):
            if seq[j] > seq[j + 1]:
                s *= _swap(pars[seq[j]], pars[seq[j + 1]])
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
    for a, b in zip(seq, seq[1:]):
        if a == b and not pars[a]:
            return 0, None
    return s, tuple(seq)


def canonical_tuples(length, pars):
    """Nondecreasing index tuples with no repeated even index."""
    out = []
    for t in itertools.combinations_with_replacement(range(len(pars)), length):
        if all(not (a == b and not pars[a]) for a, b in zip(t, t[1:])):
            out.append(t)
    return out


# ---------------------------------------------------------------- A-side helpers

def _der_apply(D, av):
    out = {}
    for a, x in av.items():
        col = D.get(a)
        if col:
            axpy(out, x, col)
    return out


def _der_compose(D1, D2, dimA):
    out = {}
    for a in range(dimA):
        col = D2.get(a)
        if col:
            v = _der_apply(D1, col)
            if v:
                out[a] = v
    return out


def _der_add(acc, c, D):
    for a, col in D.items():
        v = acc.setdefault(a, {})
        axpy(v, c, col)
        if not v:
            del acc[a]
    return acc


def der_commutator(D1, p1, D2, p2, dimA):
    """[D1, D2] = D1 D2 - (-1)^{p1 p2} D2 D1 for maps stored as {a: vec}."""
    out = _der_compose(D1, D2, dimA)
    return _der_add(out, ONE if p1 & p2 else -ONE, _der_compose(D2, D1, dimA))


def _rho_vec(S, v):
    """rho of a sparse L-vector as {a: vec}."""
    out = {}
    for x, c in v.items():
        r = S.rho_basis(x)
        for a, col in enumerate(r.cols):
            if col:
                w = out.setdefault(a, {})
                axpy(w, c, col)
                if not w:
                    del out[a]
    return out


# ---------------------------------------------------------------- multiderivations

class MultiDerivation:
    """A pair (f, sigma_f) of arity n >= -1 over a Lie-Rinehart structure."""

    __slots__ = ("S", "arity", "values", "symbol")

    def __init__(self, S, arity, values=None, symbol=None):
        if arity < -1:
            raise ValueError("arity must be >= -1")
        self.S = S
        self.arity = arity
        vals = {}
        for t, v in (values or {}).items():
            t = tuple(t)
            if len(t) != arity + 1:
                raise ValueError("value key %r has wrong length for arity %d" % (t, arity))
            v = {k: x for k, x in v.items() if x}
            if v:
                vals[t] = v
        sym = {}
        if arity == -1 and symbol:
            raise ValueError("arity -1 elements have no symbol")
        for t, D in (symbol or {}).items():
            t = tuple(t)
            if len(t) != arity:
                raise ValueError("symbol key %r has wrong length for arity %d" % (t, arity))
            D = {a: {b: x for b, x in col.items() if x} for a, col in D.items()}
            D = {a: col for a, col in D.items() if col}
            if D:
                sym[t] = D
        self.values = vals
        self.symbol = sym

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, S, arity):
        return cls(S, arity)

    @classmethod
    def element(cls, S, vec):
        """The arity -1 multiderivation given by an L-vector."""
        return cls(S, -1, {(): dict(vec)})

    @classmethod
    def from_canonical(cls, S, arity, values, symbol=None):
        """Extend values/symbol given on sorted tuples by graded antisymmetry."""
        pars = S.L.parities
        vals, sym = {}, {}
        for t in itertools.product(range(S.L.dim), repeat=arity + 1):
            s, c = _canon(t, pars)
            if s and c in values:
                vals[t] = scale(Scalar(s), values[c])
        if arity >= 0:
            for t in itertools.product(range(S.L.dim), repeat=arity):
                s, c = _canon(t, pars)
                if s and symbol and c in symbol:
                    sym[t] = {a: scale(Scalar(s), col) for a, col in symbol[c].items()}
        return cls(S, arity, vals, sym)

    # access ---------------------------------------------------------------

    def value(self, tup):
        return self.values.get(tuple(tup), {})

    def sym(self, tup):
        return self.symbol.get(tuple(tup), {})

    def evaluate(self, vectors):
        """f on a list of sparse L-vectors (multilinear extension)."""
        out = {}
        for combo in itertools.product(*[list(v.items()) for v in vectors]):
            c = ONE
            for _, x in combo:
                c = c * x
            axpy(out, c, self.value(tuple(k for k, _ in combo)))
        return out

    def evaluate_symbol(self, vectors):
        out = {}
        for combo in itertools.product(*[list(v.items()) for v in vectors]):
            c = ONE
            for _, x in combo:
                c = c * x
            _der_add(out, c, self.sym(tuple(k for k, _ in combo)))
        return out

    def is_zero(self):
        return not self.values and not self.symbol

    # linear structure -------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, MultiDerivation) or other.arity != self.arity:
            raise ValueError("arity mismatch")

    def combine(self, other, a=ONE, b=ONE):
        self._same(other)
        vals = {}
        for src, c in ((self, a), (other, b)):
            for t, v in src.values.items():
                axpy(vals.setdefault(t, {}), c, v)
        sym = {}
        for src, c in ((self, a), (other, b)):
            for t, D in src.symbol.items():
                _der_add(sym.setdefault(t, {}), c, D)
        return MultiDerivation(self.S, self.arity, vals, sym)

    def __add__(self, other):
        return self.combine(other)

    def __sub__(self, other):
        return self.combine(other, ONE, -ONE)

    def __neg__(self):
        return self.scaled(-ONE)

    def scaled(self, c):
        c = Scalar(c) if not isinstance(c, Scalar) else c
        return MultiDerivation(self.S, self.arity,
                               {t: scale(c, v) for t, v in self.values.items()},
                               {t: {a: scale(c, col) for a, col in D.items()}
                                for t, D in self.symbol.items()})

    def __eq__(self, other):
        return (isinstance(other, MultiDerivation) and self.arity == other.arity
                and self.values == other.values and self.symbol == other.symbol)

    def __hash__(self):
        return hash((self.arity, len(self.values), len(self.symbol)))

    def __repr__(self):
        return "MultiDerivation(arity=%d, %d values, %d symbol entries)" % (
            self.arity, len(self.values), len(self.symbol))

    # parity ---------------------------------------------------------------

    def part(self, j):
        """Homogeneous part of parity j."""
        pl, pa = self.S.L.parities, self.S.A.parities
        vals = {}
        for t, v in self.values.items():
            X = sum(pl[i] for i in t)
            w = {k: x for k, x in v.items() if (pl[k] - X - j) % 2 == 0}
            if w:
                vals[t] = w
        sym = {}
        for t, D in self.symbol.items():
            X = sum(pl[i] for i in t)
            E = {}
            for a, col in D.items():
                w = {b: x for b, x in col.items() if (pa[b] - pa[a] - X - j) % 2 == 0}
                if w:
                    E[a] = w
            if E:
                sym[t] = E
        return MultiDerivation(self.S, self.arity, vals, sym)

    def parts(self):
        """[(parity, part)] for the nonzero homogeneous parts."""
        return [(j, P) for j in (0, 1) for P in [self.part(j)] if not P.is_zero()]

    @property
    def parity(self):
        """0 or 1 for homogeneous elements (0 for zero), None when mixed."""
        ps = [j for j, _ in self.parts()]
        if not ps:
            return 0
        return ps[0] if len(ps) == 1 else None

    # coordinates -------------------------------------------------------------

    def raw(self):
        """Sparse coordinates on sorted tuples: ('v', I, k) and ('s', J, a, b)."""
        pars = self.S.L.parities
        out = {}
        for t, v in self.values.items():
            if _canon(t, pars)[1] == t:
                for k, x in v.items():
                    out[("v", t, k)] = x
        for t, D in self.symbol.items():
            if _canon(t, pars)[1] == t:
                for a, col in D.items():
                    for b, x in col.items():
                        out[("s", t, a, b)] = x
        return out

    # serialization -------------------------------------------------------------

    def to_json(self):
        vals = []
        for t in sorted(self.values):
            for k in sorted(self.values[t]):
                vals.append(list(t) + [k] + self.values[t][k].to_pair())
        sym = []
        for t in sorted(self.symbol):
            for a in sorted(self.symbol[t]):
                for b in sorted(self.symbol[t][a]):
                    sym.append(list(t) + [a, b] + self.symbol[t][a][b].to_pair())
        return {"arity": self.arity, "values": vals, "symbol": sym}

    @classmethod
    def from_json(cls, S, doc):
        n = int(doc["arity"])
        vals, sym = {}, {}
        for row in doc.get("values", []):
            t, k, re_, im_ = tuple(row[:n + 1]), row[n + 1], row[n + 2], row[n + 3]
            axpy(vals.setdefault(t, {}), Scalar.from_pair(re_, im_), {k: ONE})
        for row in doc.get("symbol", []):
            t, a, b, re_, im_ = tuple(row[:n]), row[n], row[n + 1], row[n + 2], row[n + 3]
            axpy(sym.setdefault(t, {}).setdefault(a, {}), Scalar.from_pair(re_, im_), {b: ONE})
        return cls(S, n, vals, sym)


# ---------------------------------------------------------------- composition

def _check_pair(f, g):
    if f.S is not g.S and (f.S.L.parities != g.S.L.parities or f.S.A.parities != g.S.A.parities):
        raise ValueError("multiderivations over different structures")


def md_compose(f, g):
    """f o g as a raw antisymmetric map of arity p+q (symbol left empty).

    For g of arity -1 this inserts the element into f's first slot; for f of
    arity -1 the composition is zero.
    """
    _check_pair(f, g)
    p, q = f.arity, g.arity
    S = f.S
    if p + q < -1:
        raise ValueError("composition of two arity -1 elements")
    if p == -1:
        return MultiDerivation(S, p + q)
    if q == -1:
        z = g.value(())
        vals = {}
        for t in itertools.product(range(S.L.dim), repeat=p):
            v = {}
            for k, c in z.items():
                axpy(v, c, f.value((k,) + t))
            if v:
                vals[t] = v
        return MultiDerivation(S, p - 1, vals)
    pars = S.L.parities
    n = p + q + 1
    canon = {}
    for t in canonical_tuples(n, pars):
        tp = tuple(pars[i] for i in t)
        out = {}
        for perm, eps in _shuffle_signs(q + 1, p, tp):
            inner = g.value(tuple(t[i] for i in perm[:q + 1]))
            if not inner:
                continue
            rest = tuple(t[i] for i in perm[q + 1:])
            c = Scalar(eps)
            for k, x in inner.items():
                axpy(out, c * x, f.value((k,) + rest))
        if out:
            canon[t] = out
    return MultiDerivation.from_canonical(S, n - 1, canon)


def symbol_compose(f, g):
    """sigma_f o g: g's output inserted into the first slot of sigma_f.

    Returns a symbol dict over (p+q)-tuples; zero when f has arity 0.
    """
    _check_pair(f, g)
    p, q = f.arity, g.arity
    S = f.S
    if p <= 0 or q + p < 0:
        return {}
    if q == -1:
        z = g.value(())
        sym = {}
        for t in itertools.product(range(S.L.dim), repeat=p - 1):
            D = {}
            for k, c in z.items():
                _der_add(D, c, f.sym((k,) + t))
            if D:
                sym[t] = D
        return sym
    pars = S.L.parities
    n = p + q
    canon = {}
    for t in canonical_tuples(n, pars):
        tp = tuple(pars[i] for i in t)
        D = {}
        for perm, eps in _shuffle_signs(q + 1, p - 1, tp):
            inner = g.value(tuple(t[i] for i in perm[:q + 1]))
            if not inner:
                continue
            rest = tuple(t[i] for i in perm[q + 1:])
            c = Scalar(eps)
            for k, x in inner.items():
                _der_add(D, c * x, f.sym((k,) + rest))
        if D:
            canon[t] = D
    return MultiDerivation.from_canonical(S, n, {}, canon).symbol


def _symbol_bracket(f, jf, g, jg):
    """sum_{Sh(p,q)} eps (-1)^{|g| X_F} [sigma_f(x_F), sigma_g(x_G)]."""
    p, q = f.arity, g.arity
    S = f.S
    if p < 0 or q < 0:
        return {}
    pars = S.L.parities
    dimA = S.A.dim
    n = p + q
    canon = {}
    for t in canonical_tuples(n, pars):
        tp = tuple(pars[i] for i in t)
        D = {}
        for perm, eps in _shuffle_signs(p, q, tp):
            F = tuple(t[i] for i in perm[:p])
            G = tuple(t[i] for i in perm[p:])
            sf, sg = f.sym(F), g.sym(G)
            if not sf or not sg:
                continue
            XF = sum(pars[i] for i in F)
            XG = sum(pars[i] for i in G)
            c = eps * (-1 if (jg * XF) % 2 else 1)
            _der_add(D, Scalar(c), der_commutator(sf, (jf + XF) % 2, sg, (jg + XG) % 2, dimA))
        if D:
            canon[t] = D
    return MultiDerivation.from_canonical(S, n, {}, canon).symbol


def nr_bracket(f, g):
    """The graded bracket [f, g] with its symbol (bilinear over parity parts)."""
    _check_pair(f, g)
    p, q = f.arity, g.arity
    if p + q < -1:
        raise ValueError("bracket of two arity -1 elements is undefined")
    S = f.S
    total = MultiDerivation(S, p + q)
    for jf, F in f.parts():
        for jg, G in g.parts():
            s = -ONE if (p * q + jf * jg) % 2 else ONE
            vals = md_compose(F, G).combine(md_compose(G, F), ONE, -s)
            if p + q >= 0:
                sym = MultiDerivation(S, p + q, {}, symbol_compose(F, G))
                sym = sym.combine(MultiDerivation(S, p + q, {}, symbol_compose(G, F)), ONE, -s)
                br = MultiDerivation(S, p + q, {}, _symbol_bracket(F, jf, G, jg))
                sym = sym.combine(br, ONE, -ONE if (p * q) % 2 else ONE)
                vals = MultiDerivation(S, p + q, vals.values, sym.symbol)
            total = total + vals
    return total


# ---------------------------------------------------------------- checks

def check_multider(D):
    """Antisymmetry, symbol antisymmetry, symbol in Der(A), and condition (2).

    Each homogeneous part is checked separately, since |f| enters the sign.
    """
    S = D.S
    A, L = S.A, S.L
    pl, pa = L.parities, A.parities
    rep = CheckReport("multiderivation")
    n = D.arity
    if n == -1:
        return rep
    for j, P in D.parts() or [(0, D)]:
        for t in itertools.product(range(L.dim), repeat=n + 1):
            for i in range(n):
                u = list(t)
                u[i], u[i + 1] = u[i + 1], u[i]
                r = dict(P.value(t))
                axpy(r, Scalar(-_swap(pl[t[i]], pl[t[i + 1]])), P.value(tuple(u)))
                rep.checked += 1
                if r:
                    rep.add("antisymmetry", t, vec_str(r, L.basis.names))
        for t in itertools.product(range(L.dim), repeat=n):
            X = sum(pl[i] for i in t)
            for i in range(n - 1):
                u = list(t)
                u[i], u[i + 1] = u[i + 1], u[i]
                r = {}
                _der_add(r, ONE, P.sym(t))
                _der_add(r, Scalar(-_swap(pl[t[i]], pl[t[i + 1]])), P.sym(tuple(u)))
                rep.checked += 1
                if r:
                    rep.add("symbol antisymmetry", t, str(r))
            sig = P.sym(t)
            ps = (j + X) % 2
            for a in range(A.dim):
                for b in range(A.dim):
                    r = _der_apply(sig, A.mul_basis(a, b))
                    axpy(r, -ONE, A.mul(sig.get(a, {}), {b: ONE}))
                    axpy(r, ONE if (pa[a] * ps) % 2 else -ONE, A.mul({a: ONE}, sig.get(b, {})))
                    rep.checked += 1
                    if r:
                        rep.add("symbol is a superderivation", t + (a, b), vec_str(r, A.basis.names))
            for a in range(A.dim):
                for y in range(L.dim):
                    r = P.evaluate([{i: ONE} for i in t] + [S.act_basis(a, y)])
                    e = -ONE if (pa[a] * (j + X)) % 2 else ONE
                    axpy(r, -e, S.act({a: ONE}, P.value(t + (y,))))
                    axpy(r, -ONE, S.act(sig.get(a, {}), {y: ONE}))
                    rep.checked += 1
                    if r:
                        rep.add("f(x, a y) = (-1)^{|a|(|f|+X)} a f(x, y) + sigma_f(x)(a) y",
                                t + (a, y), vec_str(r, L.basis.names))
    return rep


# ---------------------------------------------------------------- bases

class MDBasis:
    """Basis of Der^n(L, L) in the pair representation.

    ``elements`` lists even elements first.  Each element has coordinate 1 at
    its own free unknown and 0 at the other free unknowns, so coordinates of
    a member are read off directly and then verified.
    """

    def __init__(self, S, arity, elements, free_keys, parities):
        self.S = S
        self.arity = arity
        self.elements = list(elements)
        self.free_keys = list(free_keys)
        self.parities = list(parities)

    def __len__(self):
        return len(self.elements)

    @property
    def dim(self):
        return len(self.elements)

    def dims(self):
        return (self.parities.count(0), self.parities.count(1))

    def combination(self, coeffs):
        out = MultiDerivation.zero(self.S, self.arity)
        for c, b in zip(coeffs, self.elements):
            if c:
                out = out.combine(b, ONE, c)
        return out

    def coordinates(self, D, check=True):
        """Coordinates of D in this basis; ValueError if D is not in the span."""
        if D.arity != self.arity:
            raise ValueError("arity mismatch")
        raw = D.raw()
        coeffs = [raw.get(k, ZERO) for k in self.free_keys]
        if check and self.combination(coeffs) != D:
            raise ValueError("not a member of Der^%d" % self.arity)
        return coeffs

    def contains(self, D):
        try:
            self.coordinates(D)
            return True
        except ValueError:
            return False


def md_basis(n, S):
    """Solve the linear system defining Der^n(L, L); n = -1 gives L itself."""
    if n < -1:
        raise ValueError("arity must be >= -1")
    L, A = S.L, S.A
    if n == -1:
        els = [MultiDerivation.element(S, {k: ONE}) for k in range(L.dim)]
        keys = [("v", (), k) for k in range(L.dim)]
        return MDBasis(S, -1, els, keys, list(L.parities))
    pl, pa = L.parities, A.parities
    els, keys, pars = [], [], []
    vt = canonical_tuples(n + 1, pl)
    st = canonical_tuples(n, pl)
    for j in (0, 1):
        unknowns = []
        for t in vt:
            X = sum(pl[i] for i in t)
            unknowns += [("v", t, k) for k in range(L.dim) if (pl[k] - X - j) % 2 == 0]
        for t in st:
            X = sum(pl[i] for i in t)
            unknowns += [("s", t, a, b) for a in range(A.dim) for b in range(A.dim)
                         if (pa[b] - pa[a] - X - j) % 2 == 0]
        col = {u: i for i, u in enumerate(unknowns)}

        def fv(t, k):
            # (column, sign) for the value f(t)_k, or None when forced zero
            s, c = _canon(t, pl)
            if not s:
                return None
            key = ("v", c, k)
            return (col[key], s) if key in col else None

        red = RowReducer()
        for t in st:
            X = sum(pl[i] for i in t)
            ps = (j + X) % 2
            scol = {(a, b): col[("s", t, a, b)] for a in range(A.dim) for b in range(A.dim)
                    if ("s", t, a, b) in col}
            # sigma(t) is a superderivation of A
            for a in range(A.dim):
                for b in range(A.dim):
                    eqs = {}
                    for c, x in A.mul_basis(a, b).items():
                        for k in range(A.dim):
                            if (c, k) in scol:
                                _acc(eqs.setdefault(k, {}), scol[(c, k)], x)
                    for c in range(A.dim):
                        if (a, c) in scol:
                            for k, x in A.mul_basis(c, b).items():
                                _acc(eqs.setdefault(k, {}), scol[(a, c)], -x)
                    e = Scalar(-1 if (pa[a] * ps) % 2 else 1)
                    for c in range(A.dim):
                        if (b, c) in scol:
                            for k, x in A.mul_basis(a, c).items():
                                _acc(eqs.setdefault(k, {}), scol[(b, c)], -e * x)
                    for row in eqs.values():
                        if row:
                            red.add(row)
            # condition (2) in the last slot
            for a in range(A.dim):
                e = Scalar(-1 if (pa[a] * ps) % 2 else 1)
                for y in range(L.dim):
                    eqs = {}
                    for z, x in S.act_basis(a, y).items():
                        for k in range(L.dim):
                            hit = fv(t + (z,), k)
                            if hit:
                                _acc(eqs.setdefault(k, {}), hit[0], x * hit[1])
                    for l in range(L.dim):
                        hit = fv(t + (y,), l)
                        if hit:
                            for k, x in S.act_basis(a, l).items():
                                _acc(eqs.setdefault(k, {}), hit[0], -e * x * hit[1])
                    for b in range(A.dim):
                        if (a, b) in scol:
                            for k, x in S.act_basis(b, y).items():
                                _acc(eqs.setdefault(k, {}), scol[(a, b)], -x)
                    for row in eqs.values():
                        if row:
                            red.add(row)
        free, kernel = red.kernel_basis(len(unknowns))
        for fcol, v in zip(free, kernel):
            cvals, csym = {}, {}
            for i, x in v.items():
                u = unknowns[i]
                if u[0] == "v":
                    cvals.setdefault(u[1], {})[u[2]] = x
                else:
                    csym.setdefault(u[1], {}).setdefault(u[2], {})[u[3]] = x
            els.append(MultiDerivation.from_canonical(S, n, cvals, csym))
            keys.append(unknowns[fcol])
            pars.append(j)
    return MDBasis(S, n, els, keys, pars)


def _acc(row, c, x):
    y = row.get(c, ZERO) + x
    if y:
        row[c] = y
    else:
        row.pop(c, None)


# ---------------------------------------------------------------- structures

def structure_to_multider(S):
    """m = the bracket of L, with symbol the anchor."""
    L, A = S.L, S.A
    vals = {}
    for (i, j, k), x in L.bracket.items():
        vals.setdefault((i, j), {})[k] = x
    sym = {}
    for x in range(L.dim):
        D = {a: dict(col) for a, col in enumerate(S.rho_basis(x).cols) if col}
        if D:
            sym[(x,)] = D
    return MultiDerivation(S, 1, vals, sym)


def multider_to_structure(m, name=None):
    """(bracket, anchor) of an even m in Der^1 with [m, m] = 0.

    Returns the LieRinehartStructure on the same A and action; raises
    ValueError when m is not even, [m, m] != 0, or the result fails an axiom.
    """
    if m.arity != 1:
        raise ValueError("need a multiderivation of arity 1")
    if m.parity != 0:
        raise ValueError("the bracket must be even")
    if not nr_bracket(m, m).is_zero():
        raise ValueError("[m, m] != 0")
    S = m.S
    n = S.L.dim
    br = {(i, j, k): x for (i, j), v in m.values.items() for k, x in v.items()}
    L = LieSuperAlgebra(S.L.basis, SparseTensor3((n, n, n), br), name=S.L.name)
    anc = {(t[0], a, b): x for t, D in m.symbol.items() for a, col in D.items()
           for b, x in col.items()}
    T = LieRinehartStructure(S.A, L, S.action, SparseTensor3((n, S.A.dim, S.A.dim), anc),
                             name=name or S.name)
    rep = is_lie_rinehart(T)
    if not rep.ok:
        v = rep.violations[0]
        raise ValueError("not a Lie-Rinehart structure: %s %s" % (v.get("check"), v["identity"]))
    return T
