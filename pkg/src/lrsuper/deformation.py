"""Truncated formal deformations of the bracket and anchor.

Only the bracket of L and the anchor deform; A and its action stay fixed.
Equivalences are even A-linear formal automorphisms Phi_t = id + sum t^i phi_i,
and ``apply_equivalence`` pushes a deformation forward:

    m'_t(x, y) = Phi_t m_t(Phi_t^{-1} x, Phi_t^{-1} y),

so m'_1 = m_1 - delta(phi_1).  The obstruction to extending an order-N
deformation is

    theta_N(a,b,c) = sum_{i+j=N+1, i,j>=1} m_i(a, m_j(b,c)) - m_i(m_j(a,b), c)
                     - (-1)^{|a||b|} m_i(b, m_j(a,c))
                   = -1/2 sum_{i+j=N+1, i,j>=1} [m_i, m_j].
"""

import itertools
import random
from fractions import Fraction

from .cohomology import delta
from .exactmath import ONE, ZERO, RowReducer, Scalar
from .gradedcore import CheckReport, axpy, vec_str
from .lierinehart import FALSIFY_VALUES
from .multider import (
    MultiDerivation, _der_add, _rho_vec, md_basis, nr_bracket, structure_to_multider,
)

__all__ = [
    "MAX_ORDER", "TruncatedDeformation", "FormalAutomorphism", "a_linear_maps",
    "check_deformation", "infinitesimal", "apply_equivalence",
    "apply_equivalence_inverse_route", "pullback", "ObstructionCochain", "obstruction",
    "extend", "random_automorphism", "pushforward_deformation",
]

MAX_ORDER = 6
HALF = Scalar(Fraction(1, 2))


def _sgn(k):
    return -1 if k % 2 else 1


class TruncatedDeformation:
    """m_t = m_0 + t m_1 + ... + t^N m_N with m_0 the structure's bracket."""

    def __init__(self, S, coefficients):
        coefficients = list(coefficients)
        if not coefficients:
            raise ValueError("need at least m_0")
        if len(coefficients) - 1 > MAX_ORDER:
            raise ValueError("order above %d is not supported" % MAX_ORDER)
        m = structure_to_multider(S)
        if coefficients[0] != m:
            raise ValueError("m_0 must be the bracket of the structure")
        for i, c in enumerate(coefficients):
            if c.arity != 1:
                raise ValueError("m_%d must have arity 1" % i)
            if c.parity != 0:
                raise ValueError("m_%d must be even" % i)
        self.S = S
        self.coefficients = coefficients

    @classmethod
    def trivial(cls, S, order):
        m = structure_to_multider(S)
        return cls(S, [m] + [MultiDerivation.zero(S, 1) for _ in range(order)])

    @property
    def order(self):
        return len(self.coefficients) - 1

    def __getitem__(self, i):
        return self.coefficients[i]

    def __eq__(self, other):
        return isinstance(other, TruncatedDeformation) and self.coefficients == other.coefficients

    def truncated(self, order):
        return TruncatedDeformation(self.S, self.coefficients[:order + 1])

    def to_json(self):
        return {"order": self.order, "coefficients": [c.to_json() for c in self.coefficients]}

    @classmethod
    def from_json(cls, S, doc):
        coeffs = [MultiDerivation.from_json(S, c) for c in doc["coefficients"]]
        if len(coeffs) != int(doc["order"]) + 1:
            raise ValueError("order does not match the number of coefficients")
        return cls(S, coeffs)


class FormalAutomorphism:
    """Phi_t = id + sum_{i=1..N} t^i phi_i with even A-linear phi_i.

    Each phi_i is an arity 0 multiderivation with zero symbol; A-linearity
    is what keeps the action of A unchanged under the pushforward.
    """

    def __init__(self, S, phis):
        phis = list(phis)
        if len(phis) > MAX_ORDER:
            raise ValueError("order above %d is not supported" % MAX_ORDER)
        for i, p in enumerate(phis, 1):
            if p.arity != 0:
                raise ValueError("phi_%d must be a linear map (arity 0)" % i)
            if p.parity != 0:
                raise ValueError("phi_%d must be even" % i)
            if p.symbol:
                raise ValueError("phi_%d must have zero symbol" % i)
            if not _is_a_linear(S, p):
                raise ValueError("phi_%d is not A-linear" % i)
        self.S = S
        self.phis = phis

    @property
    def order(self):
        return len(self.phis)

    def term(self, i):
        """phi_i with phi_0 = id."""
        if i == 0:
            return MultiDerivation(self.S, 0, {(x,): {x: ONE} for x in range(self.S.L.dim)})
        if i <= len(self.phis):
            return self.phis[i - 1]
        return MultiDerivation.zero(self.S, 0)

    def inverse(self, order=None):
        """Truncated inverse: psi_k = -sum_{p=1..k} phi_p psi_{k-p}."""
        N = self.order if order is None else order
        psis = [self.term(0)]
        for k in range(1, N + 1):
            acc = MultiDerivation.zero(self.S, 0)
            for p in range(1, k + 1):
                acc = acc - _compose_maps(self.term(p), psis[k - p])
            psis.append(acc)
        return FormalAutomorphism(self.S, psis[1:])

    def to_json(self):
        return {"order": self.order, "phis": [p.to_json() for p in self.phis]}


def _compose_maps(f, g):
    """f o g for arity 0 maps (values only)."""
    L = f.S.L
    return MultiDerivation(f.S, 0, {(x,): f.evaluate([g.value((x,))]) for x in range(L.dim)})


def _is_a_linear(S, phi):
    for a in range(S.A.dim):
        for x in range(S.L.dim):
            r = phi.evaluate([S.act_basis(a, x)])
            axpy(r, -ONE, S.act({a: ONE}, phi.value((x,))))
            if r:
                return False
    return True


def a_linear_maps(S):
    """Basis of the even A-linear endomorphisms of L (as arity 0 multiderivations)."""
    L = S.L
    pl = L.parities
    unknowns = [(k, x) for x in range(L.dim) for k in range(L.dim) if pl[k] == pl[x]]
    col = {u: i for i, u in enumerate(unknowns)}
    red = RowReducer()
    for a in range(S.A.dim):
        for x in range(L.dim):
            eqs = {}
            # phi(a x) - a phi(x)
            for z, c in S.act_basis(a, x).items():
                for k in range(L.dim):
                    if (k, z) in col:
                        eqs.setdefault(k, {})
                        _acc(eqs[k], col[(k, z)], c)
            for l in range(L.dim):
                if (l, x) in col:
                    for k, c in S.act_basis(a, l).items():
                        eqs.setdefault(k, {})
                        _acc(eqs[k], col[(l, x)], -c)
            for row in eqs.values():
                if row:
                    red.add(row)
    _, ker = red.kernel_basis(len(unknowns))
    out = []
    for v in ker:
        vals = {}
        for i, c in v.items():
            k, x = unknowns[i]
            vals.setdefault((x,), {})[k] = c
        out.append(MultiDerivation(S, 0, vals))
    return out


def _acc(row, c, x):
    y = row.get(c, ZERO) + x
    if y:
        row[c] = y
    else:
        row.pop(c, None)


# ---------------------------------------------------------------- checks

def _jacobi_coefficient(d, k):
    """t^k coefficient of m_t(x1, m_t(x2, x3)) - m_t(m_t(x1, x2), x3)
    - (-1)^{|x1||x2|} m_t(x2, m_t(x1, x3)) on every basis triple."""
    L = d.S.L
    pl = L.parities
    out = {}
    for t in itertools.product(range(L.dim), repeat=3):
        x1, x2, x3 = t
        e = Scalar(_sgn(pl[x1] * pl[x2]))
        r = {}
        for i in range(k + 1):
            mi, mj = d[i], d[k - i]
            axpy(r, ONE, mi.evaluate([{x1: ONE}, mj.value((x2, x3))]))
            axpy(r, -ONE, mi.evaluate([mj.value((x1, x2)), {x3: ONE}]))
            axpy(r, -e, mi.evaluate([{x2: ONE}, mj.value((x1, x3))]))
        if r:
            out[t] = r
    return out


def _bracket_sum(coeffs, k, lo=0):
    total = MultiDerivation.zero(coeffs[0].S, 2)
    for i in range(lo, k - lo + 1):
        j = k - i
        if i < len(coeffs) and j < len(coeffs):
            total = total + nr_bracket(coeffs[i], coeffs[j])
    return total


def check_deformation(d):
    """Deformation equation at every order 1..N, values and symbol sector.

    The value sector is evaluated directly on basis triples; the symbol
    sector is the symbol of sum_{i+j=k} [m_i, m_j].
    """
    rep = CheckReport("deformation")
    names = d.S.L.basis.names
    for k in range(1, d.order + 1):
        for t, r in _jacobi_coefficient(d, k).items():
            rep.add("deformation equation, order %d" % k, t, vec_str(r, names))
        rep.checked += 1
        br = _bracket_sum(d.coefficients, k)
        for t, D in sorted(br.symbol.items()):
            rep.add("symbol of sum [m_i, m_j], order %d" % k, t, str(D))
    return rep


def infinitesimal(d):
    """(i, m_i, delta m_i is zero) for the first nonzero m_i, or None if trivial."""
    for i in range(1, d.order + 1):
        if not d[i].is_zero():
            return i, d[i], delta(2, d[i]).is_zero()
    return None


# ---------------------------------------------------------------- equivalences

def apply_equivalence(phi, d):
    """Pushforward of d by Phi_t, solved order by order.

    From m'_t(Phi x, Phi y) = Phi m_t(x, y):
        m'_k(x,y) = sum_{p+q=k} phi_p m_q(x,y) - sum_{a<k, b+c=k-a} m'_a(phi_b x, phi_c y)
        sigma'_k(x) = sigma_k(x) - sum_{p>=1} sigma'_{k-p}(phi_p x).
    """
    S = d.S
    L = S.L
    N = d.order
    out = [d[0]]
    for k in range(1, N + 1):
        vals = {}
        for x, y in itertools.product(range(L.dim), repeat=2):
            r = {}
            for p in range(k + 1):
                axpy(r, ONE, phi.term(p).evaluate([d[k - p].value((x, y))]))
            for a in range(k):
                for b in range(k - a + 1):
                    c = k - a - b
                    u = phi.term(b).value((x,))
                    w = phi.term(c).value((y,))
                    axpy(r, -ONE, out[a].evaluate([u, w]))
            if r:
                vals[(x, y)] = r
        sym = {}
        for x in range(L.dim):
            D = {}
            _der_add(D, ONE, d[k].sym((x,)))
            for p in range(1, k + 1):
                _der_add(D, -ONE, out[k - p].evaluate_symbol([phi.term(p).value((x,))]))
            if D:
                sym[(x,)] = D
        out.append(MultiDerivation(S, 1, vals, sym))
    return TruncatedDeformation(S, out)


def apply_equivalence_inverse_route(phi, d):
    """Same pushforward via the truncated inverse Psi = Phi^{-1}:
    m'_t = Phi m_t(Psi x, Psi y), sigma'_t(x) = sigma_t(Psi x)."""
    S = d.S
    L = S.L
    N = d.order
    psi = phi.inverse(N)
    out = [d[0]]
    for k in range(1, N + 1):
        vals = {}
        for x, y in itertools.product(range(L.dim), repeat=2):
            r = {}
            for p, q, a in itertools.product(range(k + 1), repeat=3):
                b = k - p - q - a
                if b < 0:
                    continue
                inner = d[q].evaluate([psi.term(a).value((x,)), psi.term(b).value((y,))])
                axpy(r, ONE, phi.term(p).evaluate([inner]))
            if r:
                vals[(x, y)] = r
        sym = {}
        for x in range(L.dim):
            D = {}
            for q in range(k + 1):
                _der_add(D, ONE, d[q].evaluate_symbol([psi.term(k - q).value((x,))]))
            if D:
                sym[(x,)] = D
        out.append(MultiDerivation(S, 1, vals, sym))
    return TruncatedDeformation(S, out)


def pullback(phi, d):
    """The deformation d' with Phi_t m'_t(x, y) = m_t(Phi_t x, Phi_t y).

    This is the pushforward by the truncated inverse; m'_1 = m_1 + delta(phi_1).
    """
    return apply_equivalence(phi.inverse(d.order), d)


# ---------------------------------------------------------------- obstructions

class ObstructionCochain:
    """theta_N in C^3, from both formulas."""

    def __init__(self, N, theta, def_values, forms_agree, cocycle):
        self.N = N
        self.theta = theta
        self.def_values = def_values
        self.forms_agree = forms_agree
        self.cocycle = cocycle

    def to_json(self):
        return {"N": self.N, "theta": self.theta.to_json(),
                "forms_agree": self.forms_agree, "cocycle": self.cocycle}


def _theta_def(d):
    """Values of theta_N from the defining sum (i + j = N + 1, i, j >= 1)."""
    L = d.S.L
    pl = L.parities
    N = d.order
    vals = {}
    for t in itertools.product(range(L.dim), repeat=3):
        a, b, c = t
        e = Scalar(_sgn(pl[a] * pl[b]))
        r = {}
        for i in range(1, N + 1):
            j = N + 1 - i
            if not 1 <= j <= N:
                continue
            mi, mj = d[i], d[j]
            axpy(r, ONE, mi.evaluate([{a: ONE}, mj.value((b, c))]))
            axpy(r, -ONE, mi.evaluate([mj.value((a, b)), {c: ONE}]))
            axpy(r, -e, mi.evaluate([{b: ONE}, mj.value((a, c))]))
        if r:
            vals[t] = r
    return vals


def obstruction(d):
    """theta_N by the defining sum and by -1/2 sum [m_i, m_j]; checks delta theta = 0."""
    N = d.order
    lemma = _bracket_sum(d.coefficients, N + 1, lo=1).scaled(-HALF)
    def_vals = _theta_def(d)
    agree = def_vals == lemma.values
    cocycle = delta(3, lemma).is_zero()
    return ObstructionCochain(N, lemma, def_vals, agree, cocycle)


def extend(d, theta=None):
    """Solve delta m_{N+1} = theta_N.

    Returns (extended deformation or None, certificate) where the
    certificate records rank(B^3 generators) and rank with theta appended.
    """
    S = d.S
    if theta is None:
        theta = obstruction(d).theta
    src = md_basis(1, S)
    m = d[0]
    images = [delta(2, b, m) for b in src.elements]
    keys = {}
    for im in images + [theta]:
        for k in im.raw():
            keys.setdefault(k, len(keys))
    red = RowReducer()
    ncols = len(images)
    rows = {}
    for c, im in enumerate(images):
        for k, x in im.raw().items():
            rows.setdefault(keys[k], {})[c] = x
    for k, x in theta.raw().items():
        rows.setdefault(keys[k], {})[ncols] = x
    for i in sorted(rows):
        red.add(rows[i])
    aug_rank = red.rank
    base = RowReducer()
    for i in sorted(rows):
        base.add({c: x for c, x in rows[i].items() if c != ncols})
    cert = {"rank_B3_generators": base.rank, "rank_with_theta": aug_rank,
            "theta_in_B3": aug_rank == base.rank}
    if ncols in red.pivots:
        return None, cert
    coeffs = [ZERO] * ncols
    for c, prow in red.pivots.items():
        coeffs[c] = prow.get(ncols, ZERO)
    new = src.combination(coeffs).part(0)
    return TruncatedDeformation(S, d.coefficients + [new]), cert


# ---------------------------------------------------------------- generators

def random_automorphism(S, order, rng, density=0.6):
    """Phi_t with random even A-linear phi_i (coefficients from a small set)."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    basis = a_linear_maps(S)
    phis = []
    for _ in range(order):
        p = MultiDerivation.zero(S, 0)
        for b in basis:
            if rng.random() < density:
                p = p.combine(b, ONE, rng.choice(FALSIFY_VALUES))
        phis.append(p)
    return FormalAutomorphism(S, phis)


def pushforward_deformation(S, order, rng, base=None):
    """(Phi, pushforward of ``base`` (default: trivial) by a random Phi)."""
    phi = random_automorphism(S, order, rng)
    base = base if base is not None else TruncatedDeformation.trivial(S, order)
    return phi, apply_equivalence(phi, base)
