"""Lie-Rinehart superalgebras: an A-module structure on L plus an anchor.

action[a, x, y] is the coefficient of f_y in e_a . f_x and
anchor[x, a, b] is the coefficient of e_b in rho(f_x)(e_a).
"""

import random
from fractions import Fraction

from .exactmath import I, ONE, ZERO, Scalar, SparseTensor3
from .gradedcore import (
    CheckReport, GradedLinearMap, LieSuperAlgebra, SuperBasis, axpy,
    check_associative, check_super_jacobi, check_super_skew,
    check_supercommutative, check_unital, der_bracket, leibniz_report, sign,
    vec_str,
)

__all__ = [
    "LieRinehartStructure", "trivial_action", "null_anchor",
    "check_module", "check_anchor", "check_compatibility", "is_lie_rinehart",
    "crossed_product", "verify_table", "random_structure_constants",
    "FALSIFY_VALUES", "is_trivial_structure", "falsify_only_trivial", "invariant_report",
]


class LieRinehartStructure:

    def __init__(self, A, L, action=None, anchor=None, name=None):
        if action is None:
            action = trivial_action(A, L)
        if anchor is None:
            anchor = null_anchor(A, L)
        if not isinstance(action, SparseTensor3):
            action = SparseTensor3((A.dim, L.dim, L.dim), action)
        if not isinstance(anchor, SparseTensor3):
            anchor = SparseTensor3((L.dim, A.dim, A.dim), anchor)
        if action.dims != (A.dim, L.dim, L.dim):
            raise ValueError("action tensor has dims %r" % (action.dims,))
        if anchor.dims != (L.dim, A.dim, A.dim):
            raise ValueError("anchor tensor has dims %r" % (anchor.dims,))
        pa, pl = A.parities, L.parities
        for (a, x, y), _ in action.items():
            if (pa[a] + pl[x] - pl[y]) % 2:
                raise ValueError("action breaks |ax| = |a|+|x| at %r" % ((a, x, y),))
        for (x, a, b), _ in anchor.items():
            if (pa[a] + pl[x] - pa[b]) % 2:
                raise ValueError("anchor breaks |rho_x(a)| = |a|+|x| at %r" % ((x, a, b),))
        self.A = A
        self.L = L
        self.action = action
        self.anchor = anchor
        self.name = name
        self._rho = [GradedLinearMap(A.basis, A.basis,
                                     [dict(anchor.fiber(x, a)) for a in range(A.dim)],
                                     pl[x])
                     for x in range(L.dim)]

    # basic operations on sparse vectors

    def act_basis(self, a, x):
        return self.action.fiber(a, x)

    def act(self, av, xv):
        out = {}
        for a, s in av.items():
            for x, t in xv.items():
                axpy(out, s * t, self.action.fiber(a, x))
        return out

    def rho_basis(self, x):
        return self._rho[x]

    def rho(self, xv):
        """rho of a sparse L-vector, as a (possibly inhomogeneous) map."""
        cols = [{} for _ in range(self.A.dim)]
        for x, s in xv.items():
            for a, c in enumerate(self._rho[x].cols):
                axpy(cols[a], s, c)
        return GradedLinearMap(self.A.basis, self.A.basis, cols)

    def rho_apply(self, xv, av):
        out = {}
        for x, s in xv.items():
            r = self._rho[x]
            for a, t in av.items():
                axpy(out, s * t, r.cols[a])
        return out

    def has_trivial_action(self):
        return self.action == trivial_action(self.A, self.L)

    def has_null_anchor(self):
        return len(self.anchor) == 0

    def __repr__(self):
        return "LieRinehartStructure(%s)" % (self.name or "%r, %r" % (self.A, self.L))


def trivial_action(A, L):
    """The unit acts as the identity, all other basis elements act as zero."""
    if A.unit_index is None:
        return SparseTensor3((A.dim, L.dim, L.dim))
    u = A.unit_index
    return SparseTensor3((A.dim, L.dim, L.dim), {(u, x, x): ONE for x in range(L.dim)})


def null_anchor(A, L):
    return SparseTensor3((L.dim, A.dim, A.dim))


def check_module(S):
    A, L = S.A, S.L
    rep = CheckReport("module")
    names = L.basis.names
    for a in range(A.dim):
        for b in range(A.dim):
            ab = A.mul_basis(a, b)
            for x in range(L.dim):
                r = S.act({a: ONE}, S.act_basis(b, x))
                axpy(r, -ONE, S.act(ab, {x: ONE}))
                rep.checked += 1
                if r:
                    rep.add("a(bx) = (ab)x", (a, b, x), vec_str(r, names))
    if A.unit_index is None:
        rep.add("unit acts as identity", (), "A has no unit")
    else:
        for x in range(L.dim):
            r = axpy(dict(S.act_basis(A.unit_index, x)), -ONE, {x: ONE})
            rep.checked += 1
            if r:
                rep.add("1x = x", (x,), vec_str(r, names))
    return rep


def check_anchor(S):
    A, L = S.A, S.L
    rep = CheckReport("anchor")
    pl = L.parities
    anames = A.basis.names
    for x in range(L.dim):
        sub = leibniz_report(A, S.rho_basis(x), pl[x])
        for v in sub.violations:
            rep.add("rho_x is a superderivation", [x] + v["at"], v["residual"])
        rep.checked += sub.checked
    for x in range(L.dim):
        for y in range(L.dim):
            lhs = S.rho(L.br_basis(x, y))
            rhs = der_bracket(S.rho_basis(x), S.rho_basis(y))
            r = lhs.combine(rhs, ONE, -ONE)
            rep.checked += 1
            if not r.is_zero():
                rep.add("rho_[x,y] = [rho_x, rho_y]", (x, y), _map_str(r, anames))
    for a in range(A.dim):
        for x in range(L.dim):
            rax = S.act_basis(a, x)
            for b in range(A.dim):
                r = S.rho_apply(rax, {b: ONE})
                axpy(r, -ONE, A.mul({a: ONE}, S.rho_basis(x).cols[b]))
                rep.checked += 1
                if r:
                    rep.add("rho_{ax}(b) = a rho_x(b)", (a, x, b), vec_str(r, anames))
    return rep


def _map_str(D, names):
    parts = []
    for j, c in enumerate(D.cols):
        if c:
            parts.append("%s -> %s" % (names[j], vec_str(c, names)))
    return "; ".join(parts) or "0"


def check_compatibility(S):
    """[x, a y] = rho_x(a) y + (-1)^{|a||x|} a [x, y] on all basis triples."""
    A, L = S.A, S.L
    rep = CheckReport("compatibility")
    pa, pl = A.parities, L.parities
    for x in range(L.dim):
        for a in range(A.dim):
            ra = S.rho_basis(x).cols[a]
            for y in range(L.dim):
                r = L.br({x: ONE}, S.act_basis(a, y))
                axpy(r, -ONE, S.act(ra, {y: ONE}))
                axpy(r, Scalar(-sign(pa[a] * pl[x])), S.act({a: ONE}, L.br_basis(x, y)))
                rep.checked += 1
                if r:
                    rep.add("[x,ay] = rho_x(a)y + (-1)^{|a||x|} a[x,y]", (x, a, y),
                            vec_str(r, L.basis.names))
    return rep


def is_lie_rinehart(S):
    """All axioms: A supercommutative unital associative, L a Lie
    superalgebra, L an A-module, rho an A-linear Lie morphism into Der(A),
    and the compatibility condition."""
    rep = CheckReport("lie-rinehart")
    for sub in (check_supercommutative(S.A), check_associative(S.A), check_unital(S.A),
                check_super_skew(S.L), check_super_jacobi(S.L),
                check_module(S), check_anchor(S), check_compatibility(S)):
        for v in sub.violations:
            v = dict(v)
            v["check"] = sub.name
            rep.violations.append(v)
        rep.checked += sub.checked
    return rep


# ---------------------------------------------------------------- crossed product

def crossed_product(A, g, sigma, name=None):
    """Lie-Rinehart structure on A (x) g from an even Lie morphism g -> Der(A).

    ``sigma`` is a list of GradedLinearMaps on A, one per basis element of g.
    [a x, b y] = (-1)^{|x||b|} ab [x,y] + a sigma_x(b) y
                 - (-1)^{(|a|+|x|)(|b|+|y|)} b sigma_y(a) x.
    """
    if isinstance(sigma, SparseTensor3):
        sigma = [GradedLinearMap(A.basis, A.basis,
                                 [dict(sigma.fiber(x, a)) for a in range(A.dim)])
                 for x in range(g.dim)]
    sigma = list(sigma)
    if len(sigma) != g.dim:
        raise ValueError("sigma needs one derivation per basis element of g")
    pa, pg = A.parities, g.parities
    for x, D in enumerate(sigma):
        if D.parity not in (None, pg[x]) and not D.is_zero():
            raise ValueError("sigma(%s) must have parity %d" % (g.basis.names[x], pg[x]))
        D = GradedLinearMap(A.basis, A.basis, D.cols, pg[x])
        sigma[x] = D
        if not leibniz_report(A, D, pg[x]):
            raise ValueError("sigma(%s) is not a superderivation" % g.basis.names[x])
    for x in range(g.dim):
        for y in range(g.dim):
            lhs = GradedLinearMap(A.basis, A.basis, [{} for _ in range(A.dim)], (pg[x] + pg[y]) % 2)
            for z, c in g.br_basis(x, y).items():
                lhs = lhs.combine(sigma[z], ONE, c)
            if not lhs.combine(der_bracket(sigma[x], sigma[y]), ONE, -ONE).is_zero():
                raise ValueError("sigma is not a Lie morphism at (%d, %d)" % (x, y))

    pairs = [(a, x) for a in range(A.dim) for x in range(g.dim)]
    pairs.sort(key=lambda ax: (pa[ax[0]] + pg[ax[1]]) % 2)
    index = {ax: t for t, ax in enumerate(pairs)}
    basis = SuperBasis([("%s*%s" % (A.basis.names[a], g.basis.names[x]), (pa[a] + pg[x]) % 2)
                        for a, x in pairs])
    n = len(pairs)

    def tensor(av, x):
        return {index[(a, x)]: c for a, c in av.items()}

    br = {}
    for s, (a, x) in enumerate(pairs):
        for t, (b, y) in enumerate(pairs):
            out = {}
            ab = A.mul_basis(a, b)
            for z, c in g.br_basis(x, y).items():
                axpy(out, Scalar(sign(pg[x] * pa[b])) * c, tensor(ab, z))
            axpy(out, ONE, tensor(A.mul({a: ONE}, sigma[x].cols[b]), y))
            e = sign(((pa[a] + pg[x]) * (pa[b] + pg[y])) % 2)
            axpy(out, Scalar(-e), tensor(A.mul({b: ONE}, sigma[y].cols[a]), x))
            for k, c in out.items():
                br[(s, t, k)] = c
    L = LieSuperAlgebra(basis, SparseTensor3((n, n, n), br), name=(name or "crossed") + ":L")

    act = {}
    for c in range(A.dim):
        for t, (b, y) in enumerate(pairs):
            for k, v in tensor(A.mul_basis(c, b), y).items():
                act[(c, t, k)] = v
    anc = {}
    for s, (a, x) in enumerate(pairs):
        for b in range(A.dim):
            for k, v in A.mul({a: ONE}, sigma[x].cols[b]).items():
                anc[(s, b, k)] = v
    return LieRinehartStructure(A, L, SparseTensor3((A.dim, n, n), act),
                                SparseTensor3((n, A.dim, A.dim), anc), name=name)


# ---------------------------------------------------------------- tables

def verify_table(rows, samples=3, jobs=1):
    """Run is_lie_rinehart on every row at ``samples`` parameter samples.

    ``rows`` are catalog LRRow objects.  Marker rows (no data) are counted
    but not verified.  Results are ordered by row id.
    """
    rows = sorted(rows, key=lambda r: r.sort_key)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_row, rows, [samples] * len(rows)))
    else:
        results = [_verify_row(r, samples) for r in rows]
    totals = {"rows": len(rows), "verified": 0, "passed": 0, "failed": 0,
              "markers": 0, "flagged": 0, "samples": samples}
    for res in results:
        st = res["status"]
        if st == "marker":
            totals["markers"] += 1
        elif st == "flagged":
            totals["flagged"] += 1
        else:
            totals["verified"] += 1
            totals["passed" if res["ok"] else "failed"] += 1
    return {"rows": results, "totals": totals}


def _verify_row(row, samples):
    if row.is_marker:
        return {"id": row.id, "status": "marker", "ok": None, "note": row.note}
    out = {"id": row.id, "status": row.form, "samples": []}
    ok = True
    envs = row.sample_envs(samples)
    if not envs:
        # no sample constructs; report parameter-admissible ones instead
        envs = row.raw_envs(samples) or [None]
    for env in envs:
        entry = {"params": {k: str(v) for k, v in sorted((env or {}).items())}}
        try:
            rep = is_lie_rinehart(row.instantiate(env))
            entry["ok"] = rep.ok
            entry["violations"] = rep.violations[:5]
        except ValueError as exc:
            entry["ok"] = False
            entry["violations"] = [{"check": "construction", "identity": str(exc)}]
        ok = ok and entry["ok"]
        out["samples"].append(entry)
    out["ok"] = ok
    if row.note:
        out["note"] = row.note
    return out


# ---------------------------------------------------------------- falsification

FALSIFY_VALUES = (Scalar(-2), Scalar(-1), Scalar(Fraction(-1, 2)), Scalar(Fraction(1, 2)),
                  ONE, Scalar(2), I, -I)


def random_structure_constants(S, rng, action=True, anchor=True, density=0.5):
    """A copy of S with random grading-respecting action and/or anchor constants.

    The unit keeps acting as the identity; every other constant is drawn from
    FALSIFY_VALUES with probability ``density``.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    A, L = S.A, S.L
    pa, pl = A.parities, L.parities
    act = dict(S.action.items())
    anc = dict(S.anchor.items())
    if action:
        act = {}
        for a in range(A.dim):
            for x in range(L.dim):
                if a == A.unit_index:
                    act[(a, x, x)] = ONE
                    continue
                for y in range(L.dim):
                    if (pa[a] + pl[x] - pl[y]) % 2 == 0 and rng.random() < density:
                        act[(a, x, y)] = rng.choice(FALSIFY_VALUES)
    if anchor:
        anc = {}
        for x in range(L.dim):
            for a in range(A.dim):
                if a == A.unit_index:
                    continue
                for b in range(A.dim):
                    if (pa[a] + pl[x] - pa[b]) % 2 == 0 and rng.random() < density:
                        anc[(x, a, b)] = rng.choice(FALSIFY_VALUES)
    return LieRinehartStructure(A, L, SparseTensor3(S.action.dims, act),
                                SparseTensor3(S.anchor.dims, anc), name=S.name)


def is_trivial_structure(S):
    return S.has_trivial_action() and S.has_null_anchor()


def falsify_only_trivial(A, L, trials=200, seed=0, density=0.5):
    """Random search for a nontrivial Lie-Rinehart structure on (A, L).

    Sampling can only corroborate a nonexistence claim, never prove it; the
    result records how many random candidates were tried and any that pass.
    """
    rng = random.Random(seed)
    base = LieRinehartStructure(A, L)
    found = []
    for t in range(trials):
        mode = t % 3
        S = random_structure_constants(base, rng, action=mode != 1, anchor=mode != 0,
                                       density=density)
        if is_trivial_structure(S):
            continue
        if is_lie_rinehart(S).ok:
            found.append({"trial": t, "action": S.action.to_json(), "anchor": S.anchor.to_json()})
    return {"A": A.name, "L": L.name, "trials": trials, "seed": seed,
            "nontrivial_found": len(found), "examples": found[:3]}


def invariant_report(structures):
    """Post-filter invariants over verified structures [(id, S)].

    abelian L, dim A <= 2     -> trivial action or null anchor
    L purely even or odd      -> odd elements of A act by 0
    A purely even, L purely odd -> null anchor
    """
    rep = CheckReport("classification invariants")
    for rid, S in structures:
        A, L = S.A, S.L
        n0, n1 = L.basis.dims
        a0, a1 = A.basis.dims
        if L.is_abelian() and A.dim <= 2:
            rep.checked += 1
            if not (S.has_trivial_action() or S.has_null_anchor()):
                rep.add("abelian L: trivial action or null anchor", [rid], "both nontrivial")
        if n0 == 0 or n1 == 0:
            rep.checked += 1
            for a in range(A.dim):
                if A.parities[a] and any(S.act_basis(a, x) for x in range(L.dim)):
                    rep.add("odd elements of A act by 0", [rid], A.basis.names[a])
        if a1 == 0 and n0 == 0:
            rep.checked += 1
            if not S.has_null_anchor():
                rep.add("purely even A, purely odd L: null anchor", [rid], "anchor nonzero")
    return rep
