import os

import pytest
from hypothesis import HealthCheck, settings

from lrsuper import catalog

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

RIGID = "LR:A:1|1:1/L:1|1:1#1"


@pytest.fixture(scope="session")
def rigid():
    """The rigid (1|1, 1|1) example at lambda = 1."""
    return catalog.get_row(RIGID).instantiate({"lam": 1})


def verified_rows():
    return [r for r in catalog.rows() if r.form in ("printed", "corrected")]


def first_instance(row):
    env = row.sample_envs(1)[0] if row.params() else {}
    return env, row.instantiate(env)


def single_constant_perturbations(S, rng):
    """Structures differing from S in one bracket, action or anchor constant (bumped by 1).

    Bracket bumps keep super-skew symmetry; the order is shuffled by ``rng``.
    """
    from lrsuper.exactmath import ONE, SparseTensor3
    from lrsuper.gradedcore import LieSuperAlgebra
    from lrsuper.lierinehart import LieRinehartStructure

    L, A = S.L, S.A
    pl, pa = L.parities, A.parities
    n = L.dim
    cands = [("bracket", (i, j, k)) for i in range(n) for j in range(i, n) for k in range(n)
             if not (i == j and not pl[i]) and (pl[i] + pl[j] + pl[k]) % 2 == 0]
    cands += [("anchor", (x, a, b)) for x in range(n) for a in range(A.dim) for b in range(A.dim)
              if (pl[x] + pa[a] + pa[b]) % 2 == 0]
    cands += [("action", (a, x, y)) for a in range(A.dim) for x in range(n) for y in range(n)
              if (pa[a] + pl[x] + pl[y]) % 2 == 0]
    rng.shuffle(cands)
    for kind, (i, j, k) in cands:
        if kind == "bracket":
            br = dict(L.bracket.items())
            s = ONE if pl[i] and pl[j] else -ONE
            br[(i, j, k)] = br.get((i, j, k), 0 * ONE) + ONE
            if i != j:
                br[(j, i, k)] = br.get((j, i, k), 0 * ONE) + s
            br = {key: v for key, v in br.items() if v}
            L2 = LieSuperAlgebra(L.basis, SparseTensor3((n, n, n), br), name=L.name)
            yield kind, (i, j, k), LieRinehartStructure(A, L2, S.action, S.anchor)
        elif kind == "action":
            act = dict(S.action.items())
            act[(i, j, k)] = act.get((i, j, k), 0 * ONE) + ONE
            act = {key: v for key, v in act.items() if v}
            yield kind, (i, j, k), LieRinehartStructure(
                A, L, SparseTensor3(S.action.dims, act), S.anchor)
        else:
            anc = dict(S.anchor.items())
            anc[(i, j, k)] = anc.get((i, j, k), 0 * ONE) + ONE
            anc = {key: v for key, v in anc.items() if v}
            yield kind, (i, j, k), LieRinehartStructure(
                A, L, S.action, SparseTensor3(S.anchor.dims, anc))


SUITE_ROWS = [
    "LR:A:1|1:1/L:1|1:1#1", "LR:A:1|1:1/L:1|1:2#3", "LR:A:1|1:1/L:2|1:1#1",
    "LR:A:1|1:1/L:2|2:2#2", "LR:A:2|0:1/L:2|1:1#1", "LR:A:1|1:1/L:3|0:2#1",
    "LR:A:2|0:1/L:2|2:9#2", "LR:A:2|0:2/L:1|1:2#1", "LR:A:1|1:1/L:2|0:2#1",
    "LR:A:2|0:2/L:2|1:5#1", "LR:A:2|0:1/L:1|2:2#1", "LR:A:1|1:1/L:2|2:16#2",
    "LR:A:2|0:1/L:2|0:2#2", "LR:A:2|0:2/L:2|2:15#2", "LR:A:1|1:1/L:1|2:4#2",
    "LR:A:2|0:1/L:1|0:1#1",
]


def abelian_base():
    """Trivial (A:1|0:1, L:3|0:1): m = 0, so every cochain is a cocycle and B^3 = 0."""
    from lrsuper.lierinehart import LieRinehartStructure
    return LieRinehartStructure(catalog.instantiate("A:1|0:1"), catalog.instantiate("L:3|0:1"))


def unextendable_bases(S):
    """Valid deformations of ``abelian_base()`` whose obstruction is nonzero.

    Order 1: t m_1 with [m_1, m_1] != 0 (every m_1 is a cocycle since m = 0).
    Order 2: t m_1 + t^2 m_2 with m_1 a Lie bracket (so [m_1, m_1] = 0) and
    [m_1, m_2] != 0.
    """
    from lrsuper.deformation import TruncatedDeformation
    from lrsuper.lierinehart import LieRinehartStructure
    from lrsuper.multider import MultiDerivation, md_basis, nr_bracket, structure_to_multider

    def bracket_of(l_id):
        m = structure_to_multider(LieRinehartStructure(S.A, catalog.instantiate(l_id)))
        return MultiDerivation(S, 1, m.values)

    m0 = structure_to_multider(S)
    els = md_basis(1, S).elements
    non_lie = [a + b for a in els for b in els if not nr_bracket(a + b, a + b).is_zero()]
    out = [TruncatedDeformation(S, [m0, non_lie[0]]), TruncatedDeformation(S, [m0, non_lie[-1]])]
    for l_id in ("L:3|0:4", "L:3|0:6"):
        m1 = bracket_of(l_id)
        m2 = next(b for b in els if not nr_bracket(m1, b).is_zero())
        out.append(TruncatedDeformation(S, [m0, m1, m2]))
    return out


def deformation_suite(seed=0):
    """The 20 pushforward deformations (orders 1-3, fixed seed).

    16 push the trivial deformation of a catalog row forward by a random
    Phi_t; 4 push forward an unextendable deformation of ``abelian_base()``.
    Items are dicts with keys label, S, phi, base, d.
    """
    import random

    from lrsuper.cohomology import delta
    from lrsuper.deformation import TruncatedDeformation, pushforward_deformation

    rng = random.Random(seed)
    out = []
    for n, rid in enumerate(SUITE_ROWS):
        row = catalog.get_row(rid)
        env = row.sample_envs(1)[0] if row.params() else {}
        S = row.instantiate(env)
        order = 1 + n % 3
        base = TruncatedDeformation.trivial(S, order)
        # redraw until delta(phi_1) != 0, so the pushforward is not trivial
        for _ in range(20):
            phi, d = pushforward_deformation(S, order, rng, base)
            if not delta(1, phi.phis[0]).is_zero():
                break
        out.append({"label": "%s order %d" % (rid, order), "S": S, "phi": phi, "base": base, "d": d})
    S = abelian_base()
    for base in unextendable_bases(S):
        phi, d = pushforward_deformation(S, base.order, rng, base)
        out.append({"label": "abelian base order %d" % base.order, "S": S, "phi": phi,
                    "base": base, "d": d})
    return out
