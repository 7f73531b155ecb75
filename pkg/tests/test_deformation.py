import random

import pytest
from hypothesis import given, strategies as st

from lrsuper import catalog
from lrsuper.cohomology import (
    cocycle_basis, cohomology_report, coboundary_preimage, delta, same_subspace,
)
from lrsuper.deformation import (
    HALF, FormalAutomorphism, TruncatedDeformation, a_linear_maps, apply_equivalence,
    apply_equivalence_inverse_route, check_deformation, extend, infinitesimal, obstruction,
    pullback, pushforward_deformation, random_automorphism,
)
from lrsuper.exactmath import ONE, Scalar
from lrsuper.multider import MultiDerivation, md_basis, nr_bracket, structure_to_multider
from conftest import (
    RIGID, SUITE_ROWS, abelian_base, deformation_suite, first_instance, unextendable_bases,
)


def inst(id):
    return first_instance(catalog.get_row(id))[1]


@pytest.fixture(scope="module")
def suite():
    return deformation_suite()


# ---------------------------------------------------------------- types

def test_trivial_deformation(rigid):
    d = TruncatedDeformation.trivial(rigid, 3)
    assert d.order == 3 and check_deformation(d).ok
    assert infinitesimal(d) is None
    ob = obstruction(d)
    assert ob.theta.is_zero() and ob.forms_agree and ob.cocycle
    ext, cert = extend(d)
    assert ext is not None and ext[4].is_zero() and cert["theta_in_B3"]


def test_deformation_validation(rigid):
    m = structure_to_multider(rigid)
    B = md_basis(1, rigid)
    odd = B.elements[B.parities.index(1)]
    with pytest.raises(ValueError):
        TruncatedDeformation(rigid, [MultiDerivation.zero(rigid, 1)])
    with pytest.raises(ValueError):
        TruncatedDeformation(rigid, [m, odd])
    with pytest.raises(ValueError):
        TruncatedDeformation(rigid, [m, MultiDerivation.zero(rigid, 0)])
    with pytest.raises(ValueError):
        TruncatedDeformation(rigid, [])


def test_automorphism_validation(rigid):
    ident = a_linear_maps(rigid)[0]
    FormalAutomorphism(rigid, [ident])
    with pytest.raises(ValueError):
        FormalAutomorphism(rigid, [MultiDerivation.zero(rigid, 1)])
    swap = MultiDerivation(rigid, 0, {(1,): {0: ONE}})
    with pytest.raises(ValueError):
        FormalAutomorphism(rigid, [swap])
    # f1^1 -> f1^1 alone is not A-linear: e1^1 f1^1 = f1^0 is not fixed
    half = MultiDerivation(rigid, 0, {(1,): {1: ONE}})
    with pytest.raises(ValueError):
        FormalAutomorphism(rigid, [half])
    with pytest.raises(ValueError):
        FormalAutomorphism(rigid, [MultiDerivation(rigid, 0, {}, {(): {1: {1: ONE}}})])


def test_inverse_composes_to_identity():
    S = inst("LR:A:1|1:1/L:2|0:2#1")
    phi = random_automorphism(S, 3, random.Random(2), density=1.0)
    psi = phi.inverse()
    from lrsuper.deformation import _compose_maps
    for k in range(1, 4):
        acc = MultiDerivation.zero(S, 0)
        for p in range(k + 1):
            acc = acc + _compose_maps(phi.term(p), psi.term(k - p))
        assert acc.is_zero()


def test_json_round_trip(suite):
    for item in suite[:5]:
        d = item["d"]
        assert TruncatedDeformation.from_json(item["S"], d.to_json()) == d
        assert item["phi"].to_json()["order"] == item["phi"].order
    with pytest.raises(ValueError):
        doc = suite[0]["d"].to_json()
        doc["order"] += 1
        TruncatedDeformation.from_json(suite[0]["S"], doc)


def test_a_linear_maps_are_a_linear():
    for id in SUITE_ROWS[:6]:
        S = inst(id)
        for b in a_linear_maps(S):
            FormalAutomorphism(S, [b])


# ---------------------------------------------------------------- deformation equation

def test_suite_passes_deformation_equation(suite):
    for item in suite:
        d = item["d"]
        assert check_deformation(d).ok, item["label"]
        for k in range(1, d.order + 1):
            acc = MultiDerivation.zero(d.S, 2)
            for i in range(k + 1):
                acc = acc + nr_bracket(d[i], d[k - i])
            assert acc.is_zero()


def test_non_cocycle_fails(rigid):
    m = structure_to_multider(rigid)
    B = md_basis(1, rigid)
    bad = [b for b, p in zip(B.elements, B.parities) if p == 0 and not delta(2, b).is_zero()]
    d = TruncatedDeformation(rigid, [m, bad[0]])
    rep = check_deformation(d)
    assert not rep.ok


def test_infinitesimal_is_cocycle(suite):
    for item in suite:
        i, mi, ok = infinitesimal(item["d"])
        assert ok and delta(2, mi).is_zero()


def test_hand_built_rigid_order_one(rigid):
    m = structure_to_multider(rigid)
    for z in cocycle_basis(rigid, 2):
        if z.parity:
            continue
        d = TruncatedDeformation(rigid, [m, z])
        assert check_deformation(d).ok
        assert infinitesimal(d)[2]
        ext, cert = extend(d)
        assert ext is not None and check_deformation(ext).ok
        # z = delta(phi) with phi = c * id, and the pushforward by phi kills it
        phi = a_linear_maps(rigid)[0]
        c = z.values[(1, 1)][0] / delta(1, phi).values[(1, 1)][0]
        Phi = FormalAutomorphism(rigid, [phi.scaled(c)])
        assert apply_equivalence(Phi, d)[1].is_zero()


# ---------------------------------------------------------------- equivalences

def test_pushforward_of_trivial(suite):
    for item in suite[:16]:
        d, phi = item["d"], item["phi"]
        assert d[1] == delta(1, phi.phis[0]).scaled(-ONE)
        assert apply_equivalence_inverse_route(phi, item["base"]) == d


def test_pullback_has_plus_sign(suite):
    for item in suite[:8]:
        phi, base = item["phi"], item["base"]
        p = pullback(phi, base)
        assert check_deformation(p).ok
        assert p[1] == delta(1, phi.phis[0])
        # m_1 = delta(phi): the pushforward by phi trivializes it
        back = apply_equivalence(phi, p)
        assert back[1].is_zero() and back == base


def test_pullback_relation_literal():
    S = inst("LR:A:1|1:1/L:2|1:1#1")
    phi, d = pushforward_deformation(S, 2, random.Random(9))
    p = pullback(phi, d)
    from lrsuper.deformation import _compose_maps
    L = S.L
    # Phi m'(x, y) = m(Phi x, Phi y) order by order
    for k in range(3):
        for x in range(L.dim):
            for y in range(L.dim):
                lhs = {}
                for a in range(k + 1):
                    v = phi.term(k - a).evaluate([p[a].value((x, y))])
                    for key, c in v.items():
                        lhs[key] = lhs.get(key, Scalar(0)) + c
                rhs = {}
                for i in range(k + 1):
                    for b in range(k - i + 1):
                        v = d[i].evaluate([phi.term(b).value((x,)), phi.term(k - i - b).value((y,))])
                        for key, c in v.items():
                            rhs[key] = rhs.get(key, Scalar(0)) + c
                assert {a: c for a, c in lhs.items() if c} == {a: c for a, c in rhs.items() if c}


def test_infinitesimal_class_invariant(suite):
    rng = random.Random(5)
    for item in suite[16:18] + suite[:4]:
        d, S = item["d"], item["S"]
        phi = random_automorphism(S, d.order, rng, density=1.0)
        d2 = apply_equivalence(phi, d)
        assert check_deformation(d2).ok
        diff = d2[1] - d[1]
        assert diff.is_zero() or coboundary_preimage(2, diff) is not None


def test_coboundary_infinitesimal_is_trivialized():
    rng = random.Random(3)
    for id in SUITE_ROWS[:6]:
        S = inst(id)
        phi = random_automorphism(S, 1, rng, density=1.0)
        d = pullback(phi, TruncatedDeformation.trivial(S, 2))
        assert d[1] == delta(1, phi.phis[0])
        assert apply_equivalence(phi, d)[1].is_zero()


# ---------------------------------------------------------------- obstructions

def test_obstruction_forms_and_cocycle(suite):
    for item in suite:
        ob = obstruction(item["d"])
        assert ob.forms_agree and ob.cocycle, item["label"]
        assert ob.to_json()["N"] == item["d"].order


def test_order_one_obstruction_formula(suite):
    for item in suite:
        d = item["d"]
        if d.order == 1:
            assert obstruction(d).theta == nr_bracket(d[1], d[1]).scaled(-HALF)


def test_extension_matches_certificate(suite):
    outcomes = set()
    for item in suite:
        ext, cert = extend(item["d"])
        assert (ext is not None) == cert["theta_in_B3"]
        assert cert["rank_with_theta"] - cert["rank_B3_generators"] in (0, 1)
        if ext is not None:
            assert ext.order == item["d"].order + 1 and check_deformation(ext).ok
            assert obstruction(ext).cocycle
        outcomes.add(ext is not None)
    assert outcomes == {True, False}


def test_unextendable_examples():
    S = abelian_base()
    for d in unextendable_bases(S):
        ob = obstruction(d)
        assert not ob.theta.is_zero() and ob.cocycle
        ext, cert = extend(d)
        assert ext is None and cert["rank_B3_generators"] == 0 and cert["rank_with_theta"] == 1


def test_h3_zero_always_extends(rigid):
    assert cohomology_report(rigid, max_degree=3).degree(3)["dimH"] == 0
    rng = random.Random(1)
    m = structure_to_multider(rigid)
    even = [z for z in cocycle_basis(rigid, 2) if z.parity == 0]
    for order in (1, 2, 3):
        phi, d = pushforward_deformation(rigid, order, rng)
        assert extend(d)[0] is not None
    d = TruncatedDeformation(rigid, [m, even[0].scaled(Scalar(3))])
    for _ in range(3):
        d, cert = extend(d)
        assert d is not None and check_deformation(d).ok


def test_rigid_z2_equals_b2_for_all_lambda():
    for lam in (1, 2, -3):
        S = catalog.get_row(RIGID).instantiate({"lam": lam})
        Z = cocycle_basis(S, 2)
        assert same_subspace(Z, [delta(1, b) for b in md_basis(0, S).elements]) == (True, True)


@given(st.sampled_from(SUITE_ROWS[:10]), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_random_pushforwards(id, order, seed):
    S = inst(id)
    phi, d = pushforward_deformation(S, order, random.Random(seed))
    assert check_deformation(d).ok
    assert apply_equivalence_inverse_route(phi, TruncatedDeformation.trivial(S, order)) == d
    assert d[1] == delta(1, phi.phis[0]).scaled(-ONE)
    ob = obstruction(d)
    assert ob.forms_agree and ob.cocycle
    assert extend(d)[0] is not None
