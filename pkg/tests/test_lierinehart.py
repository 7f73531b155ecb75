import random

import pytest
from hypothesis import assume, given, strategies as st

from lrsuper import catalog
from lrsuper.exactmath import ONE, ZERO, Scalar, SparseTensor3
from lrsuper.gradedcore import GradedLinearMap, check_super_jacobi, superderivations
from lrsuper.lierinehart import (
    FALSIFY_VALUES, LieRinehartStructure, check_anchor, check_compatibility, check_module,
    crossed_product, falsify_only_trivial, invariant_report, is_lie_rinehart, null_anchor,
    random_structure_constants, trivial_action, verify_table,
)
from conftest import first_instance, verified_rows


def inst(id, env=None):
    return catalog.instantiate(id, env)


def test_trivial_structure_passes_everything():
    for a, l in [("A:1|1:1", "L:1|1:1"), ("A:2|0:2", "L:2|2:5"), ("A:3|1:4", "L:1|2:3")]:
        A, L = inst(a), catalog.get(l)
        L = L.instantiate(L.sample_envs(1)[0] if L.params else {})
        S = LieRinehartStructure(A, L)
        assert check_module(S).ok and check_anchor(S).ok and check_compatibility(S).ok
        assert S.has_trivial_action() and S.has_null_anchor()


def test_module_examples():
    S = catalog.instantiate_row("LR:A:2|0:2/L:0|1:1#1")
    assert check_module(S).ok
    act = dict(S.action.items())
    act[(1, 0, 0)] = Scalar(2)
    bad = LieRinehartStructure(S.A, S.L, SparseTensor3(S.action.dims, act), S.anchor)
    rep = check_module(bad)
    assert not rep.ok and rep.violations[0]["at"][:2] == [1, 1]


def test_anchor_examples():
    S = catalog.instantiate_row("LR:A:1|1:1/L:2|0:1#1", {"lam": 2, "mu": 3})
    assert check_anchor(S).ok
    L2 = inst("L:2|0:2")
    moved = LieRinehartStructure(S.A, L2, S.action, S.anchor)
    assert not check_anchor(moved).ok
    S0 = LieRinehartStructure(S.A, S.L, S.action, null_anchor(S.A, S.L))
    assert check_anchor(S0).ok


def test_compatibility_examples():
    S = catalog.instantiate_row("LR:A:1|1:1/L:1|1:2#2", {"lam": 3})
    assert check_compatibility(S).ok
    anc = dict(S.anchor.items())
    anc[(0, 1, 1)] = ONE
    flipped = LieRinehartStructure(S.A, S.L, S.action, SparseTensor3(S.anchor.dims, anc))
    assert not check_compatibility(flipped).ok


@pytest.mark.parametrize("pair", catalog.EXCEPTIONAL_PAIRS)
def test_exceptional_pairs_trivial_structure(pair):
    A, L = inst(pair[0]), inst(pair[1])
    assert is_lie_rinehart(LieRinehartStructure(A, L, trivial_action(A, L), null_anchor(A, L))).ok


def test_random_action_on_exceptional_pair_fails():
    A, L = inst("A:2|0:1"), inst("L:1|1:1")
    base = LieRinehartStructure(A, L)
    rng = random.Random(5)
    for _ in range(20):
        S = random_structure_constants(base, rng, anchor=False, density=1.0)
        assert not is_lie_rinehart(S).ok


def test_falsification_search_reports_evidence():
    res = falsify_only_trivial(inst("A:2|0:1"), inst("L:1|1:1"), trials=60, seed=2)
    assert res["trials"] == 60 and res["nontrivial_found"] == 0
    # this listed pair admits nontrivial structures; the search finds some
    res = falsify_only_trivial(inst("A:2|0:1"), inst("L:1|2:2"), trials=150, seed=1)
    assert res["nontrivial_found"] > 0
    for ex in res["examples"]:
        S = LieRinehartStructure(inst("A:2|0:1"), inst("L:1|2:2"),
                                 SparseTensor3.from_json((2, 3, 3), ex["action"]),
                                 SparseTensor3.from_json((3, 2, 2), ex["anchor"]))
        assert is_lie_rinehart(S).ok and not (S.has_trivial_action() and S.has_null_anchor())


def test_listed_exceptional_pair_has_nontrivial_table_rows():
    rows = [r for r in verified_rows() if r.pair == "A:2|0:1/L:1|2:2" and r.table != "exceptional"]
    nontrivial = []
    for r in rows:
        _, S = first_instance(r)
        assert is_lie_rinehart(S).ok
        if not (S.has_trivial_action() and S.has_null_anchor()):
            nontrivial.append(r.id)
    assert len(nontrivial) == 2


def _der(A, parity, coeffs):
    basis = superderivations(A)[parity]
    D = GradedLinearMap.zero(A.basis, A.basis, parity)
    for c, b in zip(coeffs, basis):
        D = D.combine(b, ONE, c)
    return D


def test_crossed_product_examples():
    A, g = inst("A:1|0:1"), inst("L:2|0:2")
    S = crossed_product(A, g, [GradedLinearMap.zero(A.basis, A.basis) for _ in range(2)])
    assert S.L.bracket == g.bracket and S.has_trivial_action() and S.has_null_anchor()
    A, g = inst("A:1|1:1"), inst("L:1|0:1")
    sigma = [GradedLinearMap(A.basis, A.basis, [{}, {1: ONE}], 0)]
    S = crossed_product(A, g, sigma)
    assert S.L.basis.dims == (1, 1) and is_lie_rinehart(S).ok
    A, g = inst("A:2|2:3"), inst("L:2|0:1")
    S = crossed_product(A, g, [GradedLinearMap.zero(A.basis, A.basis) for _ in range(2)])
    assert S.L.dim == 8 and S.L.is_abelian() and is_lie_rinehart(S).ok
    with pytest.raises(ValueError):
        A = inst("A:1|1:1")
        crossed_product(A, inst("L:2|0:2"), [GradedLinearMap(A.basis, A.basis, [{}, {1: ONE}], 0)] * 2)


ALGS = ["A:1|1:1", "A:2|0:1", "A:2|1:1", "A:2|2:3", "A:1|2:1"]
coef = st.sampled_from((ZERO,) + FALSIFY_VALUES)


@given(st.sampled_from(ALGS), st.sampled_from(["L:1|0:1", "L:2|0:1", "L:2|0:2", "L:1|1:3"]),
       st.lists(coef, min_size=12, max_size=12), st.lists(coef, min_size=3, max_size=3))
def test_crossed_product_property(a, l, dc, gc):
    A, g = inst(a), inst(l)
    D = _der(A, 0, dc)
    if l == "L:2|0:2":
        sigma = [D, GradedLinearMap.zero(A.basis, A.basis, 0)]
    else:
        sigma = [D.combine(D, gc[i], ZERO) if g.parities[i] == 0
                 else GradedLinearMap.zero(A.basis, A.basis, 1) for i in range(g.dim)]
    try:
        S = crossed_product(A, g, sigma)
    except ValueError:
        assume(False)
    assert is_lie_rinehart(S).ok


def test_verify_table_full_scope_and_jobs():
    rows = [r for r in catalog.rows() if r.table in ("(1|1,1|1)", "(2|0,0|2)", "(2|0,1|1)")]
    a = verify_table(rows, samples=2)
    b = verify_table(list(reversed(rows)), samples=2, jobs=2)
    assert a == b
    t = a["totals"]
    assert t["failed"] == 0 and t["verified"] == t["passed"] > 0


def test_verify_table_reports_corrupted_row():
    row = catalog.get_row("LR:A:1|1:1/L:1|1:2#2")
    doc = catalog.export_catalog()
    (rd,) = [r for r in doc["rows"] if r["id"] == row.id]
    rd["anchor"] = "rho(f1^0)(e1^1) = e1^1; rho(f1^1)(e1^1) = -lam*e1^0"
    _, rows = catalog.import_catalog({"kind": "catalog", "entries": doc["entries"], "rows": [rd]})
    res = verify_table(rows, samples=1)
    assert res["totals"]["failed"] == 1
    viol = res["rows"][0]["samples"][0]["violations"]
    assert "compatibility" in {v["check"] for v in viol}


def test_post_filter_invariants():
    structs = [(r.id, first_instance(r)[1]) for r in verified_rows()]
    rep = invariant_report(structs)
    assert rep.ok and rep.checked > 50
    # rows with purely even A and purely odd L have null anchor
    odd_rows = [s for rid, s in structs if s.A.basis.dims[1] == 0 and s.L.basis.dims[0] == 0]
    assert odd_rows and all(s.has_null_anchor() for s in odd_rows)


def test_invariant_report_catches_violation():
    A, L = inst("A:2|0:1"), inst("L:1|0:1")
    act = {(0, 0, 0): ONE, (1, 0, 0): ONE}
    anc = {(0, 1, 1): ONE}
    S = LieRinehartStructure(A, L, act, anc, name="x")
    rep = invariant_report([("x", S)])
    assert [v["identity"] for v in rep.violations] == ["abelian L: trivial action or null anchor"]


def test_lie_entries_stay_lie():
    for id in ("L:1|1:3", "L:2|1:2"):
        L = inst(id, catalog.get(id).sample_envs(1)[0] if catalog.get(id).params else {})
        assert check_super_jacobi(L).ok
