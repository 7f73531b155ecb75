"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import itertools
import random
import time

import pytest

from lrsuper import catalog
from lrsuper.cli import main
from lrsuper.cohomology import (
    cocycle_basis, coboundary_basis, cohomology_report, complex_slice, delta, delta_explicit,
    same_subspace,
)
from lrsuper.deformation import (
    FormalAutomorphism, TruncatedDeformation, apply_equivalence, extend, infinitesimal,
    obstruction, pullback,
)
from lrsuper.gradedcore import (
    check_associative, check_super_jacobi, check_super_skew, check_supercommutative,
    check_unital, superderivations,
)
from lrsuper.lierinehart import is_lie_rinehart
from lrsuper.multider import (
    koszul_sign, koszul_sign_cycles, md_basis, nr_bracket, structure_to_multider,
)
from conftest import RIGID, deformation_suite, first_instance, verified_rows
from oracles import koszul_inversions
from test_multider import m_perturbable, perturbation_verdicts


def report(capsys, n, ok, detail):
    with capsys.disabled():
        print("\ncriterion %d: %s - %s" % (n, "PASS" if ok else "FAIL", detail))
    assert ok, detail


@pytest.fixture(scope="module")
def suite():
    return deformation_suite()


def test_criterion_01_catalog_integrity(capsys):
    t0 = time.perf_counter()
    bad, checked, no_unit = [], 0, []
    for e in catalog.entries():
        envs = e.sample_envs(3) if e.params else [{}]
        for env in envs:
            obj = e.instantiate(env)
            checked += 1
            if e.kind == "associative":
                reps = [check_supercommutative(obj), check_associative(obj)]
                if e.is_unital:
                    reps.append(check_unital(obj))
                elif obj.basis.dims[0] == 0:
                    no_unit.append(e.id)
                else:
                    reps.append(check_unital(obj))
            else:
                reps = [check_super_skew(obj), check_super_jacobi(obj)]
            bad += [(e.id, r.name) for r in reps if not r.ok]
    dt = time.perf_counter() - t0
    no_unit = sorted(set(no_unit))
    report(capsys, 1, not bad and dt < 10,
           "%d instances, %d failures, %.2fs; unitality not applicable to the zero-product "
           "purely odd algebras %s" % (checked, len(bad), dt, ", ".join(no_unit)))


def test_criterion_02_derivation_table(capsys):
    t0 = time.perf_counter()
    mism = []
    for id, printed in sorted(catalog.DERIVATION_TABLE.items()):
        even, odd = superderivations(catalog.instantiate(id))
        if (len(even), len(odd)) != tuple(printed):
            mism.append("%s printed %s computed %s" % (id, tuple(printed), (len(even), len(odd))))
    dt = time.perf_counter() - t0
    n = len(catalog.DERIVATION_TABLE)
    report(capsys, 2, not mism and dt < 5,
           "%d/%d rows match in %.2fs%s" % (n - len(mism), n, dt,
                                           "; mismatches: " + "; ".join(mism) if mism else ""))


def test_criterion_03_classification_rows(capsys):
    t0 = time.perf_counter()
    printed_rows = [r for r in catalog.rows() if r.form != "marker"]
    markers = [r for r in catalog.rows() if r.form == "marker"]
    failed = {}
    for r in printed_rows:
        # a printed form that cannot even be instantiated (grading broken) fails
        try:
            envs = r.sample_envs(3, "printed") if r.params("printed") else [{}]
            ok = bool(envs) and all(is_lie_rinehart(r.instantiate(env, "printed")).ok
                                    for env in envs)
        except ValueError:
            ok = False
        if not ok:
            failed[r.id] = r.form
    corrected_ok = all(
        is_lie_rinehart(r.instantiate(env)).ok
        for r in printed_rows if r.form == "corrected"
        for env in (r.sample_envs(3) if r.params() else [{}]))
    dt = time.perf_counter() - t0
    n_corr = sum(1 for f in failed.values() if f == "corrected")
    n_flag = sum(1 for f in failed.values() if f == "flagged")
    report(capsys, 3, not failed and dt < 60,
           "%d/%d printed rows pass as printed (%d markers excluded), %.1fs; failing: %d repaired "
           "by one corrected constant (corrections pass: %s), %d with no single-constant repair"
           % (len(printed_rows) - len(failed), len(printed_rows), len(markers), dt,
              n_corr, corrected_ok, n_flag))


def test_criterion_04_structure_multider(capsys):
    rows = verified_rows()
    nonzero = []
    for r in rows:
        envs = r.sample_envs(3) if r.params() else [{}]
        for env in envs:
            m = structure_to_multider(r.instantiate(env))
            if not nr_bracket(m, m).is_zero():
                nonzero.append(r.id)
    rng = random.Random(4)
    pool = [r for r in rows if m_perturbable(first_instance(r)[1])]
    undetected, disagree = [], []
    for r in rng.sample(pool, 10):
        detected, bad = perturbation_verdicts(first_instance(r)[1], rng)
        if not any(kind != "action" for kind, _ in detected):
            undetected.append(r.id)
        disagree += bad
    ok = not nonzero and not undetected and not disagree
    report(capsys, 4, ok,
           "[m,m]=0 on %d verified rows x 3 samples (%d failures); 10 perturbed rows: %d "
           "undetected, %d verdict disagreements" % (len(rows), len(nonzero), len(undetected),
                                                     len(disagree)))


STRUCTS = ["LR:A:1|1:1/L:1|1:1#1", "LR:A:1|1:1/L:1|1:2#2", "LR:A:2|0:2/L:0|1:1#1",
           "LR:A:1|1:1/L:2|0:1#1", "LR:A:2|0:2/L:1|0:1#1", "LR:A:1|1:1/L:2|1:1#1"]


def test_criterion_05_differential(capsys):
    zero_prod, agree, entries = True, True, 0
    for id in STRUCTS:
        S = first_instance(catalog.get_row(id))[1]
        m = structure_to_multider(S)
        slices = [complex_slice(S, n) for n in (1, 2, 3)]
        zero_prod &= all((b.matrix @ a.matrix).is_zero() for a, b in zip(slices, slices[1:]))
        for n in (1, 2, 3):
            for b in md_basis(n - 1, S).elements:
                entries += 1
                agree &= delta(n, b, m) == delta_explicit(n, b)
    report(capsys, 5, zero_prod and agree,
           "delta^2 = 0 (1->2->3) on %d structures: %s; routes agree on %d basis cochains: %s"
           % (len(STRUCTS), zero_prod, entries, agree))


def test_criterion_06_rigidity(capsys):
    t0 = time.perf_counter()
    parts, ok = [], True
    for lam in (1, 2, -3):
        S = catalog.get_row(RIGID).instantiate({"lam": lam})
        h2 = cohomology_report(S, 2).degree(2)
        Z, B = cocycle_basis(S, 2), coboundary_basis(S, 2)
        same = same_subspace(Z, B) == (True, True)
        ok &= h2["dimH"] == 0 and same
        parts.append("lam=%d: dimZ2=%d dimB2=%d dimH2=%d B2=Z2 %s"
                     % (lam, h2["dimZ"], h2["dimB"], h2["dimH"], same))
    dt = time.perf_counter() - t0
    report(capsys, 6, ok and dt < 10,
           "%s; %.2fs; dim Z2 = 2 against the 4 lemma parameters: condition (2) forces q0 = q1 = 0"
           % ("; ".join(parts), dt))


def test_criterion_07_infinitesimal(capsys, suite):
    bad = [it["label"] for it in suite if not infinitesimal(it["d"])[2]]
    report(capsys, 7, len(suite) == 20 and not bad,
           "%d pushforward deformations, %d with delta(m_i) != 0" % (len(suite), len(bad)))


def test_criterion_08_obstruction(capsys, suite):
    bad, outcomes, nonzero = [], [], 0
    for it in suite:
        ob = obstruction(it["d"])
        ext, cert = extend(it["d"], ob.theta)
        nonzero += not ob.theta.is_zero()
        if not (ob.forms_agree and ob.cocycle and (ext is not None) == cert["theta_in_B3"]):
            bad.append(it["label"])
        outcomes.append(ext is not None)
    ok = not bad and all(x in outcomes for x in (True, False))
    report(capsys, 8, ok,
           "%d deformations: forms agree and delta theta = 0 on all but %d; theta != 0 on %d; "
           "extended %d, obstructed %d (rank certificate matches)"
           % (len(suite), len(bad), nonzero, outcomes.count(True), outcomes.count(False)))


def test_criterion_09_equivalence(capsys, suite):
    bad = []
    n = 0
    for it in suite:
        base, S = it["base"], it["S"]
        if any(not c.is_zero() for c in base.coefficients[1:]):
            continue
        for phi in (it["phi"], FormalAutomorphism(S, it["phi"].phis[:1])):
            n += 1
            d = apply_equivalence(phi, base)
            if d[1] != -delta(1, phi.phis[0]):
                bad.append(it["label"])
            back = apply_equivalence(phi, pullback(phi, base))
            if not back[1].is_zero():
                bad.append(it["label"] + " trivialization")
    report(capsys, 9, n >= 20 and not bad,
           "%d automorphisms: m'_1 = -delta(phi) and trivialization of m_1 = delta(phi); "
           "%d failures" % (n, len(bad)))


def test_criterion_10_koszul(capsys):
    rng = random.Random(10)
    bad = 0
    for _ in range(100):
        n = rng.randint(1, 8)
        perm = list(range(n))
        rng.shuffle(perm)
        pars = [rng.randint(0, 1) for _ in range(n)]
        a, b = koszul_sign(perm, pars), koszul_sign_cycles(perm, pars)
        bad += not (a == b == koszul_inversions(perm, pars))
    report(capsys, 10, bad == 0, "100 random (permutation, parity) pairs, %d disagreements" % bad)


def test_criterion_11_determinism(capsys):
    outs = []
    for _ in range(2):
        code = main(["verify-tables", "--format", "json", "--seed", "11"])
        outs.append((code, capsys.readouterr().out))
    same = outs[0] == outs[1]
    report(capsys, 11, same and outs[0][0] == 0,
           "two verify-tables runs: byte-identical %s (%d bytes), exit %d"
           % (same, len(outs[0][1]), outs[0][0]))
