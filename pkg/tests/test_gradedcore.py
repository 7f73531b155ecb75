import itertools

import pytest

from lrsuper import catalog
from lrsuper.catalog.core import CatalogEntry
from lrsuper.exactmath import ONE, RowReducer, Scalar, SparseTensor3
from lrsuper.gradedcore import (
    LieSuperAlgebra, SuperAlgebra, SuperBasis, check_associative,
    check_super_jacobi, check_super_skew, check_supercommutative, check_unital, der_bracket,
    leibniz_report, superderivations,
)
from oracles import superderivation_dims

ASSOC = catalog.list_entries(kind="associative")
KNOWN_TABLE_TYPOS = {"A:2|2:4", "A:4|0:8"}


def alg(id, env=None):
    return catalog.instantiate(id, env)


def test_multiply_examples():
    A = alg("A:2|0:2")
    assert A.mul({1: ONE}, {1: ONE}) == {1: ONE}
    B = alg("A:1|1:1")
    assert B.mul({1: ONE}, {1: ONE}) == {}
    v = {0: Scalar(2), 1: Scalar(-3)}
    assert B.mul({B.unit_index: ONE}, v) == v


def test_basis_invariants():
    with pytest.raises(ValueError):
        SuperBasis([("a", 1), ("b", 0)])
    with pytest.raises(ValueError):
        SuperBasis([("a", 0), ("a", 1)])
    assert SuperBasis.standard(2, 1).dims == (2, 1)


def test_constructor_rejects_grading_violation():
    basis = SuperBasis.standard(1, 2)
    with pytest.raises(ValueError):
        SuperAlgebra(basis, SparseTensor3((3, 3, 3), {(1, 1, 1): ONE}))
    with pytest.raises(ValueError):
        LieSuperAlgebra(SuperBasis.standard(1, 1, "f"), SparseTensor3((2, 2, 2), {(0, 1, 0): ONE}))


def test_supercommutative_examples():
    assert check_supercommutative(alg("A:2|0:1")).ok
    assert check_supercommutative(alg("A:2|2:5")).ok
    basis = SuperBasis.standard(2, 2)
    bad = SuperAlgebra(basis, SparseTensor3((4, 4, 4), {(2, 3, 1): ONE, (3, 2, 1): ONE}))
    rep = check_supercommutative(bad)
    assert not rep.ok and any(v["at"] in ([2, 3], [3, 2]) for v in rep.violations)


def test_associative_examples():
    basis = SuperBasis.standard(3, 0)
    # e2 e2 = e2, e2 e3 = e3 e2 = e1: (e2 e2) e3 = e1 but e2 (e2 e3) = e2 e1 = 0
    bad = SuperAlgebra(basis, SparseTensor3((3, 3, 3), {(1, 1, 1): ONE, (1, 2, 0): ONE, (2, 1, 0): ONE}))
    assert not check_associative(bad).ok
    zero = SuperAlgebra(basis, SparseTensor3((3, 3, 3)))
    assert check_associative(zero).ok
    assert not check_unital(zero).ok


@pytest.mark.parametrize("id", ASSOC)
def test_catalog_algebras_pass(id):
    A = alg(id)
    assert check_supercommutative(A).ok
    assert check_associative(A).ok
    # purely odd algebras have zero product and no unit
    assert check_unital(A).ok == catalog.get(id).is_unital


def test_lie_examples():
    L = alg("L:1|1:1")
    assert check_super_skew(L).ok and check_super_jacobi(L).ok
    assert L.br({1: ONE}, {1: ONE}) == {0: ONE}
    e = catalog.get("L:3|0:6")
    for env in e.sample_envs(3) if e.params else [{}]:
        L6 = e.instantiate(env)
        assert check_super_skew(L6).ok and check_super_jacobi(L6).ok
    bad = LieSuperAlgebra(L.basis, SparseTensor3((2, 2, 2), {(1, 1, 0): ONE, (0, 0, 0): ONE}))
    rep = check_super_skew(bad)
    assert [v["at"] for v in rep.violations] == [[0, 0]]


def test_superderivation_table_examples():
    assert tuple(map(len, superderivations(alg("A:1|1:1")))) == (1, 1)
    assert tuple(map(len, superderivations(alg("A:2|0:2")))) == (0, 0)
    assert tuple(map(len, superderivations(alg("A:1|3:1")))) == (9, 0)


@pytest.mark.parametrize("id", sorted(catalog.DERIVATION_TABLE))
def test_superderivations_match_sympy_oracle(id):
    A = alg(id)
    even, odd = superderivations(A)
    assert (len(even), len(odd)) == superderivation_dims(A)
    for D in even:
        assert leibniz_report(A, D, 0).ok
    for D in odd:
        assert leibniz_report(A, D, 1).ok


@pytest.mark.parametrize("id", sorted(set(catalog.DERIVATION_TABLE) - KNOWN_TABLE_TYPOS))
def test_superderivations_match_printed_table(id):
    even, odd = superderivations(alg(id))
    assert (len(even), len(odd)) == catalog.DERIVATION_TABLE[id]


def test_known_table_typos_are_genuine():
    # zero product on (2|2): the printed odd row reuses lambda_2 for D(e2^1)
    assert tuple(map(len, superderivations(alg("A:2|2:4")))) == (5, 4)
    # the printed row for A:4|0:8 is the derivation space of e2^0 e2^0 = e3^0
    assert tuple(map(len, superderivations(alg("A:4|0:8")))) == (4, 0)
    other = CatalogEntry("A:4|0:99", "associative", "e2^0 e2^0 = e3^0").instantiate()
    assert tuple(map(len, superderivations(other))) == catalog.DERIVATION_TABLE["A:4|0:8"]


def test_der_bracket_examples():
    A = alg("A:1|1:1")
    (D,) = superderivations(A)[1]
    assert der_bracket(D, D).is_zero()
    E = superderivations(A)[0][0]
    assert der_bracket(E, E).is_zero()
    ev = superderivations(alg("A:2|2:5"))[0]
    diag = [g for g in ev if all(set(c) <= {j} for j, c in enumerate(g.cols))]
    for a, b in itertools.combinations(diag, 2):
        assert der_bracket(a, b).is_zero()
    with pytest.raises(ValueError):
        der_bracket(E.combine(D), D)


def _homogeneous(A):
    even, odd = superderivations(A)
    return [(D, 0) for D in even] + [(D, 1) for D in odd]


def _in_span(A, maps, D):
    red = RowReducer()
    for g in maps:
        red.add(g.flat())
    return red.contains(D.flat())


@pytest.mark.parametrize("id", ["A:1|1:1", "A:2|1:1", "A:2|2:3", "A:2|2:5", "A:3|1:4", "A:1|2:1"])
def test_der_closed_under_bracket_and_graded_lie(id):
    A = alg(id)
    hom = _homogeneous(A)
    maps = [D for D, _ in hom]
    for (D1, p1), (D2, p2) in itertools.product(hom, repeat=2):
        B = der_bracket(D1, D2)
        assert leibniz_report(A, B, (p1 + p2) % 2).ok
        assert _in_span(A, maps, B)
        back = der_bracket(D2, D1)
        s = Scalar(1 if p1 * p2 % 2 else -1)
        assert B.combine(back, ONE, -s).is_zero()
    for (D1, p1), (D2, p2), (D3, p3) in itertools.islice(itertools.product(hom, repeat=3), 60):
        s = lambda a, b: Scalar(-1 if a * b % 2 else 1)
        t1 = der_bracket(D1, der_bracket(D2, D3))
        t2 = der_bracket(D2, der_bracket(D3, D1))
        t3 = der_bracket(D3, der_bracket(D1, D2))
        tot = t1.combine(t2, s(p1, p3), s(p2, p1)).combine(t3, ONE, s(p3, p2))
        assert tot.is_zero()
