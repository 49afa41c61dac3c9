import random
from fractions import Fraction

import pytest

from chevsuper.errors import (DegenerateWeights, IntegralityViolation,
                              NotAChevalleyBasis, NotRational)
from chevsuper.liesuper import (SuperMatrix, admissible_lattice_check,
                                binomial_H_action, build_chevalley_basis,
                                coroot_lattice, defining_weights,
                                divided_power, jacobi_check,
                                kostant_monomial_action, pbw_generator_order,
                                random_pbw_monomial, stabilizer_cartan,
                                structure_constants, super_bracket, supertrace,
                                verify_cartan_candidate)

ALL_FAMILIES = ["A(1,0)", "A(2,1)", "A(0,2)", "B(0,1)", "B(1,1)", "B(2,1)",
                "C(2)", "C(3)", "D(2,1)"]

_CB = {}


def basis(fam):
    if fam not in _CB:
        _CB[fam] = build_chevalley_basis(fam)
    return _CB[fam]


def test_supermatrix_basics():
    a = SuperMatrix.unit(2, 1, 0, 1, 3)
    b = SuperMatrix.unit(2, 1, 1, 2)
    assert (a + b).entries == {(0, 1): 3, (1, 2): 1}
    assert a.matmul(b).entries == {(0, 2): 3}
    assert b.matmul(a).is_zero()
    assert SuperMatrix.unit(2, 1, 0, 0).supertrace() == 1
    assert SuperMatrix.unit(2, 1, 2, 2).supertrace() == -1
    assert SuperMatrix.unit(2, 1, 0, 1).parity() == 0
    assert SuperMatrix.unit(2, 1, 0, 2).parity() == 1


def test_smallest_odd_algebra_matrices():
    """The rank-one orthosymplectic algebra on a 1|2 space, written out."""
    cb = basis("B(0,1)")
    assert (cb.p, cb.q) == (1, 2)
    assert cb.vector("d1").entries == {(0, 2): 1, (1, 0): 1}
    assert cb.vector("-d1").entries == {(0, 1): 1, (2, 0): -1}
    assert cb.vector("2d1").entries == {(1, 2): 1}
    assert cb.vector("-2d1").entries == {(2, 1): 1}
    h = cb.coroot_matrix(cb._root("2d1"))
    assert h.diagonal() == [0, 1, -1]
    # the coroot attached to the short odd root is the coroot of its double
    assert cb.coroot_matrix(cb._root("d1")) == h
    assert {n: cb.sigma(cb._root(n)) for n in ("d1", "-d1", "2d1", "-2d1")} \
        == {"d1": 1, "-d1": -1, "2d1": 1, "-2d1": 1}


def test_opposite_pairs_close_on_the_coroot():
    for fam in ("A(1,0)", "B(1,1)", "C(2)", "D(2,1)"):
        cb = basis(fam)
        for alpha in cb.roots():
            lhs = super_bracket(cb.vector(alpha), cb.vector(-alpha))
            rhs = cb.coroot_matrix(alpha).scale(cb.sigma(alpha))
            assert lhs == rhs, (fam, str(alpha))
            if cb.system.parity(alpha) == 1 and not alpha.is_positive():
                assert cb.sigma(alpha) == -1
            else:
                assert cb.sigma(alpha) == 1


def test_bracket_examples():
    ca = basis("A(1,0)")
    out = super_bracket(ca.vector("e1-d1"), ca.vector("d1-e2"))
    assert out == ca.vector("e1-e2")
    cb = basis("B(0,1)")
    out = super_bracket(cb.vector("d1"), cb.vector("d1"))
    assert out == cb.vector("2d1").scale(2)
    assert structure_constants(cb).constant(cb._root("d1"), cb._root("d1")) == 2


def test_supertrace_vanishes_on_basis():
    for fam in ALL_FAMILIES:
        cb = basis(fam)
        for name, m in cb.basis_elements():
            assert supertrace(m) == 0, (fam, name)


def test_verification_report():
    for fam in ALL_FAMILIES:
        cb = basis(fam)
        report = cb.verification_report
        assert {row["check"] for row in report} == {
            "coroot-span", "cartan-action", "opposite-pairs",
            "structure-constants", "invariant-form", "divided-powers"}
        assert all(row["status"] == "ok" for row in report), (fam, report)
        scale = [r for r in report if r["check"] == "invariant-form"][0]["scale"]
        assert scale == ("1" if fam.startswith("A") else "2"), fam


def test_structure_constant_rules():
    rows = structure_constants(basis("B(1,1)")).rows
    assert {r["rule"] for r in rows} == {
        "string", "cartan-pairing", "odd-in-string", "isotropic-pair"}
    for r in rows:
        assert isinstance(r["c"], int) and r["c"] != 0
    rows = structure_constants(basis("A(2,1)")).rows
    assert {r["rule"] for r in rows} == {"string", "isotropic-pair"}
    iso = [r for r in rows if r["alpha"] == "e1-d1" and r["beta"] == "-e2+d1"]
    assert iso == [{"alpha": "e1-d1", "beta": "-e2+d1", "c": 1, "r": 0,
                    "rule": "isotropic-pair"}]


def test_divided_powers():
    ca = basis("A(1,0)")
    x = ca.vector("e1-e2")
    assert divided_power(x, 0).entries == {(0, 0): 1, (1, 1): 1, (2, 2): 1}
    assert divided_power(x, 1) == x
    assert divided_power(x, 2).is_zero()
    # the square halves of a sum of opposite odd vectors are not integral
    m = ca.vector("e1-d1") + ca.vector("-e1+d1")
    dp = divided_power(m, 2)
    assert dp.diagonal() == [Fraction(1, 2), 0, Fraction(1, 2)]
    assert not dp.has_integer_entries()


def test_jacobi_exhaustive_on_two_small_algebras():
    assert jacobi_check(basis("A(1,0)")) == 512
    assert jacobi_check(basis("B(0,1)")) == 125


def test_ad_eigenvalues_are_integers():
    cb = basis("D(2,1)")
    for h in cb.cartan:
        for beta in cb.roots():
            v = cb.ad_eigenvalue(h, beta)
            assert v == int(v)
    ca = basis("A(1,0)")
    assert ca.ad_eigenvalue(ca.coroot_matrix(ca._root("e1-e2")), ca._root("e1-e2")) == 2


def test_binomial_H_action():
    ca = basis("A(1,0)")
    hs = {tuple(h.diagonal()): h for h in ca.cartan}
    h = hs[(1, -1, 0)]
    assert binomial_H_action(h, 1, [1, 1, 1]) == [1, -1, 0]
    assert binomial_H_action(h, 2, [1, 1, 1]) == [0, 1, 0]
    with pytest.raises(NotRational):
        binomial_H_action(h.scale(Fraction(1, 2)), 1, [1, 1, 1])


def test_kostant_monomial_order_rules():
    ca = basis("A(1,0)")
    assert kostant_monomial_action(ca, [("odd", "-e1+d1", 1)], [1, 0, 0]) \
        == [0, 0, 1]
    assert kostant_monomial_action(ca, [("ev", "-e1+e2", 1)], [1, 0, 0]) \
        == [0, 1, 0]
    # slots must respect the fixed order, without repeats
    order = pbw_generator_order(ca)
    first = order[0]
    later = order[2]
    good = [(first[0], str(first[1]), 1), (later[0], str(later[1]), 1)]
    kostant_monomial_action(ca, good, [1, 1, 1])
    bad = [good[1], good[0]]
    with pytest.raises(ValueError):
        kostant_monomial_action(ca, bad, [1, 1, 1])
    with pytest.raises(ValueError):
        kostant_monomial_action(ca, [good[0], good[0]], [1, 1, 1])
    with pytest.raises(ValueError):
        kostant_monomial_action(ca, [("odd", "-e1+d1", 2)], [1, 0, 0])
    with pytest.raises(ValueError):
        kostant_monomial_action(ca, [("ev", "e1-d1", 1)], [1, 0, 0])
    hs = {tuple(h.diagonal()): i for i, h in enumerate(ca.cartan)}
    with pytest.raises(IntegralityViolation):
        kostant_monomial_action(ca, [("h", hs[(1, -1, 0)], 1)],
                                [Fraction(1, 2), 0, 0])


def test_kostant_monomials_random():
    rng = random.Random(71)
    for fam in ("A(1,0)", "B(1,1)", "C(2)"):
        cb = basis(fam)
        dim = cb.p + cb.q
        for k in range(80):
            factors = random_pbw_monomial(cb, rng)
            vector = [rng.randrange(-2, 3) for _ in range(dim)]
            out = kostant_monomial_action(cb, factors, vector)
            assert all(isinstance(x, int) for x in out)


def test_admissible_lattices():
    cb = basis("B(0,1)")
    std = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert admissible_lattice_check(cb, std) is True
    assert admissible_lattice_check(cb, [(Fraction(1, 2), 0, 0),
                                         (0, 1, 0), (0, 0, 1)]) is False
    with pytest.raises(DegenerateWeights):
        admissible_lattice_check(cb, [(1, 0, 0), (0, 1, 0)])


def test_stabilizer_and_coroot_lattices():
    ca = basis("A(1,0)")
    weights = defining_weights(ca)
    assert weights == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    stab = stabilizer_cartan(ca, weights)
    assert stab.basis() == [(1, 0, 1), (0, 1, 1)]
    cor = coroot_lattice(ca)
    assert cor == stab
    root_weights = [r.coords for r in ca.roots()]
    root_stab = stabilizer_cartan(ca, root_weights)
    assert root_stab.contains_lattice(stab)
    with pytest.raises(DegenerateWeights):
        stabilizer_cartan(ca, [(1, 0, 0)])


def test_cartan_candidate_obstruction():
    """In the 1|2 orthosymplectic case half the coroot is an honest
    obstruction: some binomial operator then leaves every lattice."""
    cb = basis("B(0,1)")
    h = cb.coroot_matrix(cb._root("2d1"))
    with pytest.raises(IntegralityViolation) as exc:
        verify_cartan_candidate(cb, [h.scale(Fraction(1, 2))])
    assert exc.value.witness == Fraction(1, 2)
    with pytest.raises(NotAChevalleyBasis):
        verify_cartan_candidate(cb, [h.scale(2)])
    assert verify_cartan_candidate(cb, [h]) == {"cartan-size": 1, "status": "ok"}
