from chevsuper.grassmann import GrassmannAlgebra
from chevsuper.heisenberg import (heisenberg_build, heisenberg_group_commutators,
                                  heisenberg_verify)
from chevsuper.liesuper import super_bracket


def test_smallest_instance_matrices():
    d = heisenberg_build(1, 2)
    assert (d.p, d.q) == (1, 1)
    assert d.basis == [(), (1,)]
    assert sorted(d.e.entries.items()) == [((0, 0), 2), ((1, 1), 2)]
    assert sorted(d.a_ops[0].entries.items()) == [((0, 1), 1)]
    assert sorted(d.b_ops[0].entries.items()) == [((1, 0), 2)]
    assert super_bracket(d.a_ops[0], d.b_ops[0]) == d.e


def test_bracket_table_all_instances():
    for n in (1, 2, 3):
        for a in (1, 2):
            d = heisenberg_build(n, a)
            report = heisenberg_verify(d)
            assert {r["check"] for r in report} == {
                "bracket-table", "squares-and-center",
                "integral-lattice", "faithful"}
            assert all(r["status"] == "ok" for r in report), (n, a, report)
            for i in range(n):
                for j in range(n):
                    br = super_bracket(d.a_ops[i], d.b_ops[j])
                    assert br == (d.e if i == j else d.e.scale(0))
                    assert super_bracket(d.a_ops[i], d.a_ops[j]).is_zero()
                    assert super_bracket(d.b_ops[i], d.b_ops[j]).is_zero()


def test_basis_order_splits_parities():
    d = heisenberg_build(2, 1)
    assert d.basis == [(), (1, 2), (1,), (2,)]
    assert all(len(s) % 2 == 0 for s in d.basis[: d.p])
    assert all(len(s) % 2 == 1 for s in d.basis[d.p:])


def test_group_commutators():
    alg = GrassmannAlgebra(8)
    for n in (1, 2, 3):
        d = heisenberg_build(n, 1)
        rows = heisenberg_group_commutators(d, alg)
        assert len(rows) == n * n
        for row in rows:
            assert row["c"] == (-1 if row["i"] == row["j"] else 0)
