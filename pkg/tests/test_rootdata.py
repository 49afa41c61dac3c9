import random

import pytest

from chevsuper.errors import InvalidFamily, NotARoot
from chevsuper.rootdata import (alpha_string_length, build_root_system,
                                coroot, form)

ALL_FAMILIES = ["A(1,0)", "A(2,1)", "A(0,2)", "B(0,1)", "B(1,1)", "B(2,1)",
                "C(2)", "C(3)", "D(2,1)"]

# (even count, odd count) for each instance above
ROOT_COUNTS = {
    "A(1,0)": (2, 4),
    "A(2,1)": (8, 12),
    "A(0,2)": (6, 6),
    "B(0,1)": (2, 2),
    "B(1,1)": (4, 6),
    "B(2,1)": (10, 10),
    "C(2)": (2, 4),
    "C(3)": (8, 8),
    "D(2,1)": (6, 8),
}

SIMPLE_SYSTEMS = {
    "A(1,0)": {"e1-e2", "e2-d1"},
    "A(2,1)": {"e1-e2", "e2-e3", "e3-d1", "d1-d2"},
    "A(0,2)": {"e1-d1", "d1-d2", "d2-d3"},
    "B(0,1)": {"d1"},
    "B(1,1)": {"e1-d1", "d1"},
    "B(2,1)": {"e1-e2", "e2-d1", "d1"},
    "C(2)": {"e1-d1", "2d1"},
    "C(3)": {"e1-d1", "d1-d2", "2d2"},
    "D(2,1)": {"e1-e2", "e2-d1", "2d1"},
}


def test_family_validation():
    for bad in ("A(1,1)", "A(0,0)", "B(1,0)", "C(1)", "D(1,1)", "D(0,2)",
                "Z(9,9)", "B(-1,1)", "A(1)", "xyzzy"):
        with pytest.raises(InvalidFamily):
            build_root_system(bad)


def test_root_counts_and_balance():
    for fam, (n_even, n_odd) in ROOT_COUNTS.items():
        rs = build_root_system(fam)
        assert len(rs.even_roots()) == n_even, fam
        assert len(rs.odd_roots()) == n_odd, fam
        pos = rs.positive_roots()
        assert 2 * len(pos) == n_even + n_odd, fam
        for r in rs.sorted_roots():
            assert (-r in rs), fam


def test_simple_systems():
    for fam, expected in SIMPLE_SYSTEMS.items():
        rs = build_root_system(fam)
        assert {str(r) for r in rs.simple_system()} == expected, fam
        for s in rs.simple_system():
            assert s.is_positive()


def test_positivity_is_lexicographic():
    rs = build_root_system("B(2,1)")
    assert rs.root("e1-e2").is_positive()
    assert rs.root("e2+d1").is_positive()
    assert rs.root("d1").is_positive()
    assert not rs.root("-d1").is_positive()
    assert not rs.root("-e1+d1").is_positive()


def test_parity_and_isotropy():
    rs = build_root_system("B(1,1)")
    assert rs.parity(rs.root("e1")) == 0
    assert rs.parity(rs.root("2d1")) == 0
    assert rs.parity(rs.root("e1-d1")) == 1
    assert rs.parity(rs.root("d1")) == 1
    # the odd roots +-d_k are the only non-isotropic odd roots anywhere
    assert not rs.is_isotropic(rs.root("d1"))
    assert rs.is_isotropic(rs.root("e1-d1"))
    assert rs.is_isotropic(rs.root("e1+d1"))
    assert not rs.is_isotropic(rs.root("e1"))
    rsa = build_root_system("A(2,1)")
    for r in rsa.odd_roots():
        assert rsa.is_isotropic(r)


def test_form_values():
    rs = build_root_system("B(1,1)")
    e, d = rs.root("e1"), rs.root("d1")
    assert form(e, e) == 1
    assert form(d, d) == -1
    assert form(rs.root("2d1"), rs.root("2d1")) == -4
    assert form(d, rs.root("2d1")) == -2
    assert form(rs.root("e1-d1"), rs.root("e1-d1")) == 0
    assert form(e, d) == 0
    ra = build_root_system("A(1,0)")
    assert form(ra.root("e1-e2"), ra.root("e1-e2")) == 2
    assert form(ra.root("e1-e2"), ra.root("e2-d1")) == -1


def test_root_parse_errors():
    rs = build_root_system("B(0,1)")
    for bad in ("3d1", "e1", "d2", "e1-d1", ""):
        with pytest.raises(NotARoot):
            rs.root(bad)


def test_string_lengths():
    rs = build_root_system("B(0,1)")
    d, dd = rs.root("d1"), rs.root("2d1")
    # the walk down from beta by alpha counts a hit at zero, then stops
    assert rs.string_down_length(d, d) == 1
    assert rs.string_down_length(d, dd) == 2
    assert rs.string_down_length(dd, d) == 1
    assert rs.string_up_length(d, d) == 1
    ra = build_root_system("A(1,0)")
    assert ra.string_down_length(ra.root("e1-e2"), ra.root("e2-d1")) == 0
    assert ra.string_up_length(ra.root("e1-e2"), ra.root("e2-d1")) == 1
    assert alpha_string_length(ra, ra.root("e1-e2"), ra.root("e2-d1")) == 0
    with pytest.raises(NotARoot):
        alpha_string_length(rs, d, ra.root("e1-e2"))


def test_coroot_values():
    ra = build_root_system("A(1,0)")
    assert coroot(ra, ra.root("e1-e2")) == (1, -1, 0)
    assert coroot(ra, ra.root("e1-d1")) == (1, 0, 1)
    rs = build_root_system("B(0,1)")
    assert coroot(rs, rs.root("d1")) == (2,)
    assert coroot(rs, rs.root("2d1")) == (1,)
    assert coroot(rs, rs.root("-d1")) == (-2,)
    rb = build_root_system("B(1,1)")
    assert coroot(rb, rb.root("e1-d1")) == (2, 2)
    rc = build_root_system("C(2)")
    assert coroot(rc, rc.root("e1-d1")) == (1, 1)
    rd = build_root_system("D(2,1)")
    assert coroot(rd, rd.root("e1-d1")) == (1, 0, 1)
    with pytest.raises(NotARoot):
        coroot(ra, rs.root("d1"))


def test_coroot_pairings_are_integral():
    # 2(beta,alpha)/(alpha,alpha) lands in Z for every non-isotropic alpha
    for fam in ALL_FAMILIES:
        rs = build_root_system(fam)
        for alpha in rs.sorted_roots():
            if rs.is_isotropic(alpha):
                continue
            num = 2 * 1
            for beta in rs.sorted_roots():
                val = 2 * form(beta, alpha)
                den = form(alpha, alpha)
                assert val % den == 0, (fam, str(alpha), str(beta))


def test_string_roots_random():
    rng = random.Random(53)
    for fam in ("A(2,1)", "B(2,1)", "D(2,1)"):
        rs = build_root_system(fam)
        roots = rs.sorted_roots()
        for _ in range(60):
            a = rng.choice(roots)
            b = rng.choice(roots)
            r = rs.string_down_length(a, b)
            q = rs.string_up_length(a, b)
            assert r >= 0 and q >= 0
            chain = rs.string_roots(a, b)
            assert b in chain
