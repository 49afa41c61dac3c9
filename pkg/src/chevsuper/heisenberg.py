"""Odd Heisenberg algebra on the exterior algebra of an n-dimensional odd
space: generators a_i (contraction), b_i (multiplication scaled by the
central parameter), central element e, with [a_i, b_j] = delta_ij e.

The representation space is the exterior algebra itself, with basis
indexed by subsets of {1..n}, even-degree monomials before odd-degree
ones so the matrices acquire a genuine (p|q) block structure.
"""

from itertools import combinations

from .exactlin import RatLattice, rational_rank
from .liesuper import SuperMatrix, super_bracket


class HeisenbergData:
    __slots__ = ("n", "a", "p", "q", "basis", "e", "a_ops", "b_ops")

    def __init__(self, n, a, p, q, basis, e, a_ops, b_ops):
        self.n = n
        self.a = a
        self.p = p
        self.q = q
        self.basis = basis
        self.e = e
        self.a_ops = a_ops
        self.b_ops = b_ops

    def operators(self):
        return [("e", self.e)] + \
            [("a%d" % (i + 1), m) for i, m in enumerate(self.a_ops)] + \
            [("b%d" % (i + 1), m) for i, m in enumerate(self.b_ops)]


def heisenberg_build(n, a):
    """Matrices of e, a_1..a_n, b_1..b_n on the rank-n exterior algebra."""
    if n < 1:
        raise ValueError("need at least one odd generator")
    subsets = []
    for k in range(n + 1):
        subsets.extend(combinations(range(1, n + 1), k))
    evens = sorted([s for s in subsets if len(s) % 2 == 0], key=lambda s: (len(s), s))
    odds = sorted([s for s in subsets if len(s) % 2 == 1], key=lambda s: (len(s), s))
    basis = evens + odds
    p, q = len(evens), len(odds)
    index = {s: u for u, s in enumerate(basis)}

    e = SuperMatrix(p, q, {(u, u): a for u in range(p + q)})
    a_ops, b_ops = [], []
    for i in range(1, n + 1):
        contract = {}
        multiply = {}
        for s in basis:
            sign = (-1) ** sum(1 for j in s if j < i)
            if i in s:
                t = tuple(j for j in s if j != i)
                contract[(index[t], index[s])] = sign
            else:
                t = tuple(sorted(s + (i,)))
                multiply[(index[t], index[s])] = a * sign
        a_ops.append(SuperMatrix(p, q, contract))
        b_ops.append(SuperMatrix(p, q, multiply))
    return HeisenbergData(n, a, p, q, basis, e, a_ops, b_ops)


def heisenberg_verify(data):
    """Bracket table, squares, centrality, lattice stability, and (for a
    nonzero central parameter) faithfulness."""
    n, a = data.n, data.a
    report = []
    for i in range(n):
        for j in range(n):
            br = super_bracket(data.a_ops[i], data.b_ops[j])
            want = data.e if i == j else SuperMatrix(data.p, data.q)
            if br != want:
                raise AssertionError("[a%d,b%d] wrong" % (i + 1, j + 1))
            if not super_bracket(data.a_ops[i], data.a_ops[j]).is_zero():
                raise AssertionError("[a%d,a%d] nonzero" % (i + 1, j + 1))
            if not super_bracket(data.b_ops[i], data.b_ops[j]).is_zero():
                raise AssertionError("[b%d,b%d] nonzero" % (i + 1, j + 1))
    report.append({"check": "bracket-table", "status": "ok"})

    for i in range(n):
        if not data.a_ops[i].matmul(data.a_ops[i]).is_zero():
            raise AssertionError("a%d^2 nonzero" % (i + 1))
        if not data.b_ops[i].matmul(data.b_ops[i]).is_zero():
            raise AssertionError("b%d^2 nonzero" % (i + 1))
    for _, m in data.operators():
        if not super_bracket(data.e, m).is_zero():
            raise AssertionError("central element fails to commute")
    report.append({"check": "squares-and-center", "status": "ok"})

    # the monomial lattice Z^(2^n) is stable under every operator
    dim = data.p + data.q
    lat = RatLattice([[1 if v == u else 0 for v in range(dim)]
                      for u in range(dim)], dim)
    for _, m in data.operators():
        for u in range(dim):
            col = [0] * dim
            col[u] = 1
            if not lat.contains(m.apply(col)):
                raise AssertionError("operator leaves the monomial lattice")
    report.append({"check": "integral-lattice", "status": "ok"})

    if a != 0:
        flat = [[m.entries.get((r, c), 0) for r in range(dim) for c in range(dim)]
                for _, m in data.operators()]
        if rational_rank(flat) != 2 * n + 1:
            raise AssertionError("matrix representation is not faithful")
        report.append({"check": "faithful", "status": "ok"})
    return report


def heisenberg_group_commutators(data, alg):
    """Group commutators (1 + theta a_i, 1 + eta b_j): the result must be
    I + c theta eta e with the integer c read off the top-left entry."""
    from .supergroup import GroupElement

    results = []
    p, q = data.p, data.q
    for i in range(data.n):
        for j in range(data.n):
            th = alg.gen(1)
            eta = alg.gen(2)
            x = GroupElement.one_plus(p, q, alg, th, data.a_ops[i])
            y = GroupElement.one_plus(p, q, alg, eta, data.b_ops[j])
            xinv = GroupElement.one_plus(p, q, alg, -th, data.a_ops[i])
            yinv = GroupElement.one_plus(p, q, alg, -eta, data.b_ops[j])
            com = x.kmul(y).kmul(xinv).kmul(yinv)
            # subtract the identity, then match against theta*eta*e
            delta = [[com.rows[r][c] - (alg.one() if r == c else alg.zero())
                      for c in range(p + q)] for r in range(p + q)]
            if i != j:
                if any(d.terms for row in delta for d in row):
                    raise AssertionError("off-pair commutator not the identity")
                results.append({"i": i + 1, "j": j + 1, "c": 0})
                continue
            target = th * eta
            c = None
            for r in range(p + q):
                for col in range(p + q):
                    want = target * data.e.entries.get((r, col), 0)
                    got = delta[r][col]
                    if want.terms:
                        ratio = None
                        for key, tc in want.sorted_terms():
                            vc = dict(got.sorted_terms()).get(key)
                            if vc is not None:
                                ratio = vc / tc
                            break
                        if ratio is None or (c is not None and ratio != c):
                            raise AssertionError("commutator is not c*theta*eta*e")
                        c = ratio
                    elif got.terms:
                        raise AssertionError("commutator has support off the center")
            check = [[target * data.e.entries.get((r, col), 0) * c
                      for col in range(p + q)] for r in range(p + q)]
            if check != delta:
                raise AssertionError("commutator is not c*theta*eta*e")
            from fractions import Fraction
            cf = Fraction(c)
            if cf.denominator != 1:
                raise AssertionError("non-integer central constant")
            results.append({"i": i + 1, "j": j + 1, "c": int(cf)})
    return results
