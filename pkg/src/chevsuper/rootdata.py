"""Root systems of the basic classical families A(m,n), B(m,n), C(n), D(m,n).

Roots live in the lattice spanned by e1..e_{n_eps}, d1..d_{n_delta} and are
stored as integer coordinate tuples, e-block first.  The bilinear form is
(e_i, e_j) = delta_ij, (d_k, d_l) = -delta_kl, (e, d) = 0.  A root is
positive when its first nonzero coordinate is positive, and odd exactly
when the sum of its |d| coordinates is odd.
"""

import re
from fractions import Fraction
from itertools import combinations

from .errors import InvalidFamily, NotARoot

_FAMILY_RE = re.compile(r"^([ABCD])\((\d+)(?:,(\d+))?\)$")
_TERM_RE = re.compile(r"([+-]?)(\d*)([ed])(\d+)")


class FamilyType:
    """One of A(m,n), B(m,n), C(n), D(m,n) with its rank bookkeeping."""

    __slots__ = ("letter", "m", "n")

    def __init__(self, letter, m, n=None):
        if letter == "A":
            if n is None or m < 0 or n < 0 or m == n or m + n == 0:
                raise InvalidFamily("A(m,n) needs m,n >= 0, m != n")
        elif letter == "B":
            if n is None or m < 0 or n < 1:
                raise InvalidFamily("B(m,n) needs m >= 0, n >= 1")
        elif letter == "C":
            if n is not None:
                raise InvalidFamily("C takes a single parameter")
            if m < 2:
                raise InvalidFamily("C(n) needs n >= 2")
        elif letter == "D":
            if n is None or m < 2 or n < 1:
                raise InvalidFamily("D(m,n) needs m >= 2, n >= 1")
        else:
            raise InvalidFamily("unknown family letter %r" % letter)
        self.letter = letter
        self.m = m
        self.n = n

    @classmethod
    def parse(cls, text):
        match = _FAMILY_RE.match(text.replace(" ", ""))
        if not match:
            raise InvalidFamily("cannot parse family %r" % text)
        letter, a, b = match.group(1), int(match.group(2)), match.group(3)
        return cls(letter, a, int(b) if b is not None else None)

    @property
    def n_eps(self):
        return {"A": self.m + 1, "B": self.m, "C": 1, "D": self.m}[self.letter]

    @property
    def n_delta(self):
        if self.letter == "A":
            return self.n + 1
        if self.letter == "C":
            return self.m - 1
        return self.n

    @property
    def matrix_shape(self):
        """(p, q): the format of the defining representation gl(p|q)."""
        if self.letter == "A":
            return (self.m + 1, self.n + 1)
        if self.letter == "B":
            return (2 * self.m + 1, 2 * self.n)
        if self.letter == "C":
            return (2, 2 * (self.m - 1))
        return (2 * self.m, 2 * self.n)

    def __str__(self):
        if self.letter == "C":
            return "C(%d)" % self.m
        return "%s(%d,%d)" % (self.letter, self.m, self.n)

    def __eq__(self, other):
        return (isinstance(other, FamilyType) and other.letter == self.letter
                and other.m == self.m and other.n == self.n)

    def __hash__(self):
        return hash((self.letter, self.m, self.n))

    def __repr__(self):
        return "FamilyType.parse(%r)" % str(self)


class Root:
    """Integer coordinate vector in the e/d weight lattice."""

    __slots__ = ("coords", "n_eps")

    def __init__(self, coords, n_eps):
        self.coords = tuple(coords)
        self.n_eps = n_eps

    @property
    def n_delta(self):
        return len(self.coords) - self.n_eps

    def eps_part(self):
        return self.coords[:self.n_eps]

    def delta_part(self):
        return self.coords[self.n_eps:]

    def is_positive(self):
        for c in self.coords:
            if c:
                return c > 0
        return False

    def is_zero(self):
        return not any(self.coords)

    def __add__(self, other):
        return Root([a + b for a, b in zip(self.coords, other.coords)], self.n_eps)

    def __sub__(self, other):
        return Root([a - b for a, b in zip(self.coords, other.coords)], self.n_eps)

    def __neg__(self):
        return Root([-a for a in self.coords], self.n_eps)

    def scaled(self, k):
        return Root([k * a for a in self.coords], self.n_eps)

    def __eq__(self, other):
        return (isinstance(other, Root) and other.coords == self.coords
                and other.n_eps == self.n_eps)

    def __hash__(self):
        return hash((self.coords, self.n_eps))

    def __lt__(self, other):
        return self.coords < other.coords

    def __str__(self):
        parts = []
        for idx, c in enumerate(self.coords):
            if not c:
                continue
            if idx < self.n_eps:
                label = "e%d" % (idx + 1)
            else:
                label = "d%d" % (idx - self.n_eps + 1)
            mag = abs(c)
            term = label if mag == 1 else "%d%s" % (mag, label)
            parts.append(("-" if c < 0 else "+") + term)
        if not parts:
            return "0"
        joined = "".join(parts)
        return joined[1:] if joined[0] == "+" else joined

    def __repr__(self):
        return "<Root %s>" % self

    @classmethod
    def parse(cls, text, n_eps, n_delta):
        s = text.replace(" ", "")
        coords = [0] * (n_eps + n_delta)
        pos = 0
        seen = False
        for match in _TERM_RE.finditer(s):
            if match.start() != pos:
                raise NotARoot("cannot parse root %r" % text)
            pos = match.end()
            seen = True
            sign = -1 if match.group(1) == "-" else 1
            mag = int(match.group(2)) if match.group(2) else 1
            idx = int(match.group(4)) - 1
            if match.group(3) == "e":
                if not 0 <= idx < n_eps:
                    raise NotARoot("index out of range in %r" % text)
            else:
                if not 0 <= idx < n_delta:
                    raise NotARoot("index out of range in %r" % text)
                idx += n_eps
            coords[idx] += sign * mag
        if not seen or pos != len(s):
            raise NotARoot("cannot parse root %r" % text)
        return cls(coords, n_eps)


def form(a, b):
    """Invariant form on the weight lattice."""
    total = 0
    for i, (x, y) in enumerate(zip(a.coords, b.coords)):
        total += x * y if i < a.n_eps else -x * y
    return total


class RootSystem:
    """The full root set of a family, with parity and string bookkeeping."""

    __slots__ = ("family", "n_eps", "n_delta", "roots", "_index")

    def __init__(self, family, roots):
        self.family = family
        self.n_eps = family.n_eps
        self.n_delta = family.n_delta
        self.roots = roots
        self._index = {r.coords for r in roots}

    def __contains__(self, root):
        return root.coords in self._index

    def root(self, text):
        r = Root.parse(text, self.n_eps, self.n_delta)
        if r not in self:
            raise NotARoot("%s is not a root of %s" % (r, self.family))
        return r

    def parity(self, root):
        # odd exactly when the d-block has odd weight
        return sum(abs(c) for c in root.delta_part()) % 2

    def is_isotropic(self, root):
        return form(root, root) == 0

    def positive_roots(self):
        return [r for r in self.roots if r.is_positive()]

    def even_roots(self):
        return [r for r in self.roots if self.parity(r) == 0]

    def odd_roots(self):
        return [r for r in self.roots if self.parity(r) == 1]

    def simple_system(self):
        """Positive roots that are not sums of two positive roots."""
        pos = self.positive_roots()
        pos_set = {r.coords for r in pos}
        simple = []
        for r in pos:
            decomposable = any(
                tuple(x - y for x, y in zip(r.coords, s)) in pos_set
                for s in pos_set if s != r.coords)
            if not decomposable:
                simple.append(r)
        return simple

    def string_down_length(self, alpha, beta):
        """Number of steps r such that beta - alpha, ..., beta - r*alpha all
        stay in the root system; hitting zero counts as a final step."""
        k = 1
        while True:
            gamma = beta - alpha.scaled(k)
            if gamma.is_zero():
                return k
            if gamma not in self:
                return k - 1
            k += 1

    def string_up_length(self, alpha, beta):
        k = 1
        while True:
            gamma = beta + alpha.scaled(k)
            if gamma.is_zero():
                return k
            if gamma not in self:
                return k - 1
            k += 1

    def string_roots(self, alpha, beta):
        """All roots beta + k*alpha in the closed string through beta."""
        out = []
        r = self.string_down_length(alpha, beta)
        q = self.string_up_length(alpha, beta)
        for k in range(-r, q + 1):
            gamma = beta + alpha.scaled(k)
            if gamma in self:
                out.append(gamma)
        return out

    def coroot(self, alpha):
        """Cartan coordinates (on the h_i, g_l basis; diagonal entries for
        the A family) of the coroot attached to alpha.

        Non-isotropic alpha: the classical 2 alpha / (alpha, alpha), read off
        coordinatewise; so the coroot of d_k is twice the coroot of 2 d_k.
        Isotropic alpha: the e coords and minus the d coords, scaled by a
        per-family factor matching the chosen root vectors (2 for B, else 1).
        """
        if alpha not in self:
            raise NotARoot("%s is not a root of %s" % (alpha, self.family))
        norm = form(alpha, alpha)
        if norm != 0:
            out = []
            for i, c in enumerate(alpha.coords):
                num = 2 * c if i < self.n_eps else -2 * c
                val = Fraction(num, norm)
                assert val.denominator == 1
                out.append(int(val))
            return tuple(out)
        factor = 2 if self.family.letter == "B" else 1
        return tuple(factor * (c if i < self.n_eps else -c)
                     for i, c in enumerate(alpha.coords))

    def sorted_roots(self):
        return sorted(self.roots, key=lambda r: r.coords)


def _signed(units):
    for u in units:
        yield u
        yield [-c for c in u]


def build_root_system(family):
    if isinstance(family, str):
        family = FamilyType.parse(family)
    ne, nd = family.n_eps, family.n_delta
    dim = ne + nd

    def vec(pairs):
        v = [0] * dim
        for idx, c in pairs:
            v[idx] += c
        return v

    roots = []
    letter = family.letter
    if letter == "A":
        for i in range(ne):
            for j in range(ne):
                if i != j:
                    roots.append(vec([(i, 1), (j, -1)]))
        for k in range(nd):
            for l in range(nd):
                if k != l:
                    roots.append(vec([(ne + k, 1), (ne + l, -1)]))
        for i in range(ne):
            for k in range(nd):
                roots.append(vec([(i, 1), (ne + k, -1)]))
                roots.append(vec([(i, -1), (ne + k, 1)]))
    else:
        # shared osp stock: sp roots on the d block
        for k, l in combinations(range(nd), 2):
            for sk in (1, -1):
                for sl in (1, -1):
                    roots.append(vec([(ne + k, sk), (ne + l, sl)]))
        for k in range(nd):
            roots.extend(_signed([vec([(ne + k, 2)])]))
        # so roots on the e block
        for i, j in combinations(range(ne), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    roots.append(vec([(i, si), (j, sj)]))
        if letter == "B":
            for i in range(ne):
                roots.extend(_signed([vec([(i, 1)])]))
            for k in range(nd):
                roots.extend(_signed([vec([(ne + k, 1)])]))
        # odd mixed roots
        for i in range(ne):
            for k in range(nd):
                for si in (1, -1):
                    for sk in (1, -1):
                        roots.append(vec([(i, si), (ne + k, sk)]))
    root_objs = [Root(v, ne) for v in roots]
    root_objs.sort(key=lambda r: r.coords)
    return RootSystem(family, root_objs)


def alpha_string_length(rs, alpha, beta):
    """Number of steps r with beta - alpha, ..., beta - r*alpha all roots
    (or zero, which ends the walk)."""
    if alpha not in rs or beta not in rs:
        raise NotARoot("string endpoints must be roots")
    return rs.string_down_length(alpha, beta)


def coroot(rs, alpha):
    if alpha not in rs:
        raise NotARoot("%s is not a root" % (alpha,))
    return rs.coroot(alpha)
