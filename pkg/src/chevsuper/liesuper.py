"""Matrix realizations of the basic classical Lie superalgebras with an
integral Chevalley-style basis, verified at construction time.

The defining module is k^(p|q).  For the orthosymplectic families the even
block carries the split bilinear form, so basis vectors are indexed by
signed labels: +1..+m, (0 for odd orthogonal), -m..-1 on the first block
and +1..+n, -n..-1 on the second.  All root vectors are sparse integer
matrices with one or two entries.
"""

from fractions import Fraction
from math import factorial

from .errors import (DegenerateWeights, IntegralityViolation, NotAChevalleyBasis,
                     NotARoot, NotHomogeneous, NotRational)
from .exactlin import RatLattice, dual_stabilizer_lattice
from .rootdata import FamilyType, Root, build_root_system
from .scalars import integer_binomial, is_integer


class SuperMatrix:
    """Sparse (p|q) block matrix over exact scalars."""

    __slots__ = ("p", "q", "entries")

    def __init__(self, p, q, entries=None):
        self.p = p
        self.q = q
        self.entries = dict(entries) if entries else {}

    @classmethod
    def unit(cls, p, q, i, j, c=1):
        return cls(p, q, {(i, j): c} if c else None)

    @property
    def size(self):
        return self.p + self.q

    def block(self, i):
        return 0 if i < self.p else 1

    def _same_shape(self, other):
        if self.p != other.p or self.q != other.q:
            raise ValueError("block shape mismatch")

    def __add__(self, other):
        self._same_shape(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return SuperMatrix(self.p, self.q, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SuperMatrix(self.p, self.q, {k: -v for k, v in self.entries.items()})

    def scale(self, c):
        if not c:
            return SuperMatrix(self.p, self.q)
        return SuperMatrix(self.p, self.q, {k: c * v for k, v in self.entries.items()})

    def matmul(self, other):
        self._same_shape(other)
        out = {}
        for (i, k), a in self.entries.items():
            for (k2, j), b in other.entries.items():
                if k != k2:
                    continue
                key = (i, j)
                s = out.get(key)
                c = a * b
                s = c if s is None else s + c
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return SuperMatrix(self.p, self.q, out)

    def __eq__(self, other):
        return (isinstance(other, SuperMatrix) and other.p == self.p
                and other.q == self.q and other.entries == self.entries)

    def is_zero(self):
        return not self.entries

    def parity(self):
        """0 or 1 for a homogeneous matrix; NotHomogeneous otherwise."""
        par = None
        for (i, j) in self.entries:
            pij = (self.block(i) + self.block(j)) % 2
            if par is None:
                par = pij
            elif par != pij:
                raise NotHomogeneous("matrix has entries in blocks of both parities")
        return 0 if par is None else par

    def supertrace(self):
        total = 0
        for (i, j), v in self.entries.items():
            if i == j:
                total = total + (v if i < self.p else -v)
        return total

    def diagonal(self):
        return [self.entries.get((i, i), 0) for i in range(self.size)]

    def is_diagonal(self):
        return all(i == j for (i, j) in self.entries)

    def dense(self):
        n = self.size
        return [[self.entries.get((i, j), 0) for j in range(n)] for i in range(n)]

    def has_integer_entries(self):
        return all(is_integer(v) for v in self.entries.values())

    def apply(self, vector):
        out = [0] * self.size
        for (i, j), v in self.entries.items():
            out[i] = out[i] + v * vector[j]
        return out

    def __repr__(self):
        return "SuperMatrix(%d|%d, %r)" % (self.p, self.q, self.entries)


def super_bracket(x, y):
    """[x,y] = xy - (-1)^{|x||y|} yx for homogeneous x, y."""
    px, py = x.parity(), y.parity()
    yx = y.matmul(x)
    if px and py:
        return x.matmul(y) + yx
    return x.matmul(y) - yx


def supertrace(x):
    return x.supertrace()


def divided_power(x, n):
    """x^n / n! computed exactly over the rationals."""
    if n < 0:
        raise ValueError("negative divided power")
    acc = SuperMatrix(x.p, x.q, {(i, i): 1 for i in range(x.size)})
    for _ in range(n):
        acc = acc.matmul(x)
    return acc.scale(Fraction(1, factorial(n)))


def _proportionality(m, base):
    """Scalar c with m == c*base, or None when no such scalar exists."""
    if base.is_zero():
        return 0 if m.is_zero() else None
    (i, j), v = next(iter(base.entries.items()))
    c = Fraction(m.entries.get((i, j), 0)) / Fraction(v)
    if base.scale(c) == m:
        return c
    return None


class StructureConstantTable:
    """All defined c_{alpha,beta} with their string data and matched rule."""

    __slots__ = ("family", "rows")

    def __init__(self, family, rows):
        self.family = family
        self.rows = rows

    def constant(self, alpha, beta):
        for row in self.rows:
            if row["alpha"] == str(alpha) and row["beta"] == str(beta):
                return row["c"]
        raise KeyError("no structure constant for (%s, %s)" % (alpha, beta))


class ChevalleyBasis:
    """Cartan elements plus one integer root vector per root.

    The construction enforces, with exact arithmetic:
      (a) the Cartan basis and the coroots span the same integer lattice;
      (b) ad(H) acts on each root vector by an integer eigenvalue;
      (c) [X_alpha, X_-alpha] = sigma_alpha H_alpha, sigma = -1 on negative
          odd roots;
      (d) every bracket of root vectors is an integer multiple of a root
          vector, with the magnitude sanctioned by the alpha-string length,
          the Cartan pairing beta(H_alpha), or (for strings through odd
          roots and isotropic pairs) left to the integrality requirement.
    """

    __slots__ = ("system", "family", "p", "q", "root_vectors", "cartan",
                 "cartan_roots", "_coroots", "verification_report")

    def __init__(self, system, root_vectors):
        self.system = system
        self.family = system.family
        self.p, self.q = system.family.matrix_shape
        self.root_vectors = root_vectors
        self._coroots = {}
        self.cartan = []
        self.cartan_roots = []
        self.verification_report = []

    # -- lookups ---------------------------------------------------------

    def _root(self, alpha):
        if isinstance(alpha, str):
            return self.system.root(alpha)
        if alpha not in self.system:
            raise NotARoot("%s is not a root of %s" % (alpha, self.family))
        return alpha

    def vector(self, alpha):
        return self.root_vectors[self._root(alpha).coords]

    def sigma(self, alpha):
        alpha = self._root(alpha)
        if self.system.parity(alpha) == 1 and not alpha.is_positive():
            return -1
        return 1

    def roots(self):
        return self.system.sorted_roots()

    def basis_elements(self):
        """All (label, matrix) pairs: root vectors then Cartan elements."""
        out = [(str(r), self.root_vectors[r.coords]) for r in self.roots()]
        out.extend(("H%d" % (i + 1), h) for i, h in enumerate(self.cartan))
        return out

    # -- Cartan side -----------------------------------------------------

    def cartan_matrix_from_coords(self, coords):
        """Map (a | b) Cartan coordinates to the diagonal matrix: the a_i
        weight the e-block pairs (diagonal entries for the A family), the
        b_l the d-block pairs."""
        fam = self.family
        ne = fam.n_eps
        entries = {}

        def put(idx, val):
            if val:
                entries[(idx, idx)] = entries.get((idx, idx), 0) + val

        if fam.letter == "A":
            for i, c in enumerate(coords):
                put(i, c)
        else:
            for i in range(ne):
                put(_v0_index(fam, i + 1), coords[i])
                put(_v0_index(fam, -(i + 1)), -coords[i])
            for l in range(fam.n_delta):
                put(_v1_index(fam, l + 1), coords[ne + l])
                put(_v1_index(fam, -(l + 1)), -coords[ne + l])
        return SuperMatrix(self.p, self.q, entries)

    def coroot_matrix(self, alpha):
        """The coroot H_alpha entering conditions (c) and the torus weights.
        Odd non-isotropic alpha share the coroot of 2*alpha, so that
        [X_alpha, X_-alpha] = H_alpha holds on the nose."""
        alpha = self._root(alpha)
        cached = self._coroots.get(alpha.coords)
        if cached is not None:
            return cached
        rs = self.system
        if rs.parity(alpha) == 1 and not rs.is_isotropic(alpha):
            coords = rs.coroot(alpha.scaled(2))
        else:
            coords = rs.coroot(alpha)
        out = self.cartan_matrix_from_coords(coords)
        self._coroots[alpha.coords] = out
        return out

    def ad_eigenvalue(self, h, beta):
        """beta(H) for diagonal H, read off the realization."""
        beta = self._root(beta)
        x = self.vector(beta)
        d = h.diagonal()
        vals = {d[i] - d[j] for (i, j) in x.entries}
        if len(vals) != 1:
            raise NotAChevalleyBasis("inconsistent weight for %s" % beta)
        return vals.pop()

    def weight_of_index(self, u):
        """Weight of the u-th defining basis vector, in (e | d) coordinates."""
        fam = self.family
        ne, nd = fam.n_eps, fam.n_delta
        coords = [0] * (ne + nd)
        if fam.letter == "A":
            if u < self.p:
                coords[u] = 1
            else:
                coords[ne + (u - self.p)] = 1
        else:
            for i in range(1, ne + 1):
                if u == _v0_index(fam, i):
                    coords[i - 1] = 1
                elif u == _v0_index(fam, -i):
                    coords[i - 1] = -1
            for l in range(1, nd + 1):
                if u == _v1_index(fam, l):
                    coords[ne + l - 1] = 1
                elif u == _v1_index(fam, -l):
                    coords[ne + l - 1] = -1
        return tuple(coords)

    def structure_constant(self, alpha, beta):
        alpha, beta = self._root(alpha), self._root(beta)
        total = alpha + beta
        if total not in self.system:
            raise NotARoot("%s + %s is not a root" % (alpha, beta))
        br = super_bracket(self.vector(alpha), self.vector(beta))
        c = _proportionality(br, self.vector(total))
        if c is None or Fraction(c).denominator != 1:
            raise IntegralityViolation("bracket not an integer multiple", witness=c)
        return int(c)

    # -- verification ----------------------------------------------------

    def _magnitude_candidates(self, alpha, beta):
        """Sanctioned |c| values per parity/isotropy of the pair, with the
        rule label that produced each."""
        rs = self.system
        out = {}
        iso_a = rs.is_isotropic(alpha)
        iso_b = rs.is_isotropic(beta)
        if iso_a and iso_b:
            return None  # both isotropic: integrality only
        r = rs.string_down_length(alpha, beta)
        out.setdefault(r + 1, "string")
        # |c| is orientation-independent, so the Cartan pairing of either
        # non-isotropic member sanctions the pair
        if not iso_a:
            pairing = abs(self.ad_eigenvalue(self.coroot_matrix(alpha), beta))
            out.setdefault(pairing, "cartan-pairing")
        if not iso_b:
            pairing = abs(self.ad_eigenvalue(self.coroot_matrix(beta), alpha))
            out.setdefault(pairing, "cartan-pairing")
        if any(rs.parity(g) == 1 for g in rs.string_roots(alpha, beta)):
            q = rs.string_up_length(alpha, beta)
            out.setdefault(q, "odd-in-string")
        return out

    def verify(self):
        rs = self.system
        report = []
        roots = self.roots()

        for alpha in roots:
            x = self.vector(alpha)
            if x.parity() != rs.parity(alpha):
                raise NotAChevalleyBasis("parity mismatch at %s" % alpha)
            if not x.has_integer_entries():
                raise IntegralityViolation("non-integer root vector at %s" % alpha)

        # (a) Cartan basis and coroots generate the same lattice
        dim = self.p + self.q
        cart_lat = RatLattice([h.diagonal() for h in self.cartan], dim)
        coroot_lat = RatLattice(
            [self.coroot_matrix(a).diagonal() for a in roots], dim)
        if cart_lat != coroot_lat:
            raise NotAChevalleyBasis("Cartan basis does not span the coroot lattice")
        report.append({"check": "coroot-span", "status": "ok"})

        # (b) integer ad-eigenvalues
        for h in self.cartan:
            for alpha in roots:
                ev = self.ad_eigenvalue(h, alpha)
                if not is_integer(ev):
                    raise IntegralityViolation(
                        "eigenvalue %s on %s" % (ev, alpha), witness=ev)
                if super_bracket(h, self.vector(alpha)) != self.vector(alpha).scale(ev):
                    raise NotAChevalleyBasis("ad(H) is not diagonal at %s" % alpha)
        report.append({"check": "cartan-action", "status": "ok"})

        # (c) opposite pairs
        for alpha in roots:
            br = super_bracket(self.vector(alpha), self.vector(-alpha))
            if br != self.coroot_matrix(alpha).scale(self.sigma(alpha)):
                raise NotAChevalleyBasis("pair bracket fails at %s" % alpha)
        report.append({"check": "opposite-pairs", "status": "ok"})

        # (d) all remaining pairs
        n_pairs = 0
        for alpha in roots:
            for beta in roots:
                if (alpha + beta).is_zero():
                    continue
                br = super_bracket(self.vector(alpha), self.vector(beta))
                total = alpha + beta
                if total not in rs:
                    if not br.is_zero():
                        raise NotAChevalleyBasis(
                            "bracket outside root space at (%s, %s)" % (alpha, beta))
                    continue
                c = _proportionality(br, self.vector(total))
                if c is None:
                    raise NotAChevalleyBasis(
                        "bracket not proportional at (%s, %s)" % (alpha, beta))
                if Fraction(c).denominator != 1:
                    raise IntegralityViolation(
                        "c_{%s,%s} = %s" % (alpha, beta, c), witness=c)
                c = int(c)
                if c == 0:
                    raise NotAChevalleyBasis(
                        "vanishing constant at (%s, %s)" % (alpha, beta))
                candidates = self._magnitude_candidates(alpha, beta)
                if candidates is not None and abs(c) not in candidates:
                    r = rs.string_down_length(alpha, beta)
                    detail = "r+2 clause (excluded family)" if abs(c) == r + 2 \
                        else "magnitude %d unsanctioned" % abs(c)
                    raise NotAChevalleyBasis(
                        "c_{%s,%s} = %d: %s" % (alpha, beta, c, detail))
                n_pairs += 1
        report.append({"check": "structure-constants", "status": "ok",
                       "pairs": n_pairs})

        # supertrace form is the coordinate form up to one family scalar
        scale = None
        ok = True
        for alpha in roots:
            for beta in roots:
                ha = self.coroot_matrix(alpha)
                hb = self.coroot_matrix(beta)
                lhs = ha.matmul(hb).supertrace()
                rhs = _signature_dot(rs, _cb_coroot_coords(rs, alpha),
                                     _cb_coroot_coords(rs, beta))
                if rhs == 0:
                    if lhs != 0:
                        ok = False
                    continue
                ratio = Fraction(lhs, rhs)
                if scale is None:
                    scale = ratio
                elif ratio != scale:
                    ok = False
        if not ok:
            raise NotAChevalleyBasis("supertrace form is not proportional")
        report.append({"check": "invariant-form", "status": "ok",
                       "scale": str(scale)})

        # divided powers of even root vectors stay integral; odd squares
        for alpha in roots:
            x = self.vector(alpha)
            if rs.parity(alpha) == 0:
                n = 1
                while True:
                    dp = divided_power(x, n)
                    if dp.is_zero():
                        break
                    if n > self.p + self.q:
                        raise NotAChevalleyBasis("%s is not nilpotent" % alpha)
                    if not dp.has_integer_entries():
                        raise IntegralityViolation(
                            "divided power %s^(%d)" % (alpha, n))
                    n += 1
            elif rs.is_isotropic(alpha):
                if not x.matmul(x).is_zero():
                    raise NotAChevalleyBasis("isotropic %s has nonzero square" % alpha)
            else:
                sq = x.matmul(x)
                double = alpha.scaled(2)
                if _proportionality(sq, self.vector(double)) not in (1, -1):
                    raise NotAChevalleyBasis("square of %s is not ±X_2a" % alpha)
        report.append({"check": "divided-powers", "status": "ok"})

        self.verification_report = report
        return report


def _signature_dot(rs, ca, cb):
    total = 0
    for i, (x, y) in enumerate(zip(ca, cb)):
        total += x * y if i < rs.n_eps else -x * y
    return total


def _cb_coroot_coords(rs, alpha):
    if rs.parity(alpha) == 1 and not rs.is_isotropic(alpha):
        return rs.coroot(alpha.scaled(2))
    return rs.coroot(alpha)


# -- realization builders -------------------------------------------------

def _v0_index(fam, label):
    """Row of the even basis vector with signed label (0 allowed for B)."""
    p = fam.matrix_shape[0]
    if label == 0:
        return fam.n_eps  # only the B family has the middle vector
    if label > 0:
        return label - 1
    return p + label  # -i at p - i


def _v1_index(fam, label):
    p, q = fam.matrix_shape
    if label > 0:
        return p + label - 1
    return p + q + label


def _build_a(family, rs):
    p, q = family.matrix_shape
    ne = family.n_eps

    def idx(k):
        return k if k < ne else p + (k - ne)

    vectors = {}
    for r in rs.roots:
        pos = [i for i, c in enumerate(r.coords) if c > 0][0]
        neg = [i for i, c in enumerate(r.coords) if c < 0][0]
        vectors[r.coords] = SuperMatrix.unit(p, q, idx(pos), idx(neg))
    return vectors


def _build_osp(family, rs):
    p, q = family.matrix_shape
    ne, nd = family.n_eps, family.n_delta

    def E(i, j, c=1):
        return SuperMatrix.unit(p, q, i, j, c)

    def v0(label):
        return _v0_index(family, label)

    def v1(label):
        return _v1_index(family, label)

    vectors = {}

    def put(coords_pairs, matrix):
        v = [0] * (ne + nd)
        for idx, c in coords_pairs:
            v[idx] += c
        vectors[tuple(v)] = matrix

    # even, e-block (orthogonal side)
    for i in range(1, ne + 1):
        for j in range(1, ne + 1):
            if i == j:
                continue
            put([(i - 1, 1), (j - 1, -1)],
                E(v0(i), v0(j)) - E(v0(-j), v0(-i)))
    for i in range(1, ne + 1):
        for j in range(i + 1, ne + 1):
            put([(i - 1, 1), (j - 1, 1)],
                E(v0(i), v0(-j)) - E(v0(j), v0(-i)))
            put([(i - 1, -1), (j - 1, -1)],
                E(v0(-j), v0(i)) - E(v0(-i), v0(j)))
    if family.letter == "B":
        for i in range(1, ne + 1):
            put([(i - 1, 1)], E(v0(i), v0(0), 2) - E(v0(0), v0(-i)))
            put([(i - 1, -1)], E(v0(0), v0(i)) - E(v0(-i), v0(0), 2))

    # even, d-block (symplectic side)
    for k in range(1, nd + 1):
        for l in range(1, nd + 1):
            if k == l:
                continue
            put([(ne + k - 1, 1), (ne + l - 1, -1)],
                E(v1(k), v1(l)) - E(v1(-l), v1(-k)))
    for k in range(1, nd + 1):
        for l in range(k + 1, nd + 1):
            put([(ne + k - 1, 1), (ne + l - 1, 1)],
                E(v1(k), v1(-l)) + E(v1(l), v1(-k)))
            put([(ne + k - 1, -1), (ne + l - 1, -1)],
                E(v1(-l), v1(k)) + E(v1(-k), v1(l)))
    for k in range(1, nd + 1):
        put([(ne + k - 1, 2)], E(v1(k), v1(-k)))
        put([(ne + k - 1, -2)], E(v1(-k), v1(k)))

    # odd
    if family.letter == "B":
        for k in range(1, nd + 1):
            put([(ne + k - 1, 1)], E(v0(0), v1(-k)) + E(v1(k), v0(0)))
            put([(ne + k - 1, -1)], E(v0(0), v1(k)) - E(v1(-k), v0(0)))
        for i in range(1, ne + 1):
            for l in range(1, nd + 1):
                put([(i - 1, 1), (ne + l - 1, -1)],
                    E(v0(i), v1(l), 2) - E(v1(-l), v0(-i)))
                put([(i - 1, -1), (ne + l - 1, 1)],
                    E(v0(-i), v1(-l), 2) + E(v1(l), v0(i)))
                put([(i - 1, 1), (ne + l - 1, 1)],
                    E(v0(i), v1(-l), 2) + E(v1(l), v0(-i)))
                put([(i - 1, -1), (ne + l - 1, -1)],
                    E(v1(-l), v0(i)) - E(v0(-i), v1(l), 2))
    else:
        for u in [i for i in range(1, ne + 1)] + [-i for i in range(1, ne + 1)]:
            for l in ([k for k in range(1, nd + 1)]
                      + [-k for k in range(1, nd + 1)]):
                su = 1 if u > 0 else -1
                sl = 1 if l > 0 else -1
                tau = sl
                put([(abs(u) - 1, su), (ne + abs(l) - 1, -sl)],
                    E(v0(u), v1(l)) - E(v1(-l), v0(-u), tau))
    return vectors


def build_chevalley_basis(family):
    """Construct and exhaustively verify the basis for one family instance."""
    if isinstance(family, str):
        family = FamilyType.parse(family)
    rs = build_root_system(family)
    if family.letter == "A":
        vectors = _build_a(family, rs)
    else:
        vectors = _build_osp(family, rs)
    cb = ChevalleyBasis(rs, vectors)

    # pin the sign of each negative isotropic vector so the opposite-pair
    # bracket is +H_beta rather than -H_beta
    for beta in rs.roots:
        if not beta.is_positive() or not rs.is_isotropic(beta):
            continue
        br = super_bracket(cb.vector(beta), cb.vector(-beta))
        target = cb.coroot_matrix(beta)
        if br == target:
            continue
        if br == -target:
            vectors[(-beta).coords] = -vectors[(-beta).coords]
        else:
            raise NotAChevalleyBasis("pair bracket of %s is not ±H" % beta)

    cb.cartan_roots = rs.simple_system()
    cb.cartan = [cb.coroot_matrix(s) for s in cb.cartan_roots]
    cb.verify()
    return cb


def structure_constants(cb):
    """Expand every defined bracket; record c, the string length r, and the
    magnitude rule that sanctioned |c|."""
    rs = cb.system
    rows = []
    for alpha in cb.roots():
        for beta in cb.roots():
            total = alpha + beta
            if total.is_zero() or total not in rs:
                continue
            c = cb.structure_constant(alpha, beta)
            r = rs.string_down_length(alpha, beta)
            candidates = cb._magnitude_candidates(alpha, beta)
            rule = "isotropic-pair" if candidates is None \
                else candidates.get(abs(c), "unsanctioned")
            rows.append({"alpha": str(alpha), "beta": str(beta),
                         "c": c, "r": r, "rule": rule})
    return StructureConstantTable(cb.family, rows)


# -- exhaustive super Jacobi ---------------------------------------------

def jacobi_check(cb):
    """Super anti-symmetry over all pairs and the graded Jacobi identity
    over all ordered basis triples.  Returns the number of triples."""
    elems = [m for _, m in cb.basis_elements()]
    pars = [m.parity() for m in elems]
    n = len(elems)
    pair = [[super_bracket(elems[i], elems[j]) for j in range(n)]
            for i in range(n)]
    for i in range(n):
        for j in range(n):
            sign = -1 if (pars[i] and pars[j]) else 1
            if pair[i][j] != pair[j][i].scale(-sign):
                raise NotAChevalleyBasis("anti-symmetry fails at (%d,%d)" % (i, j))
    count = 0
    for ix in range(n):
        for iy in range(n):
            for iz in range(n):
                px, py, pz = pars[ix], pars[iy], pars[iz]
                t1 = super_bracket(elems[ix], pair[iy][iz])
                if px and pz:
                    t1 = -t1
                t2 = super_bracket(elems[iy], pair[iz][ix])
                if py and px:
                    t2 = -t2
                t3 = super_bracket(elems[iz], pair[ix][iy])
                if pz and py:
                    t3 = -t3
                if not (t1 + t2 + t3).is_zero():
                    raise NotAChevalleyBasis(
                        "Jacobi fails at triple (%d,%d,%d)" % (ix, iy, iz))
                count += 1
    return count


# -- Kostant integral form -----------------------------------------------

def binomial_H_action(h, n, vector):
    """Coordinate-wise binom(mu(H), n) on a weight-basis vector."""
    out = []
    for d, v in zip(h.diagonal(), vector):
        d = Fraction(d)
        if d.denominator != 1:
            raise NotRational("eigenvalue %s is not an integer" % d)
        out.append(integer_binomial(int(d), n) * v)
    return out


def pbw_generator_order(cb):
    """The fixed total order of monomial factor slots: root vectors by
    coordinate order, then the Cartan binomial slots."""
    order = []
    for r in cb.roots():
        kind = "ev" if cb.system.parity(r) == 0 else "odd"
        order.append((kind, r))
    for i in range(len(cb.cartan)):
        order.append(("h", i))
    return order


def kostant_monomial_action(cb, factors, vector):
    """Apply an ordered PBW-style monomial to an integer vector of the
    defining module, checking integrality after each factor.

    Factors are (kind, root-or-index, exponent) with kind in ev/odd/h;
    they must appear in the fixed slot order, odd slots with exponent 1
    and no repeats.
    """
    order = {}
    for pos, (kind, key) in enumerate(pbw_generator_order(cb)):
        order[(kind, key if kind == "h" else key.coords)] = pos
    last = -1
    for kind, key, exp in factors:
        slot = (kind, key if kind == "h" else cb._root(key).coords)
        if slot not in order:
            raise ValueError("unknown factor %r" % (slot,))
        pos = order[slot]
        if pos <= last:
            raise ValueError("factors out of order or repeated")
        last = pos
        if kind == "odd" and exp != 1:
            raise ValueError("odd factors carry exponent 1, without repetitions")

    v = [Fraction(x) for x in vector]
    for kind, key, exp in reversed(factors):
        if kind == "ev":
            m = divided_power(cb.vector(key), exp)
            v = [Fraction(x) for x in m.apply(v)]
        elif kind == "odd":
            v = [Fraction(x) for x in cb.vector(key).apply(v)]
        else:
            v = binomial_H_action(cb.cartan[key], exp, v)
        for x in v:
            if Fraction(x).denominator != 1:
                raise IntegralityViolation(
                    "monomial leaves the lattice", witness=x)
    return [int(x) for x in v]


def random_pbw_monomial(cb, rng, max_factors=5):
    order = pbw_generator_order(cb)
    dim = cb.p + cb.q
    k = rng.randint(1, max_factors)
    picks = sorted(rng.sample(range(len(order)), min(k, len(order))))
    factors = []
    for pos in picks:
        kind, key = order[pos]
        if kind == "odd":
            factors.append((kind, key, 1))
        else:
            factors.append((kind, key, rng.randint(1, dim)))
    return factors


def kostant_generator_matrices(cb):
    """Single Kostant generators as exact matrices: divided powers of the
    even root vectors up to nilpotency, odd root vectors, and the Cartan
    binomial operators up to the module dimension."""
    dim = cb.p + cb.q
    mats = []
    for r in cb.roots():
        x = cb.vector(r)
        if cb.system.parity(r) == 0:
            n = 1
            while True:
                dp = divided_power(x, n)
                if dp.is_zero():
                    break
                mats.append(dp)
                n += 1
        else:
            mats.append(x)
    for h in cb.cartan:
        for n in range(1, dim + 1):
            diag = {(u, u): integer_binomial(int(Fraction(d)), n)
                    for u, d in enumerate(h.diagonal())}
            mats.append(SuperMatrix(cb.p, cb.q, diag))
    return mats


def admissible_lattice_check(cb, generators):
    """True iff the integer span of the generators is stable under every
    Kostant generator."""
    dim = cb.p + cb.q
    lat = RatLattice(generators, dim)
    if lat.rank < dim:
        raise DegenerateWeights("generators do not span the module")
    basis = lat.basis()
    for m in kostant_generator_matrices(cb):
        for b in basis:
            if not lat.contains(m.apply(list(b))):
                return False
    return True


# -- stabilizer lattices -------------------------------------------------

def stabilizer_cartan(cb, weights):
    """Lattice {H in the Cartan of the realization : mu(H) integral for all
    mu}, returned in diagonal coordinates of the defining module.

    The weights are (e | d) coordinate tuples and must span the dual of
    the Cartan rationally.
    """
    r = len(cb.cartan)
    rows = []
    for mu in weights:
        rows.append([_pair_weight_with_cartan(cb, mu, h) for h in cb.cartan])
    coeff_lat = dual_stabilizer_lattice(rows, r)
    dim = cb.p + cb.q
    diag_vectors = []
    for coeffs in coeff_lat.basis():
        diag = [Fraction(0)] * dim
        for c, h in zip(coeffs, cb.cartan):
            for u, d in enumerate(h.diagonal()):
                diag[u] += c * d
        diag_vectors.append(diag)
    return RatLattice(diag_vectors, dim)


def _pair_weight_with_cartan(cb, mu, h):
    fam = cb.family
    ne, nd = fam.n_eps, fam.n_delta
    d = h.diagonal()
    total = Fraction(0)
    if fam.letter == "A":
        for i in range(ne):
            total += Fraction(mu[i]) * d[i]
        for l in range(nd):
            total += Fraction(mu[ne + l]) * d[cb.p + l]
    else:
        for i in range(ne):
            total += Fraction(mu[i]) * d[_v0_index(fam, i + 1)]
        for l in range(nd):
            total += Fraction(mu[ne + l]) * d[_v1_index(fam, l + 1)]
    return total


def defining_weights(cb):
    return [cb.weight_of_index(u) for u in range(cb.p + cb.q)]


def coroot_lattice(cb):
    dim = cb.p + cb.q
    return RatLattice([cb.coroot_matrix(a).diagonal() for a in cb.roots()], dim)


def verify_cartan_candidate(cb, matrices):
    """Re-run the Cartan-side basis conditions with a replacement Cartan
    list: integer ad-eigenvalues on every root vector, then coroot-span."""
    ordered = cb.system.positive_roots() + \
        [r for r in cb.roots() if not r.is_positive()]
    for h in matrices:
        for alpha in ordered:
            ev = cb.ad_eigenvalue(h, alpha)
            if not is_integer(ev):
                raise IntegralityViolation(
                    "eigenvalue %s on %s" % (ev, alpha), witness=Fraction(ev))
    dim = cb.p + cb.q
    cand = RatLattice([h.diagonal() for h in matrices], dim)
    if cand != coroot_lattice(cb):
        raise NotAChevalleyBasis("candidate Cartan misses the coroot lattice")
    return {"cartan-size": len(matrices), "status": "ok"}
