"""Small exact linear-algebra kit: Gauss-Jordan inversion over a field,
rational row reduction, integer Hermite normal form and lattices in Q^d.

Everything here works on plain lists of Fractions / ints (or prime-field
elements for the inversion routine); matrices are small throughout the
package, so no effort is spent on asymptotics.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import DegenerateWeights, NotInvertible
from .scalars import scalar_inv


def xgcd(a, b):
    """Extended gcd: returns (g, x, y) with g = ax + by, g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mat_inv(rows, field):
    """Inverse of a square matrix over an exact field (Gauss-Jordan)."""
    n = len(rows)
    aug = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("matrix is not square")
        aug.append([field(x) for x in row]
                   + [field(1) if j == i else field(0) for j in range(n)])
    for col in range(n):
        piv = None
        for i in range(col, n):
            if aug[i][col]:
                piv = i
                break
        if piv is None:
            raise NotInvertible("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = scalar_inv(aug[col][col])
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def rational_rref(rows):
    """Reduced row echelon form over Q; returns the nonzero rows."""
    work = [[Fraction(x) for x in row] for row in rows]
    out = []
    ncols = len(work[0]) if work else 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
    for row in work[:r]:
        out.append(row)
    return out


def rational_rank(rows):
    return len(rational_rref(rows))


def hnf(rows):
    """Row Hermite normal form of an integer matrix.

    Returns the nonzero rows with positive pivots, entries above each pivot
    reduced into [0, pivot).  Pivot columns strictly increase, so the result
    is a canonical basis of the row lattice.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                if piv is None:
                    piv = i
                else:
                    g, x, y = xgcd(work[piv][c], work[i][c])
                    a, b = work[piv][c] // g, work[i][c] // g
                    new_p = [x * work[piv][k] + y * work[i][k] for k in range(ncols)]
                    new_i = [a * work[i][k] - b * work[piv][k] for k in range(ncols)]
                    work[piv], work[i] = new_p, new_i
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        if work[r][c] < 0:
            work[r] = [-v for v in work[r]]
        for i in range(r):
            q = work[i][c] // work[r][c]
            if q:
                work[i] = [work[i][k] - q * work[r][k] for k in range(ncols)]
        r += 1
    return [row for row in work[:r] if any(row)]


class RatLattice:
    """Finitely generated Z-lattice inside Q^dim, held in canonical form.

    Stored as an integer HNF basis together with one common denominator,
    with the fraction reduced, so two equal lattices compare equal.
    """

    __slots__ = ("dim", "den", "rows")

    def __init__(self, vectors, dim=None):
        vectors = [list(v) for v in vectors]
        if dim is None:
            if not vectors:
                raise ValueError("need dim for an empty generating set")
            dim = len(vectors[0])
        for v in vectors:
            if len(v) != dim:
                raise ValueError("generator length mismatch")
        self.dim = dim
        den = 1
        fracs = [[Fraction(x) for x in v] for v in vectors]
        for v in fracs:
            for x in v:
                den = lcm(den, x.denominator)
        ints = [[int(x * den) for x in v] for v in fracs]
        rows = hnf(ints)
        g = den
        for row in rows:
            for x in row:
                g = gcd(g, x)
        if rows and g > 1:
            den //= g
            rows = [[x // g for x in row] for row in rows]
        self.den = den
        self.rows = [tuple(r) for r in rows]

    @property
    def rank(self):
        return len(self.rows)

    def basis(self):
        """Basis vectors as rational tuples."""
        return [tuple(Fraction(x, self.den) for x in row) for row in self.rows]

    def contains(self, vector):
        vec = [Fraction(x) * self.den for x in vector]
        if any(x.denominator != 1 for x in vec):
            return False
        vec = [int(x) for x in vec]
        for row in self.rows:
            pc = next((k for k, x in enumerate(row) if x), None)
            if pc is None:
                continue
            if vec[pc] % row[pc] == 0:
                q = vec[pc] // row[pc]
                if q:
                    vec = [a - q * b for a, b in zip(vec, row)]
        return not any(vec)

    def contains_lattice(self, other):
        return all(self.contains(v) for v in other.basis())

    def __eq__(self, other):
        return (isinstance(other, RatLattice) and other.dim == self.dim
                and other.den == self.den and other.rows == self.rows)

    def __hash__(self):
        return hash((self.dim, self.den, tuple(self.rows)))

    def __repr__(self):
        return "RatLattice(den=%d, rows=%r)" % (self.den, self.rows)


def dual_stabilizer_lattice(weight_rows, dim):
    """The lattice {H in Q^dim : w . H is an integer for every weight w}.

    The weights must span Q^dim rationally; otherwise the set is not a
    lattice and DegenerateWeights is raised.  With B a basis of the weight
    row lattice, the answer is the integer span of the columns of B^-1.
    """
    lat = RatLattice(weight_rows, dim)
    if lat.rank < dim:
        raise DegenerateWeights(
            "weights span a rank-%d subspace of Q^%d" % (lat.rank, dim))
    basis = [list(row) for row in lat.basis()]
    binv = mat_inv(basis, Fraction)
    cols = [[binv[i][j] for i in range(dim)] for j in range(dim)]
    return RatLattice(cols, dim)
