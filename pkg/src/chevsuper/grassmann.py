"""Finite-rank Grassmann algebras Lambda(th1, ..., thN) over an exact field.

Elements are kept as sparse dictionaries mapping a strictly increasing tuple
of generator indices to a nonzero field coefficient.  Multiplication sorts
concatenated index tuples and picks up the sign of the permutation, so
thi*thj = -thj*thi and thi*thi = 0 hold by construction.
"""

from fractions import Fraction

from .errors import GeneratorMismatch, NotHomogeneous, NotInvertible
from .scalars import QQ, FpElement


def _merge_sign(a, b):
    """Sign of sorting the concatenation a+b of two increasing tuples.

    Returns (sign, merged) or (0, None) when the tuples share an index.
    The sign is (-1)**inversions where an inversion is a pair x in a, y in b
    with x > y.
    """
    inv = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        if j < len(b) and b[j] == x:
            return 0, None
        inv += j
    merged = tuple(sorted(a + b))
    return (-1) ** (inv & 1), merged


class GrassmannAlgebra:
    """Grassmann algebra on generators th1..thN over a field."""

    __slots__ = ("n", "field")

    def __init__(self, n, field=QQ):
        if n < 0:
            raise ValueError("need a nonnegative number of generators")
        self.n = n
        self.field = field

    def __eq__(self, other):
        return (isinstance(other, GrassmannAlgebra)
                and other.n == self.n and other.field == self.field)

    def __hash__(self):
        return hash(("GrassmannAlgebra", self.n, self.field))

    def __repr__(self):
        return "GrassmannAlgebra(%d, %r)" % (self.n, self.field)

    def zero(self):
        return SuperScalar(self, {})

    def one(self):
        return self.scalar(1)

    def scalar(self, c):
        c = self.field(c)
        if not c:
            return SuperScalar(self, {})
        return SuperScalar(self, {(): c})

    def gen(self, i):
        """Generator th_i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError("generator index %d outside 1..%d" % (i, self.n))
        return SuperScalar(self, {(i,): self.field(1)})

    def from_terms(self, terms):
        out = {}
        for indices, c in terms:
            indices = tuple(indices)
            if list(indices) != sorted(set(indices)):
                raise ValueError("indices must be strictly increasing: %r" % (indices,))
            for i in indices:
                if not 1 <= i <= self.n:
                    raise ValueError("generator index %d outside 1..%d" % (i, self.n))
            c = self.field(c)
            if c:
                prev = out.get(indices)
                c = c if prev is None else prev + c
                if c:
                    out[indices] = c
                elif indices in out:
                    del out[indices]
        return SuperScalar(self, out)

    def parse(self, text):
        """Parse '1 + 2*th1*th2 - 1/2*th3' style expressions.

        Terms are separated by + or -; each term is an optional rational
        coefficient and/or a * product of generators 'th<k>'.
        """
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty expression")
        # split into signed terms
        terms = []
        sign = 1
        i = 0
        if s[0] in "+-":
            sign = -1 if s[0] == "-" else 1
            i = 1
        start = i
        while i <= len(s):
            if i == len(s) or s[i] in "+-":
                chunk = s[start:i]
                if not chunk:
                    raise ValueError("empty term in %r" % text)
                terms.append((sign, chunk))
                if i < len(s):
                    sign = -1 if s[i] == "-" else 1
                start = i + 1
            i += 1
        result = self.zero()
        for sign, chunk in terms:
            coeff = Fraction(sign)
            indices = []
            for factor in chunk.split("*"):
                if factor.startswith("th"):
                    try:
                        k = int(factor[2:])
                    except ValueError:
                        raise ValueError("bad generator %r in %r" % (factor, text))
                    indices.append(k)
                else:
                    try:
                        coeff *= Fraction(factor)
                    except (ValueError, ZeroDivisionError):
                        raise ValueError("bad coefficient %r in %r" % (factor, text))
            term = self.scalar(coeff)
            for k in indices:
                term = term * self.gen(k)
            result = result + term
        return result

    def from_json(self, data):
        terms = []
        for entry in data["terms"]:
            terms.append((tuple(entry["indices"]), Fraction(entry["coeff"])))
        return self.from_terms(terms)


class SuperScalar:
    """Element of a Grassmann algebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def _check(self, other):
        if other.alg != self.alg:
            raise GeneratorMismatch("operands from different Grassmann algebras")

    def _coerce(self, other):
        if isinstance(other, SuperScalar):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, FpElement)):
            return self.alg.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return SuperScalar(self.alg, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return SuperScalar(self.alg, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                sign, merged = _merge_sign(ka, kb)
                if sign == 0:
                    continue
                c = ca * cb
                if sign < 0:
                    c = -c
                s = out.get(merged)
                s = c if s is None else s + c
                if s:
                    out[merged] = s
                elif merged in out:
                    del out[merged]
        return SuperScalar(self.alg, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.alg, tuple(sorted(self.terms.items(),
                                            key=lambda kv: (len(kv[0]), kv[0])))))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def body(self):
        """Coefficient of the empty monomial, as a field scalar."""
        return self.terms.get((), self.alg.field.zero)

    def even_part(self):
        return SuperScalar(self.alg,
                           {k: c for k, c in self.terms.items() if len(k) % 2 == 0})

    def odd_part(self):
        return SuperScalar(self.alg,
                           {k: c for k, c in self.terms.items() if len(k) % 2 == 1})

    def is_even(self):
        return all(len(k) % 2 == 0 for k in self.terms)

    def is_odd(self):
        return all(len(k) % 2 == 1 for k in self.terms)

    def is_homogeneous(self):
        return self.is_even() or self.is_odd()

    def parity(self):
        if self.is_even():
            return 0
        if self.is_odd():
            return 1
        raise NotHomogeneous("element is not homogeneous")

    def max_degree(self):
        return max((len(k) for k in self.terms), default=0)

    def inv(self):
        """Inverse of an even element with invertible body.

        With b the body and a the whole element, u = 1 - a/b consists of
        terms of degree >= 2, so the geometric series 1 + u + u^2 + ...
        breaks off after n//2 steps.
        """
        if not self.is_even():
            raise NotInvertible("only even elements are inverted here")
        b = self.body()
        if not b:
            raise NotInvertible("body is zero")
        binv = 1 / b if isinstance(b, FpElement) else Fraction(1, 1) / b
        u = self.alg.one() - self * binv
        acc = self.alg.one()
        power = self.alg.one()
        for _ in range(self.alg.n // 2):
            power = power * u
            if power.is_zero():
                break
            acc = acc + power
        return acc * binv

    def pow_int(self, k):
        if k < 0:
            return self.inv().pow_int(-k)
        result = self.alg.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for indices, c in self.sorted_terms():
            mono = "*".join("th%d" % i for i in indices)
            if isinstance(c, FpElement):
                cs = "(%s)" % c
            else:
                cs = str(c)
            if not indices:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (cs, mono))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self):
        terms = []
        for indices, c in self.sorted_terms():
            cs = str(c.residue) if isinstance(c, FpElement) else str(c)
            terms.append({"indices": list(indices), "coeff": cs})
        return {"terms": terms}

    def __repr__(self):
        return "<SuperScalar %s>" % self.text()


def ss_add(a, b):
    return a + b


def ss_sub(a, b):
    return a - b


def ss_mul(a, b):
    return a * b


def ss_neg(a):
    return -a


def ss_inv(a):
    return a.inv()


def ss_body(a):
    return a.body()

def ss_eq(a, b):
    return a == b


def ss_pow_int(a, m):
    return a.pow_int(m)
