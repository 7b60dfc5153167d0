"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are represented by their coordinates over the power basis
1, z, ..., z^(phi(n)-1) of Q[x]/(Phi_n(x)), where Phi_n is the n-th
cyclotomic polynomial.  Reduction modulo Phi_n is applied on every
operation, so equality is coefficient equality and the representation
is canonical.  No floating point is used anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction

try:  # gmpy2.mpq is a drop-in Fraction replacement, roughly 4x faster
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover
    RAT = Fraction

R0 = RAT(0)
R1 = RAT(1)

__all__ = ["RAT", "CycloField", "CycloNum", "cyclo_field", "q_factorial"]


def euler_phi(n):
    count = 0
    for k in range(1, n + 1):
        a, b = n, k
        while b:
            a, b = b, a % b
        if a == 1:
            count += 1
    return count


def _poly_divmod(num, den):
    """Exact division of rational polynomials (lists, low degree first)."""
    num = list(num)
    dden = len(den) - 1
    lead = den[dden]
    quot = [R0] * max(len(num) - dden, 0)
    for i in range(len(num) - 1, dden - 1, -1):
        c = num[i] / lead
        quot[i - dden] = c
        if c:
            for j in range(dden + 1):
                num[i - dden + j] -= c * den[j]
    while num and not num[-1]:
        num.pop()
    return quot, num


def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, computed by dividing x^n - 1 by all Phi_d, d|n, d<n."""
    if n == 1:
        return [RAT(-1), R1]
    num = [R0] * (n + 1)
    num[0], num[n] = RAT(-1), R1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            if rem:
                raise ArithmeticError("cyclotomic division not exact")
    return num


class CycloField:
    """The field Q(zeta_n) with distinguished primitive n-th root q = zeta_n."""

    def __init__(self, n):
        if n < 3:
            raise ValueError("field order must be at least 3, got %r" % (n,))
        self.n = n
        self.phi = euler_phi(n)
        self.modulus = cyclotomic_polynomial(n)
        # reduction of x^(phi+k) modulo Phi_n, for k = 0 .. phi-2
        red = []
        cur = [-c for c in self.modulus[: self.phi]]  # x^phi = -(lower part)
        red.append(tuple(cur))
        for _ in range(self.phi - 2):
            nxt = [R0] + cur[:-1]
            top = cur[-1]
            if top:
                first = red[0]
                nxt = [nxt[i] + top * first[i] for i in range(self.phi)]
            cur = nxt
            red.append(tuple(cur))
        self._red = red
        self.zero = CycloNum(self, (R0,) * self.phi)
        self.one = self.from_int(1)
        self.q = CycloNum(self, tuple(R1 if i == 1 else R0 for i in range(self.phi)))
        self._qpow = None

    def __repr__(self):
        return "CycloField(%d)" % self.n

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.n == self.n

    def __hash__(self):
        return hash(("CycloField", self.n))

    def from_int(self, k):
        c = [R0] * self.phi
        c[0] = RAT(k)
        return CycloNum(self, tuple(c))

    def from_rat(self, r):
        c = [R0] * self.phi
        c[0] = RAT(r)
        return CycloNum(self, tuple(c))

    def element(self, coeffs):
        coeffs = [RAT(c) for c in coeffs]
        if len(coeffs) > self.phi:
            raise ValueError("too many coefficients")
        coeffs += [R0] * (self.phi - len(coeffs))
        return CycloNum(self, tuple(coeffs))

    def q_pow(self, k):
        """q**k with k reduced modulo n (q has order n)."""
        if self._qpow is None:
            pows = [self.one]
            for _ in range(self.n - 1):
                pows.append(pows[-1] * self.q)
            self._qpow = pows
        return self._qpow[k % self.n]

    def random(self, rng, max_num=9, max_den=4):
        return CycloNum(
            self,
            tuple(
                RAT(rng.randint(-max_num, max_num), rng.randint(1, max_den))
                for _ in range(self.phi)
            ),
        )

    def parse(self, text):
        """Inverse of CycloNum.serialize (accepts any sum of rational z-power terms)."""
        coeffs = [R0] * self.phi
        s = text.strip()
        if not s:
            raise ValueError("empty cyclotomic literal")
        s = s.replace("-", "+-").replace("e+-", "e-")
        for term in s.split("+"):
            term = term.strip()
            if not term:
                continue
            m = re.fullmatch(r"(-?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(z(?:\^(\d+))?)?", term)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError("bad cyclotomic term %r in %r" % (term, text))
            sign = -1 if m.group(1) else 1
            coef = RAT(m.group(2)) if m.group(2) else R1
            if m.group(3) is None:
                k = 0
            elif m.group(4) is None:
                k = 1
            else:
                k = int(m.group(4))
            if k >= self.phi:
                raise ValueError("exponent %d out of range in %r" % (k, text))
            coeffs[k] += sign * coef
        return CycloNum(self, tuple(coeffs))


class CycloNum:
    """An element of Q(zeta_n); immutable, hashable, canonical."""

    __slots__ = ("field", "coeffs", "_is0", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._is0 = not any(coeffs)
        self._hash = hash(coeffs)

    def is_zero(self):
        return self._is0

    def is_one(self):
        c = self.coeffs
        return c[0] == 1 and not any(c[1:])

    def __bool__(self):
        return not self._is0

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.coeffs == other.coeffs and self.field.n == other.field.n
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        if other._is0:
            return self
        if self._is0:
            return other
        a, b = self.coeffs, other.coeffs
        return CycloNum(self.field, tuple(a[i] + b[i] for i in range(len(a))))

    def __sub__(self, other):
        if other._is0:
            return self
        a, b = self.coeffs, other.coeffs
        return CycloNum(self.field, tuple(a[i] - b[i] for i in range(len(a))))

    def __neg__(self):
        if self._is0:
            return self
        return CycloNum(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if self._is0:
            return self
        if isinstance(other, int):
            if other == 0:
                return self.field.zero
            return CycloNum(self.field, tuple(c * other for c in self.coeffs))
        if other._is0:
            return other
        a, b = self.coeffs, other.coeffs
        phi = len(a)
        if phi == 1:  # plain rationals
            return CycloNum(self.field, (a[0] * b[0],))
        prod = [R0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:phi]
        red = self.field._red
        for k in range(phi, 2 * phi - 1):
            pk = prod[k]
            if pk:
                row = red[k - phi]
                for i in range(phi):
                    ri = row[i]
                    if ri:
                        out[i] += pk * ri
        return CycloNum(self.field, tuple(out))

    __rmul__ = __mul__

    def scale(self, rational):
        if not rational or self._is0:
            return self.field.zero
        return CycloNum(self.field, tuple(c * rational for c in self.coeffs))

    def inverse(self):
        """Exact inverse via the extended Euclidean algorithm on Q[x]."""
        if self._is0:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.field.n)
        # invariants: s0*self + t0*Phi = r0, with polynomials over Q
        r0 = [c for c in self.coeffs]
        while r0 and not r0[-1]:
            r0.pop()
        r1 = list(self.field.modulus)
        s0, s1 = [R1], []
        while len(r1) > 1 or (r1 and r1[0]):
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            prod = [R0] * (len(quot) + len(s1) - 1) if s1 else []
            for i, qi in enumerate(quot):
                if qi:
                    for j, sj in enumerate(s1):
                        if sj:
                            prod[i + j] += qi * sj
            news = list(prod) if prod else []
            m = max(len(s0), len(news))
            s0, s1 = s1, [
                (s0[i] if i < len(s0) else R0) - (news[i] if i < len(news) else R0)
                for i in range(m)
            ]
        if len(r0) != 1:
            raise ArithmeticError("gcd with modulus not constant")
        c = r0[0]
        inv = [si / c for si in s0]
        phi = self.field.phi
        if len(inv) > phi:  # Bezout coefficient has degree < deg Phi_n
            raise ArithmeticError("inverse degree out of range")
        inv += [R0] * (phi - len(inv))
        return CycloNum(self.field, tuple(inv))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def serialize(self):
        """Canonical text form "c0 + c1*z + ...", zero terms omitted."""
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                zk = "z" if k == 1 else "z^%d" % k
                if c == 1:
                    terms.append(zk)
                elif c == -1:
                    terms.append("-" + zk)
                else:
                    terms.append("%s*%s" % (c, zk))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    __str__ = serialize

    def __repr__(self):
        return "<%s in Q(zeta_%d)>" % (self.serialize(), self.field.n)


def cyclo_field(n):
    """Field context for Q(zeta_n); rejects n < 3."""
    return CycloField(n)


def q_factorial(field, j):
    """(j)!_q = prod_{k=1..j} (1 + q + ... + q^(k-1)); (0)!_q = 1."""
    if not 0 <= j < field.n:
        raise ValueError("q-factorial index %r outside [0, %d)" % (j, field.n))
    out = field.one
    for k in range(1, j + 1):
        s = field.zero
        for m in range(k):
            s = s + field.q_pow(m)
        out = out * s
    return out
