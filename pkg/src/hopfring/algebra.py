"""Construction of the Taft-type algebras on their PBW bases.

Four families are supported:

* ``taft``        -- generators g, x with g^n = 1, x^n = 0, xg = q gx
* ``taft_opp``    -- the same presentation with q replaced by q^(-1)
* ``tensor_taft`` -- generators a, b, c, d of the tensor product of the two
                     Taft algebras (all mixed relations are q-commutations)
* ``hpq``         -- the deformation with da = q ad + p(1 - bc)

Products of PBW monomials are computed by a terminating rewriting system
that moves generators into alphabetical order and reduces n-th powers;
the one fanning rule is d past a in the deformed family.  Both the
generator-level rewrites and the resulting basis-pair products are
memoized, which is what makes the larger orders feasible.  Construction
verifies associativity on all generator triples and on a seeded sample
of basis triples, which certifies confluence of the rule set.
"""

from __future__ import annotations

import random

from .cyclo import RAT, CycloNum, cyclo_field

__all__ = ["AlgebraSpec", "Algebra", "AlgElt", "build_algebra", "AlgebraError"]

FAMILIES = ("taft", "taft_opp", "tensor_taft", "hpq")

# letter tables: (names, cyclic flags, q-exponent of the swap scalar
# lam[t][s] defined by  letter_t letter_s = q^lam[t][s] letter_s letter_t)
_LETTERS = {
    "taft": (("g", "x"), (True, False)),
    "taft_opp": (("g", "x"), (True, False)),
    "tensor_taft": (("a", "b", "c", "d"), (False, True, True, False)),
    "hpq": (("a", "b", "c", "d"), (False, True, True, False)),
}


class AlgebraError(Exception):
    """Raised when construction self-checks fail (non-confluent rules, bad spec)."""


class AlgebraSpec:
    """Family, order and (for the deformed family) the parameter p."""

    __slots__ = ("family", "n", "p")

    def __init__(self, family, n, p=None):
        if family not in FAMILIES:
            raise AlgebraError("unknown family %r" % (family,))
        if n < 3:
            raise AlgebraError("order must be at least 3, got %r" % (n,))
        if family == "hpq":
            if p is None:
                raise AlgebraError("family hpq needs the parameter p")
        elif p is not None:
            raise AlgebraError("parameter p only applies to family hpq")
        self.family = family
        self.n = n
        self.p = p

    def key(self):
        p = self.p
        if isinstance(p, CycloNum):
            p = p.serialize()
        return (self.family, self.n, p)

    def __repr__(self):
        if self.family == "hpq":
            return "AlgebraSpec(hpq, n=%d, p=%s)" % (self.n, self.p)
        return "AlgebraSpec(%s, n=%d)" % (self.family, self.n)


class AlgElt:
    """A finitely supported linear combination of PBW basis monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms  # dict: exponent tuple -> nonzero CycloNum

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, AlgElt) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return AlgElt(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgElt(self.algebra, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        if c.is_zero():
            return AlgElt(self.algebra, {})
        return AlgElt(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        return self.algebra.mul(self, other)

    def coeff(self, mono):
        return self.terms.get(mono, self.algebra.field.zero)

    def support(self):
        return sorted(self.terms)

    def as_vector(self):
        H = self.algebra
        v = [H.field.zero] * H.dim
        for m, c in self.terms.items():
            v[H.index[m]] = c
        return v

    def serialize(self):
        if not self.terms:
            return "0"
        H = self.algebra
        parts = []
        for m in sorted(self.terms):
            word = "".join(
                "%s^%d" % (H.letters[t], e) if e > 1 else H.letters[t]
                for t, e in enumerate(m)
                if e
            )
            coeff = self.terms[m].serialize()
            if not word:
                parts.append("(%s)" % coeff)
            else:
                parts.append("(%s)*%s" % (coeff, word))
        return " + ".join(parts)

    def __repr__(self):
        return "<AlgElt %s>" % self.serialize()


class Algebra:
    """A finite-dimensional algebra on the PBW basis of one of the families."""

    def __init__(self, spec, field=None, assoc_sample=500, seed=0):
        self.spec = spec
        self.n = spec.n
        self.field = field if field is not None else cyclo_field(spec.n)
        self.letters, self.cyclic = _LETTERS[spec.family]
        self.num_letters = len(self.letters)
        n = self.n
        if spec.family == "taft":
            lam = {(1, 0): 1}
        elif spec.family == "taft_opp":
            lam = {(1, 0): n - 1}
        elif spec.family == "tensor_taft":
            lam = {(1, 0): 1, (2, 0): 0, (3, 0): 0, (2, 1): 0, (3, 1): 0, (3, 2): 1}
        else:
            lam = {(1, 0): 1, (2, 0): 1, (3, 0): 1, (2, 1): 0, (3, 1): 1, (3, 2): 1}
        self._lam = lam
        p = spec.p
        if p is not None and not isinstance(p, CycloNum):
            p = self.field.from_rat(RAT(p))
        self.p = p
        self._deformed = spec.family == "hpq" and p is not None and not p.is_zero()
        self.basis = self._enumerate_basis()
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._unit = (0,) * self.num_letters
        self._gen_memo = {}
        self._pair_memo = {}
        self._idempotents = None
        self._radical = None
        self._regular = None
        self.one = AlgElt(self, {self._unit: self.field.one})
        self.zero_elt = AlgElt(self, {})
        self._self_check(assoc_sample, seed)

    # -- basis -----------------------------------------------------------

    def _enumerate_basis(self):
        n, L = self.n, self.num_letters
        basis = []

        def rec(prefix):
            if len(prefix) == L:
                basis.append(tuple(prefix))
                return
            for e in range(n):
                rec(prefix + [e])

        rec([])
        return basis

    def monomial(self, expts, coeff=None):
        expts = tuple(expts)
        if expts not in self.index:
            raise AlgebraError("exponents %r outside the PBW range" % (expts,))
        return AlgElt(self, {expts: coeff if coeff is not None else self.field.one})

    def gen(self, name):
        t = self.letters.index(name)
        e = [0] * self.num_letters
        e[t] = 1
        return self.monomial(e)

    def element_from_terms(self, terms):
        out = {}
        for m, c in terms.items():
            if not c.is_zero():
                out[tuple(m)] = c
        return AlgElt(self, out)

    # -- rewriting product -------------------------------------------------

    def _lmul_gen(self, t, mono):
        """Left multiplication of a PBW monomial by the t-th generator."""
        key = (t, mono)
        cached = self._gen_memo.get(key)
        if cached is not None:
            return cached
        if self._deformed and t == 3 and mono[0] > 0:
            # d a = q a d + p(1 - bc), applied recursively
            m1 = (mono[0] - 1,) + mono[1:]
            out = {}
            q = self.field.q_pow(1)
            for m2, c2 in self._lmul_gen(3, m1).items():
                for m3, c3 in self._lmul_gen(0, m2).items():
                    c = q * c2 * c3
                    acc = out.get(m3)
                    s = c if acc is None else acc + c
                    if s.is_zero():
                        out.pop(m3, None)
                    else:
                        out[m3] = s
            acc = out.get(m1)
            s = self.p if acc is None else acc + self.p
            if s.is_zero():
                out.pop(m1, None)
            else:
                out[m1] = s
            for m2, c2 in self._lmul_gen(2, m1).items():
                for m3, c3 in self._lmul_gen(1, m2).items():
                    c = self.p * c2 * c3
                    acc = out.get(m3)
                    s = -c if acc is None else acc - c
                    if s.is_zero():
                        out.pop(m3, None)
                    else:
                        out[m3] = s
            self._gen_memo[key] = out
            return out
        lam = self._lam
        exp = 0
        for s in range(t):
            es = mono[s]
            if es:
                exp += es * lam[(t, s)]
        e = mono[t] + 1
        if self.cyclic[t]:
            e %= self.n
        elif e >= self.n:
            self._gen_memo[key] = {}
            return {}
        m2 = mono[:t] + (e,) + mono[t + 1 :]
        out = {m2: self.field.q_pow(exp)}
        self._gen_memo[key] = out
        return out

    def mono_mul(self, u, v):
        """Product of two PBW monomials as a dict of normal-form terms."""
        key = (u, v)
        cached = self._pair_memo.get(key)
        if cached is not None:
            return cached
        cur = {v: self.field.one}
        for t in range(self.num_letters - 1, -1, -1):
            for _ in range(u[t]):
                nxt = {}
                for m, c in cur.items():
                    for m2, c2 in self._lmul_gen(t, m).items():
                        prod = c * c2
                        acc = nxt.get(m2)
                        s = prod if acc is None else acc + prod
                        if s.is_zero():
                            nxt.pop(m2, None)
                        else:
                            nxt[m2] = s
                cur = nxt
                if not cur:
                    break
            if not cur:
                break
        self._pair_memo[key] = cur
        return cur

    def mul(self, x, y):
        out = {}
        for mu, cu in x.terms.items():
            for mv, cv in y.terms.items():
                c = cu * cv
                for m, cm in self.mono_mul(mu, mv).items():
                    prod = c * cm
                    acc = out.get(m)
                    s = prod if acc is None else acc + prod
                    if s.is_zero():
                        out.pop(m, None)
                    else:
                        out[m] = s
        return AlgElt(self, out)

    # -- counit-flavoured helpers -----------------------------------------

    def counit_mono(self, mono):
        """epsilon on a PBW monomial: kills nilpotent letters, 1 on grouplikes."""
        for t, e in enumerate(mono):
            if e and not self.cyclic[t]:
                return self.field.zero
        return self.field.one

    def conj_grade(self, mono):
        """q-exponents of conjugation by each cyclic generator (abcd families)."""
        if self.num_letters != 4:
            raise AlgebraError("conjugation grading applies to the abcd families")
        lam = self._lam
        n = self.n
        gb = (mono[0] * lam[(1, 0)] - mono[2] * lam[(2, 1)] - mono[3] * lam[(3, 1)]) % n
        gc = (mono[0] * lam[(2, 0)] + mono[1] * lam[(2, 1)] - mono[3] * lam[(3, 2)]) % n
        return (gb, gc)

    def weight_shift(self, name):
        """Weight shift of a module vector under a generator action."""
        lam = self._lam
        if name == "a":
            return (lam[(1, 0)] % self.n, lam[(2, 0)] % self.n)
        if name == "d":
            return (-lam[(3, 1)] % self.n, -lam[(3, 2)] % self.n)
        return (0, 0)

    # -- left/right multiplication matrices ---------------------------------

    def left_mult_matrix(self, name):
        from .linalg import Mat

        t = self.letters.index(name)
        z = self.field.zero
        data = [[z] * self.dim for _ in range(self.dim)]
        for j, mono in enumerate(self.basis):
            for m2, c in self._lmul_gen(t, mono).items():
                data[self.index[m2]][j] = c
        return Mat(self.field, self.dim, self.dim, data)

    def right_mult_matrix(self, name):
        from .linalg import Mat

        t = self.letters.index(name)
        e = [0] * self.num_letters
        e[t] = 1
        gen = tuple(e)
        z = self.field.zero
        data = [[z] * self.dim for _ in range(self.dim)]
        for j, mono in enumerate(self.basis):
            for m2, c in self.mono_mul(mono, gen).items():
                data[self.index[m2]][j] = c
        return Mat(self.field, self.dim, self.dim, data)

    # -- group idempotents ---------------------------------------------------

    def group_idempotents(self):
        """The n^2 orthogonal idempotents cut out by the grouplikes b, c."""
        if self.num_letters != 4:
            raise AlgebraError("group idempotents apply to the abcd families")
        if self._idempotents is not None:
            return self._idempotents
        n = self.n
        inv = RAT(1, n * n)
        out = {}
        for i in range(n):
            for j in range(n):
                terms = {}
                for k in range(n):
                    for l in range(n):
                        terms[(0, k, l, 0)] = self.field.q_pow(-(i * k + j * l)).scale(inv)
                out[(i, j)] = AlgElt(self, terms)
        self._idempotents = out
        return out

    # -- construction self-check ----------------------------------------------

    def _self_check(self, assoc_sample, seed):
        gens = []
        for t in range(self.num_letters):
            e = [0] * self.num_letters
            e[t] = 1
            gens.append(tuple(e))
        for u in gens:
            for v in gens:
                for w in gens:
                    self._assoc_check(u, v, w)
        rng = random.Random(seed)
        for _ in range(assoc_sample):
            u = self.basis[rng.randrange(self.dim)]
            v = self.basis[rng.randrange(self.dim)]
            w = self.basis[rng.randrange(self.dim)]
            self._assoc_check(u, v, w)
        # unit sanity on a sweep of basis elements
        for m in self.basis:
            if self.mono_mul(self._unit, m) != {m: self.field.one}:
                raise AlgebraError("1*u failed for %r" % (m,))
            if self.mono_mul(m, self._unit) != {m: self.field.one}:
                raise AlgebraError("u*1 failed for %r" % (m,))

    def _assoc_check(self, u, v, w):
        left = {}
        for m, c in self.mono_mul(u, v).items():
            for m2, c2 in self.mono_mul(m, w).items():
                prod = c * c2
                acc = left.get(m2)
                s = prod if acc is None else acc + prod
                if s.is_zero():
                    left.pop(m2, None)
                else:
                    left[m2] = s
        right = {}
        for m, c in self.mono_mul(v, w).items():
            for m2, c2 in self.mono_mul(u, m).items():
                prod = c * c2
                acc = right.get(m2)
                s = prod if acc is None else acc + prod
                if s.is_zero():
                    right.pop(m2, None)
                else:
                    right[m2] = s
        if left != right:
            raise AlgebraError(
                "non-associative rewrite on (%r, %r, %r); the rule set is not confluent"
                % (u, v, w)
            )

    # -- export ---------------------------------------------------------------

    def structure_constants_json(self):
        prods = []
        for u in self.basis:
            for v in self.basis:
                entry = self.mono_mul(u, v)
                if entry:
                    prods.append(
                        [
                            list(u),
                            list(v),
                            [[list(m), c.serialize()] for m, c in sorted(entry.items())],
                        ]
                    )
        return {
            "family": self.spec.family,
            "n": self.n,
            "p": self.p.serialize() if self.p is not None else None,
            "letters": list(self.letters),
            "basis": [list(m) for m in self.basis],
            "products": prods,
        }

    def __repr__(self):
        return "Algebra(%r, dim=%d)" % (self.spec, self.dim)


def defining_relations(H):
    """The family's defining relations as lists of (coefficient, word) summing to zero.

    Words are tuples of letter indices; the empty word is the unit.  The same
    data drives the matrix relation checks on modules, the well-definedness
    checks for the coproduct/counit, and the antipode anti-homomorphism check.
    """
    f = H.field
    q = f.q
    one = f.one
    n = H.n
    rels = []
    if H.num_letters == 2:
        g, x = 0, 1
        qq = q if H.spec.family == "taft" else q.inverse()
        rels.append(("xg-q*gx", [(one, (x, g)), (-qq, (g, x))]))
        rels.append(("g^n-1", [(one, (g,) * n), (-one, ())]))
        rels.append(("x^n", [(one, (x,) * n)]))
        return rels
    a, b, c, d = 0, 1, 2, 3
    if H.spec.family == "tensor_taft":
        rels += [
            ("ba-q*ab", [(one, (b, a)), (-q, (a, b))]),
            ("db-bd", [(one, (d, b)), (-one, (b, d))]),
            ("ca-ac", [(one, (c, a)), (-one, (a, c))]),
            ("dc-q*cd", [(one, (d, c)), (-q, (c, d))]),
            ("cb-bc", [(one, (c, b)), (-one, (b, c))]),
            ("da-ad", [(one, (d, a)), (-one, (a, d))]),
        ]
    else:
        p = H.p
        rels += [
            ("ba-q*ab", [(one, (b, a)), (-q, (a, b))]),
            ("db-q*bd", [(one, (d, b)), (-q, (b, d))]),
            ("ca-q*ac", [(one, (c, a)), (-q, (a, c))]),
            ("dc-q*cd", [(one, (d, c)), (-q, (c, d))]),
            ("bc-cb", [(one, (b, c)), (-one, (c, b))]),
            ("da-q*ad-p(1-bc)", [(one, (d, a)), (-q, (a, d)), (-p, ()), (p, (b, c))]),
        ]
    rels += [
        ("a^n", [(one, (a,) * n)]),
        ("b^n-1", [(one, (b,) * n), (-one, ())]),
        ("c^n-1", [(one, (c,) * n), (-one, ())]),
        ("d^n", [(one, (d,) * n)]),
    ]
    return rels


def eval_relation(terms, gens, one, mul, scale, add, reverse=False):
    """Evaluate sum of coeff*word under a generator assignment in any ring."""
    total = None
    for coeff, word in terms:
        if reverse:
            word = tuple(reversed(word))
        acc = one
        for t in word:
            acc = mul(acc, gens[t])
        acc = scale(acc, coeff)
        total = acc if total is None else add(total, acc)
    return total


_CACHE = {}


def build_algebra(spec, assoc_sample=500, seed=0):
    """Build (and cache) the algebra for a spec; fails loudly on bad rewrites."""
    if not isinstance(spec, AlgebraSpec):
        raise AlgebraError("build_algebra expects an AlgebraSpec")
    key = spec.key()
    alg = _CACHE.get(key)
    if alg is None:
        alg = Algebra(spec, assoc_sample=assoc_sample, seed=seed)
        _CACHE[key] = alg
    return alg
