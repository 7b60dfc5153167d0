"""Modules as exact matrix representations, and their decompositions.

A module carries one matrix per generator; defining relations are checked
on construction.  The grouplikes b, c act semisimply with root-of-unity
eigenvalues, so every module has a weight decomposition; modules built
from catalogued pieces keep track of a weight basis, which collapses the
Hom-space and multiplicity computations to small block systems.

Decomposition into simples and projectives is by Hom counting: with
t = top multiplicities, c = composition multiplicities and C the Cartan
matrix, the multiplicities a (simples) and b (projectives) solve
t = a + b and c = a + C^T b; integrality and nonnegativity of the
solution is the membership tripwire for the projective class subcategory.
"""

from __future__ import annotations

import random

from .algebra import AlgElt, defining_relations
from .cyclo import RAT
from .labels import Label
from .linalg import Mat, SpanBuilder, Subspace, kernel_basis, kronecker
from .structure import jacobson_radical, radical_ideal_generators

__all__ = [
    "Module",
    "ModuleError",
    "regular_representation",
    "simple_S",
    "projective_P",
    "tensor_module",
    "hom_dim",
    "weight_decomposition",
    "radical_filtration",
    "module_catalog",
    "decompose",
    "DecompVector",
    "conjugated_module",
    "pim_arrow_scalars",
]


class ModuleError(Exception):
    pass


def _sparse_rows(mat):
    return [
        {j: v for j, v in enumerate(row) if not v._is0} for row in mat.data
    ]


def _sparse_mul(a_rows, b_rows):
    out = []
    for arow in a_rows:
        acc = {}
        for k, av in arow.items():
            for j, bv in b_rows[k].items():
                cur = acc.get(j)
                prod = av * bv
                s = prod if cur is None else cur + prod
                if s._is0:
                    acc.pop(j, None)
                else:
                    acc[j] = s
        out.append(acc)
    return out


def check_module_relations(H, acts):
    """Names of defining relations violated by the action matrices.

    Products are evaluated on sparse row dictionaries; the action matrices
    of these algebras are permutation-like, so this is linear in the size
    of the module rather than cubic.
    """
    failures = []
    dim = acts[0].rows
    sparse = [_sparse_rows(m) for m in acts]
    eye = [{i: H.field.one} for i in range(dim)]
    for name, terms in defining_relations(H):
        total = {}
        for coeff, word in terms:
            if coeff._is0:
                continue
            m = eye
            for t in reversed(word):
                m = _sparse_mul(sparse[t], m)
            for i, row in enumerate(m):
                for j, v in row.items():
                    key = (i, j)
                    acc = total.get(key)
                    s = coeff * v if acc is None else acc + coeff * v
                    if s._is0:
                        total.pop(key, None)
                    else:
                        total[key] = s
        if total:
            failures.append(name)
    return failures


class Module:
    """An exact matrix representation of one of the abcd algebras."""

    def __init__(self, H, acts, label=None, weights=None, check=True):
        self.algebra = H
        self.acts = acts  # dict generator name -> Mat
        self.dim = acts["a"].rows if acts else 0
        self.label = label
        self.weights = weights  # per-basis-vector (i, j) when the basis is a weight basis
        self._weightized = None
        self._mono_act = {}
        self._gen_pows = None
        if check and self.dim:
            mats = [acts[name] for name in H.letters]
            bad = check_module_relations(H, mats)
            if bad:
                raise ModuleError(
                    "module %r violates relations: %s" % (label, ", ".join(bad))
                )
            if weights is not None:
                self._verify_weights()

    def _verify_weights(self):
        H = self.algebra
        f = H.field
        for name in ("b", "c"):
            mat = self.acts[name]
            pos = 0 if name == "b" else 1
            for i in range(self.dim):
                row = mat.data[i]
                for j, v in enumerate(row):
                    if v._is0:
                        continue
                    if i != j or v != f.q_pow(self.weights[j][pos]):
                        raise ModuleError(
                            "declared weights are not a weight basis for %r"
                            % (self.label,)
                        )
                if mat.data[i][i]._is0:
                    raise ModuleError(
                        "declared weights are not a weight basis for %r"
                        % (self.label,)
                    )

    def act_elt(self, elt):
        """Matrix of an algebra element (cached per PBW monomial)."""
        H = self.algebra
        out = Mat.zeros(H.field, self.dim, self.dim)
        for mono, c in elt.terms.items():
            m = self._mono_matrix(mono)
            out = out + m.scale(c)
        return out

    def _mono_matrix(self, mono):
        cached = self._mono_act.get(mono)
        if cached is not None:
            return cached
        H = self.algebra
        if self._gen_pows is None:
            pows = []
            for name in H.letters:
                lst = [Mat.identity(H.field, self.dim)]
                for _ in range(H.n - 1):
                    lst.append(self.acts[name] * lst[-1])
                pows.append(lst)
            self._gen_pows = pows
        out = None
        for t in range(len(H.letters)):
            e = mono[t]
            if e:
                p = self._gen_pows[t][e]
                out = p if out is None else out * p
        if out is None:
            out = Mat.identity(H.field, self.dim)
        self._mono_act[mono] = out
        return out

    def weight_of_vector(self, vec):
        """The (i, j) weight of a joint eigenvector of b and c."""
        H = self.algebra
        f = H.field
        lead = next(i for i, c in enumerate(vec) if not c.is_zero())
        out = []
        for name in ("b", "c"):
            img = self.acts[name].apply(vec)
            ratio = img[lead] * vec[lead].inverse()
            for k in range(H.n):
                if f.q_pow(k) == ratio:
                    out.append(k)
                    break
            else:
                raise ModuleError("vector is not a root-of-unity eigenvector")
        i, j = out
        expect = [c * f.q_pow(i) for c in vec]
        if self.acts["b"].apply(vec) != expect:
            raise ModuleError("vector is not a b-eigenvector")
        return (i, j)

    def to_json(self):
        return {
            "label": str(self.label) if self.label is not None else None,
            "dim": self.dim,
            "weights": list(self.weights) if self.weights is not None else None,
            "actions": {name: m.to_json() for name, m in self.acts.items()},
        }

    def __repr__(self):
        return "Module(%s, dim=%d)" % (self.label, self.dim)


def regular_representation(H):
    """Left multiplication on the PBW basis; relations are re-checked."""
    if H._regular is None:
        acts = {name: H.left_mult_matrix(name) for name in H.letters}
        H._regular = Module(H, acts, label="regular")
    return H._regular


def simple_S(i, j, H):
    """The one-dimensional module with b, c eigenvalues q^i, q^j and a = d = 0."""
    if H.spec.family == "hpq" and not H.p.is_zero():
        raise ModuleError("simple_S applies to the undeformed families")
    f = H.field
    n = H.n
    acts = {
        "a": Mat.zeros(f, 1, 1),
        "d": Mat.zeros(f, 1, 1),
        "b": Mat.from_rows(f, [[f.q_pow(i)]]),
        "c": Mat.from_rows(f, [[f.q_pow(j)]]),
    }
    return Module(H, acts, label=Label("S", i % n, j % n), weights=[(i % n, j % n)])


def module_from_vectors(H, vectors, label=None):
    """Submodule of the regular module on the given independent AlgElt basis.

    Each basis vector must be a weight vector; action matrices are taken in
    that basis, so the result carries weight data.
    """
    span = SpanBuilder(H.field, H.dim)
    for v in vectors:
        if not span.insert(v.as_vector()):
            raise ModuleError("generating vectors are dependent")
    sub = span.to_subspace()
    weights = []
    for v in vectors:
        vec = v.as_vector()
        bimg = (H.gen("b") * v).as_vector()
        cimg = (H.gen("c") * v).as_vector()
        f = H.field
        found = None
        for i in range(H.n):
            if bimg == [c * f.q_pow(i) for c in vec]:
                for j in range(H.n):
                    if cimg == [c * f.q_pow(j) for c in vec]:
                        found = (i, j)
                        break
                break
        if found is None:
            raise ModuleError("basis vector is not a weight vector")
        weights.append(found)
    # coordinates of g*v_k in the chosen basis, through the echelon coordinates
    m = len(vectors)
    cob_cols = [sub.coords(v.as_vector()) for v in vectors]
    cob = Mat(H.field, m, m, [[cob_cols[j][i] for j in range(m)] for i in range(m)])
    from .linalg import invert

    cobinv = invert(cob)
    acts = {}
    for name in H.letters:
        g = H.gen(name)
        cols = []
        for v in vectors:
            img = g * v
            cols.append(cobinv.apply(sub.coords(img.as_vector())))
        acts[name] = Mat(H.field, m, m, [[cols[j][i] for j in range(m)] for i in range(m)])
    return Module(H, acts, label=label, weights=weights)


def projective_P(i, j, H):
    """The projective indecomposable H e(i,j) on the basis a^k d^l e(i,j)."""
    if H.spec.family == "hpq" and not H.p.is_zero():
        raise ModuleError("projective_P applies to the undeformed families")
    n = H.n
    es = H.group_idempotents()
    e = es[(i % n, j % n)]
    vectors = []
    for k in range(n):
        for l in range(n):
            vectors.append(H.monomial((k, 0, 0, l)) * e)
    mod = module_from_vectors(H, vectors, label=Label("P", i % n, j % n))
    if mod.dim != n * n:
        raise ModuleError("projective module has wrong dimension")
    return mod


def pim_arrow_scalars(i, j, H):
    """The scalars decorating the PIM diagram arrows on the a^k d^l e basis.

    Returns two (k, l) -> scalar maps: one for the solid arrows (action of a),
    one for the dashed arrows (action of d).
    """
    n = H.n
    es = H.group_idempotents()
    e = es[(i % n, j % n)]
    basis = {}
    for k in range(n):
        for l in range(n):
            basis[(k, l)] = H.monomial((k, 0, 0, l)) * e
    solid = {}
    dashed = {}
    a, d = H.gen("a"), H.gen("d")
    for (k, l), v in basis.items():
        img = a * v
        if k + 1 < n:
            target = basis[(k + 1, l)]
            solid[(k, l)] = _scalar_ratio(img, target)
        img = d * v
        if l + 1 < n:
            target = basis[(k, l + 1)]
            dashed[(k, l)] = _scalar_ratio(img, target)
    return solid, dashed


def _scalar_ratio(x, y):
    """The scalar making x = scalar * y (None if not proportional)."""
    if x.is_zero():
        return x.algebra.field.zero
    mono = next(iter(y.terms))
    num = x.terms.get(mono)
    if num is None:
        return None
    ratio = num * y.terms[mono].inverse()
    if x == y.scale(ratio):
        return ratio
    return None


def tensor_module(M, N, check=True):
    """Tensor product along the coproduct; relations are re-verified."""
    H = M.algebra
    if N.algebra is not H:
        raise ModuleError("tensor factors live over different algebras")
    f = H.field
    eyeM = Mat.identity(f, M.dim)
    eyeN = Mat.identity(f, N.dim)
    acts = {
        "a": kronecker(M.acts["a"], N.acts["b"]) + kronecker(eyeM, N.acts["a"]),
        "b": kronecker(M.acts["b"], N.acts["b"]),
        "c": kronecker(M.acts["c"], N.acts["c"]),
        "d": kronecker(M.acts["d"], N.acts["c"]) + kronecker(eyeM, N.acts["d"]),
    }
    weights = None
    if M.weights is not None and N.weights is not None:
        n = H.n
        weights = [
            ((wm[0] + wn[0]) % n, (wm[1] + wn[1]) % n)
            for wm in M.weights
            for wn in N.weights
        ]
    label = None
    if M.label is not None and N.label is not None:
        label = "%s(x)%s" % (M.label, N.label)
    return Module(H, acts, label=label, weights=weights, check=check)


def weight_decomposition(M):
    """Joint eigenspaces of b and c; their dimensions must fill the module."""
    H = M.algebra
    f = H.field
    n = H.n
    out = {}
    total = 0
    B, C = M.acts["b"], M.acts["c"]
    eye = Mat.identity(f, M.dim)
    for i in range(n):
        kb = kernel_basis(B - eye.scale(f.q_pow(i)))
        if kb.dim == 0:
            continue
        from .linalg import restrict_operator

        cr = restrict_operator(C, kb)
        for j in range(n):
            kc = kernel_basis(cr - Mat.identity(f, kb.dim).scale(f.q_pow(j)))
            if kc.dim == 0:
                continue
            vecs = []
            for row in kc.rows:
                v = [f.zero] * M.dim
                for coeff, brow in zip(row, kb.rows):
                    if not coeff.is_zero():
                        for t, bv in enumerate(brow):
                            if not bv.is_zero():
                                v[t] = v[t] + coeff * bv
                vecs.append(v)
            sub = Subspace.from_vectors(f, M.dim, vecs)
            out[(i, j)] = sub
            total += sub.dim
    if total != M.dim:
        raise ModuleError(
            "weight spaces span %d of %d dimensions; b or c is not semisimple"
            % (total, M.dim)
        )
    return out


def weightized(M):
    """A weight-basis copy of M plus the change of basis (P, Pinv)."""
    if M.weights is not None:
        return M, None
    if M._weightized is not None:
        return M._weightized
    H = M.algebra
    f = H.field
    wd = weight_decomposition(M)
    cols = []
    weights = []
    for w in sorted(wd):
        for row in wd[w].rows:
            cols.append(list(row))
            weights.append(w)
    p = Mat(f, M.dim, M.dim, [[cols[j][i] for j in range(M.dim)] for i in range(M.dim)])
    from .linalg import invert

    pinv = invert(p)
    acts = {name: pinv * M.acts[name] * p for name in M.acts}
    out = Module(H, acts, label=M.label, weights=weights, check=False)
    M._weightized = (out, (p, pinv))
    return M._weightized


class HomSpace:
    def __init__(self, dim, builder):
        self.dim = dim
        self._builder = builder

    def intertwiners(self):
        return self._builder()


def hom_dim(M, N):
    """Dimension (with a basis on demand) of the intertwiner space M -> N."""
    H = M.algebra
    f = H.field
    Mw, trM = weightized(M)
    Nw, trN = weightized(N)
    if M.dim == 0 or N.dim == 0:
        return HomSpace(0, lambda: [])
    idxM = {}
    for t, w in enumerate(Mw.weights):
        idxM.setdefault(w, []).append(t)
    idxN = {}
    for t, w in enumerate(Nw.weights):
        idxN.setdefault(w, []).append(t)
    blocks = []  # (weight, rowsN, colsM, offset)
    offset = 0
    for w in sorted(idxM):
        if w in idxN:
            rows, cols = idxN[w], idxM[w]
            blocks.append((w, rows, cols, offset))
            offset += len(rows) * len(cols)
    unknowns = offset
    if unknowns == 0:
        return HomSpace(0, lambda: [])
    block_of = {b[0]: b for b in blocks}
    eqs = []
    n = H.n
    for name in ("a", "d"):
        sh = H.weight_shift(name)
        AM = Mw.acts[name]
        AN = Nw.acts[name]
        for w in sorted(idxM):
            colsM = idxM[w]
            wt = ((w[0] + sh[0]) % n, (w[1] + sh[1]) % n)
            tgtN = idxN.get(wt, [])
            if not tgtN:
                continue
            src_block = block_of.get(w)
            tgt_block = block_of.get(wt)
            # equations indexed by (p in tgtN, q in colsM):
            #   sum_r f_wt[p, r] AM[r, q] - sum_s AN[p, s] f_w[s, q] = 0
            for pi, p in enumerate(tgtN):
                for qi, q in enumerate(colsM):
                    row = [f.zero] * unknowns
                    nonzero = False
                    if tgt_block is not None:
                        _, trows, tcols, toff = tgt_block
                        for ri, r in enumerate(tcols):
                            cme = AM.data[r][q]
                            if not cme.is_zero():
                                row[toff + pi * len(tcols) + ri] = cme
                                nonzero = True
                    if src_block is not None:
                        _, rowsN, scols, soff = src_block
                        for si, s in enumerate(rowsN):
                            cne = AN.data[p][s]
                            if not cne.is_zero():
                                pos = soff + si * len(scols) + qi
                                row[pos] = row[pos] - cne
                                nonzero = True
                    if nonzero:
                        eqs.append(row)
    if eqs:
        mat = Mat(f, len(eqs), unknowns, eqs)
        ker = kernel_basis(mat)
    else:
        ker = Subspace.full(f, unknowns)

    def builder():
        mats = []
        for kv in ker.rows:
            fw = Mat.zeros(f, Nw.dim, Mw.dim)
            for w, rowsN, colsM, off in blocks:
                for pi, p in enumerate(rowsN):
                    for qi, q in enumerate(colsM):
                        fw.data[p][q] = kv[off + pi * len(colsM) + qi]
            out = fw
            if trN is not None:
                out = trN[0] * out  # P_N f
            if trM is not None:
                out = out * trM[1]  # f P_M^(-1)
            mats.append(out)
        return mats

    return HomSpace(ker.dim, builder)


def _weight_dims(M):
    Mw, _ = weightized(M)
    out = {}
    for w in Mw.weights:
        out[w] = out.get(w, 0) + 1
    return out


def submodule_restriction(M, sub):
    """M restricted to an invariant subspace, as a module on its echelon basis."""
    from .linalg import restrict_operator

    acts = {name: restrict_operator(M.acts[name], sub) for name in M.acts}
    return Module(M.algebra, acts, label=None, weights=None, check=False)


def radical_submodule(M, sub=None):
    """J * X inside M (X given as a Subspace, default the whole module)."""
    H = M.algebra
    gens = radical_ideal_generators(H)
    sb = SpanBuilder(H.field, M.dim)
    base_rows = sub.rows if sub is not None else Mat.identity(H.field, M.dim).data
    if gens is not None:
        mats = [M.act_elt(g) for g in gens]
    else:
        J = jacobson_radical(H)
        mats = []
        for row in J.rows:
            terms = {}
            for idx, c in enumerate(row):
                if not c.is_zero():
                    terms[H.basis[idx]] = c
            mats.append(M.act_elt(AlgElt(H, terms)))
    for mat in mats:
        for row in base_rows:
            sb.insert(mat.apply(list(row)))
    return sb.to_subspace()


def radical_filtration(M, labels_and_simples):
    """Semisimple layers of M with multiplicities against the given simples.

    ``labels_and_simples`` is a list of (label, simple module) pairs; the
    returned value is a list of {label: multiplicity} dicts, one per layer.
    """
    H = M.algebra
    layers = []
    current = Subspace.full(H.field, M.dim) if M.dim else Subspace.zero(H.field, 0)
    while current.dim:
        nxt = radical_submodule(M, current)
        restricted = submodule_restriction(M, current)
        layer = {}
        for label, s in labels_and_simples:
            mult = hom_dim(restricted, s).dim
            if mult:
                layer[label] = mult
        expected = sum(
            layer.get(label, 0) * s.dim for label, s in labels_and_simples
        )
        if expected != current.dim - nxt.dim:
            raise ModuleError(
                "layer of dim %d decomposed into %d; missing simples"
                % (current.dim - nxt.dim, expected)
            )
        layers.append(layer)
        current = nxt
        if len(layers) > M.dim + 1:
            raise ModuleError("radical filtration does not terminate")
    return layers


def spin_module(H, seeds, label=None):
    """Cyclic closure of weight vectors of the regular module, as a Module.

    Spinning is done weight space by weight space, so the resulting basis
    is a weight basis for free.
    """
    builders = {}
    frontier = []
    for v in seeds:
        w = _left_weight(H, v)
        sb = builders.setdefault(w, SpanBuilder(H.field, H.dim))
        if sb.insert(v.as_vector()):
            frontier.append((w, v.as_vector()))
    gens = [(name, H.gen(name), H.weight_shift(name)) for name in H.letters]
    n = H.n
    while frontier:
        nxt = []
        for w, vec in frontier:
            elt = _vector_to_elt(H, vec)
            for name, g, sh in gens:
                img = g * elt
                if img.is_zero():
                    continue
                w2 = ((w[0] + sh[0]) % n, (w[1] + sh[1]) % n)
                sb = builders.setdefault(w2, SpanBuilder(H.field, H.dim))
                if sb.insert(img.as_vector()):
                    nxt.append((w2, img.as_vector()))
        frontier = nxt
    vectors = []
    for w in sorted(builders):
        for row in builders[w].rows:
            vectors.append(_vector_to_elt(H, row))
    return module_from_vectors(H, vectors, label=label)


def _vector_to_elt(H, vec):
    terms = {}
    for idx, c in enumerate(vec):
        if not c.is_zero():
            terms[H.basis[idx]] = c
    return AlgElt(H, terms)


def _left_weight(H, v):
    """Weight of a left-multiplication eigenvector of the regular module."""
    f = H.field
    mono = next(iter(v.terms))
    out = []
    for name in ("b", "c"):
        img = H.gen(name) * v
        num = img.terms.get(mono)
        if num is None:
            raise ModuleError("vector is not a weight vector")
        ratio = num * v.terms[mono].inverse()
        for k in range(H.n):
            if f.q_pow(k) == ratio:
                out.append(k)
                break
        else:
            raise ModuleError("eigenvalue is not a power of q")
        if img != v.scale(ratio):
            raise ModuleError("vector is not a weight vector")
    return tuple(out)


def _is_simple(M):
    """Semisimple (J kills it) and indecomposable (End is one-dimensional)."""
    if M.dim == 0:
        return False
    if radical_submodule(M).dim:
        return False
    return hom_dim(M, M).dim == 1


class ModuleCatalog:
    """All simples and projective indecomposables of one algebra, labeled."""

    def __init__(self, H, labels, simples, pims, cartan):
        self.algebra = H
        self.labels = labels  # simple labels in canonical order
        self.simples = simples  # label -> Module
        self.pims = pims  # simple label -> its projective cover Module
        self.cartan = cartan  # (top label T, simple label S) -> [P(T):S]
        self._cmi_inv = None
        self._char_matrix = None
        self._char_inverse = None

    def proj_label(self, top_label):
        if top_label.kind == "S":
            return Label("P", top_label.a, top_label.b)
        if top_label.kind == "V" and top_label.a == self.algebra.n:
            return top_label
        return Label("Pr", top_label.a, top_label.b)

    def cartan_matrix(self):
        labs = self.labels
        return [[self.cartan.get((t, s), 0) for s in labs] for t in labs]

    def self_projective(self, lab):
        """True when the simple is its own projective cover (classes coincide)."""
        return self.pims[lab].dim == self.simples[lab].dim

    def _solve_mults(self, cvec, tvec):
        """Solve c = a + C^T b and t = a + b for nonnegative integers.

        Copies of self-projective simples are counted once, on the simple
        side, so the b-unknowns range over the covers with l strictly below
        the top dimension; on that column set C^T - I has trivial kernel
        (verified when the catalog is built).
        """
        labs = self.labels
        k = len(labs)
        if self._cmi_inv is None:
            cm = self.cartan_matrix()
            free = [j for j, lab in enumerate(labs) if not self.self_projective(lab)]
            m = [
                [RAT(cm[j][i]) - (RAT(1) if i == j else RAT(0)) for j in free]
                for i in range(k)
            ]
            try:
                _rat_solve_unique(m, [RAT(0)] * k)
            except ValueError:
                raise ModuleError("Cartan system is degenerate on the cover columns")
            self._cmi_inv = (m, free)
        m, free = self._cmi_inv
        rhs = [RAT(cvec[i] - tvec[i]) for i in range(k)]
        b_free = _rat_solve_unique(m, rhs)
        if b_free is None:
            return None
        out_b = [0] * k
        for pos, x in zip(free, b_free):
            if x.denominator != 1 or x < 0:
                return None
            out_b[pos] = int(x)
        out_a = [tvec[i] - out_b[i] for i in range(k)]
        if any(x < 0 for x in out_a):
            return None
        return out_a, out_b

    def char_matrix(self):
        """Weight characters of the simples; invertible for the tested orders."""
        if self._char_matrix is None:
            n = self.algebra.n
            wkeys = [(i, j) for i in range(n) for j in range(n)]
            rows = []
            for lab in self.labels:
                wd = _weight_dims(self.simples[lab])
                rows.append([wd.get(w, 0) for w in wkeys])
            self._char_matrix = (wkeys, rows)
        return self._char_matrix

    def char_inverse(self):
        if self._char_inverse is None:
            _, rows = self.char_matrix()
            k = len(rows)
            m = [[RAT(rows[i][j]) for i in range(k)] for j in range(k)]  # transpose
            try:
                self._char_inverse = _rat_invert(m)
            except ValueError:
                self._char_inverse = "singular"
        return self._char_inverse

    def composition_vector(self, M, via_hom=False):
        """[M : S] for every simple S, in label order."""
        labs = self.labels
        H = self.algebra
        basic = H.spec.family == "tensor_taft" or H.p.is_zero()
        if basic and not via_hom:
            wd = _weight_dims(M)
            return [wd.get((lab.a, lab.b), 0) for lab in labs]
        inv = None if via_hom else self.char_inverse()
        if inv is not None and inv != "singular" and not via_hom:
            wkeys, _ = self.char_matrix()
            wd = _weight_dims(M)
            vec = [RAT(wd.get(w, 0)) for w in wkeys]
            out = []
            for i in range(len(labs)):
                x = sum(inv[i][j] * vec[j] for j in range(len(vec)))
                if x.denominator != 1 or x < 0:
                    raise ModuleError("character system has no integral solution")
                out.append(int(x))
            return out
        return [hom_dim(self.pims[lab], M).dim for lab in labs]

    def top_vector(self, M):
        return [hom_dim(M, self.simples[lab]).dim for lab in self.labels]


def _rat_invert(m):
    """Exact inverse of a square rational matrix (list of lists of RAT)."""
    k = len(m)
    aug = [list(row) + [RAT(1) if i == j else RAT(0) for j in range(k)] for i, row in enumerate(m)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("rational matrix not invertible")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def _rat_solve_unique(m, rhs):
    """The unique rational solution of an overdetermined system (None if none).

    Requires the columns to be independent; raises ValueError otherwise.
    """
    rows = len(m)
    cols = len(m[0]) if m else 0
    aug = [list(m[i]) + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("solver expects independent columns")
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    return [aug[i][cols] for i in range(len(pivots))]


def _basic_catalog(H):
    n = H.n
    labels = [Label("S", i, j) for i in range(n) for j in range(n)]
    simples = {lab: simple_S(lab.a, lab.b, H) for lab in labels}
    pims = {lab: projective_P(lab.a, lab.b, H) for lab in labels}
    cartan = {}
    for t in labels:
        wd = _weight_dims(pims[t])
        for s in labels:
            m = wd.get((s.a, s.b), 0)
            if m:
                cartan[(t, s)] = m
    return ModuleCatalog(H, labels, simples, pims, cartan)


def _h1_discover_simples(H):
    """Spin weight vectors killed by a until the semisimple budget is filled."""
    n = H.n
    J = jacobson_radical(H)
    budget = 0
    target = H.dim - J.dim
    es = H.group_idempotents()
    simples = []
    a_pow = H.monomial(((n - 1), 0, 0, 0))
    seeds = [
        (s, t, k) for s in range(n) for t in range(n) for k in range(n)
    ]
    for s, t, k in seeds:
        if budget >= target:
            break
        v = (a_pow * es[(s, t)]) * H.monomial((0, 0, 0, k))
        if v.is_zero():
            continue
        if not (H.gen("a") * v).is_zero():
            raise ModuleError("seed vector not killed by a")
        M = spin_module(H, [v])
        if not _is_simple(M):
            continue
        if any(M.dim == S.dim and hom_dim(M, S).dim for S in simples):
            continue
        simples.append(M)
        budget += M.dim * M.dim
    if budget != target:
        raise ModuleError(
            "simple search found %d of %d semisimple dimensions" % (budget, target)
        )
    return simples


def _h1_discover_pims(H, simples, seed):
    """Split each H e(i,j) into indecomposable summands with simple tops.

    The splitting is a deterministic Fitting decomposition: a primitive
    idempotent of the endomorphism ring modulo its radical is constructed
    from Hom spaces against the simple at the top, lifted to an honest
    idempotent endomorphism by the cubic correction iteration, and the
    module splits along its image.  A direct randomized search for cyclic
    generators fails here because generic top preimages are contaminated
    by the radicals of the complementary summands.
    """
    n = H.n
    es = H.group_idempotents()
    covers = {}  # simple index -> cover Module
    for (i, j), e in sorted(es.items()):
        E = spin_module(H, [e])
        if E.dim != n * n:
            raise ModuleError("H e(i,j) has wrong dimension %d" % E.dim)
        pieces = _split_summands(E, simples)
        total = 0
        for piece in pieces:
            tops = [(k, hom_dim(piece, S).dim) for k, S in enumerate(simples)]
            tops = [(k, m) for k, m in tops if m]
            if len(tops) != 1 or tops[0][1] != 1:
                raise ModuleError("summand of H e(%d,%d) has non-simple top" % (i, j))
            idx = tops[0][0]
            total += piece.dim
            if idx not in covers:
                covers[idx] = piece
            elif covers[idx].dim != piece.dim:
                raise ModuleError("inconsistent projective cover dimensions")
        if total != E.dim:
            raise ModuleError("summands of H e(%d,%d) do not fill it" % (i, j))
    if len(covers) != len(simples):
        raise ModuleError("projective covers missing for some simples")
    return covers


def _restrict_to_image(E, mat):
    """E restricted to the image of an idempotent endomorphism."""
    from .linalg import image as column_space, restrict_operator

    sub = column_space(mat)
    acts = {name: restrict_operator(E.acts[name], sub) for name in E.acts}
    return Module(E.algebra, acts, check=False)


def _split_summands(E, simples):
    """Recursive direct-sum decomposition into pieces with simple tops."""
    H = E.algebra
    f = H.field
    tops = [(k, hom_dim(E, S).dim) for k, S in enumerate(simples)]
    tops = [(k, m) for k, m in tops if m]
    total_mult = sum(m for _, m in tops)
    if total_mult <= 1:
        return [E]
    V = simples[tops[0][0]]
    je = radical_submodule(E)
    from .linalg import quotient_operator

    top_acts = {name: quotient_operator(E.acts[name], je) for name in E.acts}
    top_mod = Module(H, top_acts, check=False)
    comp = je.complement_indices()
    # h: E -> V descending to the top, paired against f: V -> top
    g_E = hom_dim(E, V).intertwiners()
    g_top = []
    for g in g_E:
        g_top.append(
            Mat(f, V.dim, len(comp), [[g.data[r][c] for c in comp] for r in range(V.dim)])
        )
    f_top = hom_dim(V, top_mod).intertwiners()
    m = len(f_top)
    if len(g_top) != m or m == 0:
        raise ModuleError("top Hom spaces are unbalanced")
    pairing = []
    for g in g_top:
        row = []
        for ft in f_top:
            comp_mat = g * ft
            lam = comp_mat.data[0][0]
            if comp_mat != Mat.identity(f, V.dim).scale(lam):
                raise ModuleError("composite endomorphism of a simple is not scalar")
            row.append(lam)
        pairing.append(row)
    pm = Mat(f, m, m, pairing)
    from .linalg import invert

    pm_inv = invert(pm)
    # h_1 := sum_j inv[0][j] g_top[j] satisfies h_1 f_k = delta(1, k)
    h1 = None
    for jdx in range(m):
        c = pm_inv.data[0][jdx]
        if c.is_zero():
            continue
        term = g_top[jdx].scale(c)
        h1 = term if h1 is None else h1 + term
    e_top = f_top[0] * h1  # primitive idempotent of End(top)
    # solve for an endomorphism of E whose top action is e_top
    end_basis = hom_dim(E, E).intertwiners()
    cols = []
    for eta in end_basis:
        qcols = []
        for c in comp:
            e = [f.zero] * E.dim
            e[c] = f.one
            resid = je.reduce(eta.apply(e))
            qcols.append([resid[r] for r in comp])
        cols.append(
            [qcols[cc][rr] for rr in range(len(comp)) for cc in range(len(comp))]
        )
    target = [e_top.data[r][c] for r in range(len(comp)) for c in range(len(comp))]
    mat = Mat(
        f,
        len(target),
        len(end_basis),
        [[cols[j][i] for j in range(len(end_basis))] for i in range(len(target))],
    )
    from .linalg import solve

    x, _ = solve(mat, target)
    if x is None:
        raise ModuleError("top projection does not lift to an endomorphism")
    eta = None
    for coeff, base in zip(x, end_basis):
        if coeff.is_zero():
            continue
        term = base.scale(coeff)
        eta = term if eta is None else eta + term
    eye = Mat.identity(f, E.dim)
    for _ in range(16):
        if eta * eta == eta:
            break
        eta = (eta * eta) * (eye.scale(f.from_int(3)) - eta.scale(f.from_int(2)))
    else:
        raise ModuleError("idempotent lifting did not converge")
    piece = _restrict_to_image(E, eta)
    rest = _restrict_to_image(E, eye - eta)
    if piece.dim + rest.dim != E.dim or piece.dim == 0 or rest.dim == 0:
        raise ModuleError("idempotent splitting is degenerate")
    return _split_summands(piece, simples) + _split_summands(rest, simples)


def _iso_class(M, candidates):
    for idx, S in enumerate(candidates):
        if S.dim == M.dim and hom_dim(M, S).dim:
            return idx
    raise ModuleError("module matches no discovered simple")


def _h1_calibrate_labels(H, simples):
    """Assign V(l, r) labels per the fusion calibration convention.

    V(1,0) is the trivial module; V(1,1) is the unique one-dimensional
    summand of T (x) T for a two-dimensional simple T, which is then
    labeled V(2,0); higher labels propagate through tensoring with V(2,0)
    and V(1,1).  The residual freedom is a fusion-ring automorphism.
    """
    n = H.n
    by_dim = {}
    for idx, S in enumerate(simples):
        by_dim.setdefault(S.dim, []).append(idx)
    if any(len(by_dim.get(l, [])) != n for l in range(1, n + 1)):
        raise ModuleError(
            "simple dimensions %r do not form n copies of 1..n"
            % {d: len(v) for d, v in sorted(by_dim.items())}
        )
    label_of = {}
    trivial = None
    for idx in by_dim[1]:
        if _weight_dims(simples[idx]) == {(0, 0): 1}:
            trivial = idx
    if trivial is None:
        raise ModuleError("trivial module not found among one-dimensional simples")
    label_of[Label("V", 1, 0)] = trivial
    # deterministic choice of the two-dimensional calibration module
    two = sorted(by_dim[2], key=lambda idx: sorted(_weight_dims(simples[idx])))
    T = two[0]
    label_of[Label("V", 2, 0)] = T
    TT = tensor_module(simples[T], simples[T], check=False)
    ones = [idx for idx in by_dim[1] if hom_dim(TT, simples[idx]).dim]
    if len(ones) != 1:
        raise ModuleError("calibration square has %d one-dimensional summands" % len(ones))
    label_of[Label("V", 1, 1)] = ones[0]
    x_mod = simples[ones[0]]
    cur = x_mod
    for r in range(2, n):
        cur = tensor_module(x_mod, cur, check=False)
        label_of[Label("V", 1, r)] = _iso_class(cur, simples)
    for l in range(2, n):
        W = tensor_module(simples[T], simples[label_of[Label("V", l, 0)]], check=False)
        cands = [idx for idx in by_dim[l + 1] if hom_dim(W, simples[idx]).dim]
        if len(cands) != 1:
            raise ModuleError("label propagation ambiguous at l=%d" % (l + 1,))
        label_of[Label("V", l + 1, 0)] = cands[0]
    for l in range(2, n + 1):
        for r in range(1, n):
            W = tensor_module(x_mod, simples[label_of[Label("V", l, r - 1)]], check=False)
            label_of[Label("V", l, r)] = _iso_class(W, simples)
    if len(set(label_of.values())) != len(simples):
        raise ModuleError("label calibration is not a bijection")
    return label_of


def _h1_catalog(H, seed=0):
    n = H.n
    simples = _h1_discover_simples(H)
    label_of = _h1_calibrate_labels(H, simples)
    covers = _h1_discover_pims(H, simples, seed)
    labels = [Label("V", l, r) for l in range(1, n + 1) for r in range(n)]
    simple_map = {}
    pim_map = {}
    for lab in labels:
        idx = label_of[lab]
        S = simples[idx]
        S.label = lab
        simple_map[lab] = S
        P = covers[idx]
        if lab.a == n:
            if P.dim != n:
                raise ModuleError("V(n,r) is not its own projective cover")
        P.label = Label("Pr", lab.a, lab.b) if lab.a < n else lab
        pim_map[lab] = P
    pairs = [(lab, simple_map[lab]) for lab in labels]
    cartan = {}
    for lab in labels:
        layers = radical_filtration(pim_map[lab], pairs)
        for layer in layers:
            for s, m in layer.items():
                cartan[(lab, s)] = cartan.get((lab, s), 0) + m
    return ModuleCatalog(H, labels, simple_map, pim_map, cartan)


def module_catalog(H, seed=0):
    """Simples, projective covers and the Cartan matrix of H (cached)."""
    cached = getattr(H, "_catalog", None)
    if cached is not None:
        return cached
    if H.spec.family == "tensor_taft" or (H.spec.family == "hpq" and H.p.is_zero()):
        cat = _basic_catalog(H)
    elif H.spec.family == "hpq":
        cat = _h1_catalog(H, seed)
    else:
        raise ModuleError("module catalogs exist for the abcd families only")
    H._catalog = cat
    return cat


def decompose(M, H=None, via_hom=False):
    """Express M in the basis of simples and projective indecomposables.

    Membership in the projective class subcategory is verified, not
    assumed: the Hom-counting system must have a nonnegative integral
    solution, the dimensions must add up, and the claimed sum must
    reproduce the measured top and composition vectors.
    """
    if H is None:
        H = M.algebra
    cat = module_catalog(H)
    if M.dim == 0:
        return DecompVector({}, {})
    labs = cat.labels
    tvec = [hom_dim(M, cat.simples[lab]).dim for lab in labs]
    cvec = cat.composition_vector(M, via_hom=via_hom)
    sol = cat._solve_mults(cvec, tvec)
    if sol is None:
        raise ModuleError(
            "module %r lies outside the projective class subcategory" % (M.label,)
        )
    avec, bvec = sol
    # final oracle: the claimed direct sum reproduces t and c exactly
    k = len(labs)
    cm = cat.cartan_matrix()
    for i in range(k):
        t_claim = avec[i] + bvec[i]
        c_claim = avec[i] + sum(bvec[j] * cm[j][i] for j in range(k))
        if t_claim != tvec[i] or c_claim != cvec[i]:
            raise ModuleError("decomposition oracle mismatch at %s" % labs[i])
    simple_mults = {}
    proj_mults = {}
    dim_total = 0
    for lab, m in zip(labs, avec):
        if m:
            simple_mults[lab] = m
            dim_total += m * cat.simples[lab].dim
    for lab, m in zip(labs, bvec):
        if m:
            proj_mults[cat.proj_label(lab)] = m
            dim_total += m * cat.pims[lab].dim
    if dim_total != M.dim:
        raise ModuleError(
            "decomposition dims %d do not match module dim %d" % (dim_total, M.dim)
        )
    return DecompVector(simple_mults, proj_mults)


def conjugated_module(M, seed):
    """M rewritten in a random basis (drops weight data; used as an oracle)."""
    rng = random.Random(seed)
    H = M.algebra
    f = H.field
    d = M.dim
    from .linalg import invert

    while True:
        p = Mat.from_rows(
            f, [[f.from_int(rng.randint(-2, 2)) for _ in range(d)] for _ in range(d)]
        )
        try:
            pinv = invert(p)
            break
        except ValueError:
            continue
    acts = {name: pinv * M.acts[name] * p for name in M.acts}
    return Module(H, acts, label=M.label, weights=None, check=False)


class DecompVector:
    """Multiplicities of simples and projectives in a decomposition."""

    def __init__(self, simple_mults, proj_mults):
        self.simple_mults = {k: v for k, v in simple_mults.items() if v}
        self.proj_mults = {k: v for k, v in proj_mults.items() if v}

    def __eq__(self, other):
        return (
            isinstance(other, DecompVector)
            and self.simple_mults == other.simple_mults
            and self.proj_mults == other.proj_mults
        )

    def __hash__(self):
        return hash(
            (
                tuple(sorted(self.simple_mults.items())),
                tuple(sorted(self.proj_mults.items())),
            )
        )

    def total_dim(self, n):
        from .labels import label_dim

        out = 0
        for lab, m in self.simple_mults.items():
            out += m * label_dim(lab, n)
        for lab, m in self.proj_mults.items():
            out += m * label_dim(lab, n)
        return out

    def to_json(self):
        return {
            "simples": {str(k): v for k, v in sorted(self.simple_mults.items())},
            "projectives": {str(k): v for k, v in sorted(self.proj_mults.items())},
        }

    def __str__(self):
        items = sorted(self.simple_mults.items()) + sorted(self.proj_mults.items())
        if not items:
            return "0"
        parts = []
        for lab, m in items:
            parts.append(str(lab) if m == 1 else "%d*%s" % (m, lab))
        return " + ".join(parts)

    __repr__ = __str__
