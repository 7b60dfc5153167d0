"""Exact dense linear algebra over Q(zeta_n).

Everything works on row lists of CycloNum with zero-skipping inner loops;
pivots are chosen by a coefficient-size heuristic and normalized early to
keep fraction growth in check (the elimination hot spot tracked by the
benchmark harness).  Subspaces are kept in reduced row echelon form, so
they are canonical and comparable by equality.
"""

from __future__ import annotations

__all__ = [
    "Mat",
    "Subspace",
    "SpanBuilder",
    "kernel_basis",
    "rank",
    "image",
    "solve",
    "invert",
    "kronecker",
    "direct_sum",
    "restrict_operator",
    "quotient_operator",
    "bilinear_radical",
]


def _size(x):
    """Rough bit size of a cyclotomic scalar, used for pivot selection."""
    total = 0
    for c in x.coeffs:
        if c:
            total += c.numerator.bit_length() + c.denominator.bit_length()
    return total


def rref_rows(vectors, field, ncols):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    work = [list(v) for v in vectors if any(not c._is0 for c in v)]
    done = []
    pivots = []
    for col in range(ncols):
        best = -1
        best_size = None
        for i, row in enumerate(work):
            e = row[col]
            if not e._is0:
                s = _size(e)
                if best_size is None or s < best_size:
                    best, best_size = i, s
                    if s <= 2:
                        break
        if best < 0:
            continue
        prow = work.pop(best)
        pv = prow[col]
        if not pv.is_one():
            inv = pv.inverse()
            prow = [c * inv for c in prow]
        for row in work:
            f = row[col]
            if not f._is0:
                for j in range(col, ncols):
                    pj = prow[j]
                    if not pj._is0:
                        row[j] = row[j] - f * pj
        for row in done:
            f = row[col]
            if not f._is0:
                for j in range(col, ncols):
                    pj = prow[j]
                    if not pj._is0:
                        row[j] = row[j] - f * pj
        done.append(prow)
        pivots.append(col)
        work = [r for r in work if any(not c._is0 for c in r)]
        if not work:
            break
    order = sorted(range(len(done)), key=lambda i: pivots[i])
    return [done[i] for i in order], [pivots[i] for i in order]


class Mat:
    """Dense matrix over a cyclotomic field, stored as a list of rows."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix shape mismatch")

    @staticmethod
    def zeros(field, rows, cols):
        z = field.zero
        return Mat(field, rows, cols, [[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(field, m):
        z, o = field.zero, field.one
        return Mat(field, m, m, [[o if i == j else z for j in range(m)] for i in range(m)])

    @staticmethod
    def from_rows(field, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return Mat(field, rows, cols, [list(r) for r in data])

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(self.data[i][j] == other.data[i][j] for i in range(self.rows) for j in range(self.cols))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def is_zero(self):
        return all(c._is0 for r in self.data for c in r)

    def __add__(self, other):
        return Mat(
            self.field,
            self.rows,
            self.cols,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __sub__(self, other):
        return Mat(
            self.field,
            self.rows,
            self.cols,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __neg__(self):
        return Mat(self.field, self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c):
        return Mat(self.field, self.rows, self.cols, [[a * c for a in r] for r in self.data])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("incompatible shapes for product")
        z = self.field.zero
        out = [[z] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i, arow in enumerate(self.data):
            orow = out[i]
            for k, aik in enumerate(arow):
                if aik._is0:
                    continue
                brow = odata[k]
                for j, bkj in enumerate(brow):
                    if not bkj._is0:
                        orow[j] = orow[j] + aik * bkj
        return Mat(self.field, self.rows, other.cols, out)

    def apply(self, vec):
        """Matrix times column vector (vector given as a list)."""
        z = self.field.zero
        out = [z] * self.rows
        for i, arow in enumerate(self.data):
            acc = z
            for k, aik in enumerate(arow):
                if not aik._is0:
                    vk = vec[k]
                    if not vk._is0:
                        acc = acc + aik * vk
            out[i] = acc
        return out

    def power(self, k):
        out = Mat.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def transpose(self):
        return Mat(
            self.field,
            self.cols,
            self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def trace(self):
        t = self.field.zero
        for i in range(min(self.rows, self.cols)):
            t = t + self.data[i][i]
        return t

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[c.serialize() for c in r] for r in self.data],
        }

    def __repr__(self):
        return "Mat(%dx%d over Q(zeta_%d))" % (self.rows, self.cols, self.field.n)


class Subspace:
    """A subspace of field^ambient with canonical reduced echelon basis."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @staticmethod
    def from_vectors(field, ambient, vectors):
        rows, pivots = rref_rows(vectors, field, ambient)
        return Subspace(field, ambient, rows, pivots)

    @staticmethod
    def zero(field, ambient):
        return Subspace(field, ambient, [], [])

    @staticmethod
    def full(field, ambient):
        eye = Mat.identity(field, ambient)
        return Subspace(field, ambient, eye.data, list(range(ambient)))

    @property
    def dim(self):
        return len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def reduce(self, vec):
        """Residual of vec modulo the subspace (zero iff contained)."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if not f._is0:
                for j in range(p, self.ambient):
                    rj = row[j]
                    if not rj._is0:
                        v[j] = v[j] - f * rj
        return v

    def contains(self, vec):
        return all(c._is0 for c in self.reduce(vec))

    def coords(self, vec):
        """Coordinates of vec in the echelon basis; raises if not a member."""
        v = list(vec)
        out = []
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            out.append(f)
            if not f._is0:
                for j in range(p, self.ambient):
                    rj = row[j]
                    if not rj._is0:
                        v[j] = v[j] - f * rj
        if any(not c._is0 for c in v):
            raise ValueError("vector not contained in subspace")
        return out

    def sum(self, other):
        return Subspace.from_vectors(
            self.field, self.ambient, list(self.rows) + list(other.rows)
        )

    def intersect(self, other):
        """Intersection computed from the kernel of [basis_self | -basis_other]."""
        if not self.rows or not other.rows:
            return Subspace.zero(self.field, self.ambient)
        cols = [list(r) for r in self.rows] + [[-c for c in r] for r in other.rows]
        m = Mat(self.field, self.ambient, len(cols), [
            [cols[j][i] for j in range(len(cols))] for i in range(self.ambient)
        ])
        ker = kernel_basis(m)
        vecs = []
        for kv in ker.rows:
            v = [self.field.zero] * self.ambient
            for idx, row in enumerate(self.rows):
                c = kv[idx]
                if not c._is0:
                    for j, rj in enumerate(row):
                        if not rj._is0:
                            v[j] = v[j] + c * rj
            vecs.append(v)
        return Subspace.from_vectors(self.field, self.ambient, vecs)

    def complement_indices(self):
        piv = set(self.pivots)
        return [j for j in range(self.ambient) if j not in piv]

    def to_json(self):
        return {
            "ambient": self.ambient,
            "dim": self.dim,
            "basis": [[c.serialize() for c in r] for r in self.rows],
        }

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


class SpanBuilder:
    """Incrementally maintained reduced echelon span (insertion returns growth)."""

    def __init__(self, field, ambient):
        self.field = field
        self.ambient = ambient
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def residual(self, vec):
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if not f._is0:
                for j in range(p, self.ambient):
                    rj = row[j]
                    if not rj._is0:
                        v[j] = v[j] - f * rj
        return v

    def insert(self, vec):
        v = self.residual(vec)
        lead = -1
        for j, c in enumerate(v):
            if not c._is0:
                lead = j
                break
        if lead < 0:
            return False
        pv = v[lead]
        if not pv.is_one():
            inv = pv.inverse()
            v = [c * inv for c in v]
        for row, p in zip(self.rows, self.pivots):
            f = row[lead]
            if not f._is0:
                for j in range(lead, self.ambient):
                    vj = v[j]
                    if not vj._is0:
                        row[j] = row[j] - f * vj
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < lead:
            pos += 1
        self.rows.insert(pos, list(v))
        self.pivots.insert(pos, lead)
        return True

    def to_subspace(self):
        return Subspace(self.field, self.ambient, self.rows, self.pivots)


def kernel_basis(m):
    """Canonical echelon basis of the right kernel {v : Mv = 0}."""
    rows, pivots = rref_rows(m.data, m.field, m.cols)
    pivset = set(pivots)
    z, o = m.field.zero, m.field.one
    vecs = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [z] * m.cols
        v[f] = o
        for row, p in zip(rows, pivots):
            if not row[f]._is0:
                v[p] = -row[f]
        vecs.append(v)
    return Subspace.from_vectors(m.field, m.cols, vecs)


def rank(m):
    _, pivots = rref_rows(m.data, m.field, m.cols)
    return len(pivots)


def image(m):
    """Column space of M as a subspace of field^rows."""
    return Subspace.from_vectors(m.field, m.rows, m.transpose().data)


def solve(m, b):
    """One solution of Mx = b (or None) plus the homogeneous kernel."""
    aug = [list(row) + [bv] for row, bv in zip(m.data, b)]
    rows, pivots = rref_rows(aug, m.field, m.cols + 1)
    ker = kernel_basis(m)
    z = m.field.zero
    x = [z] * m.cols
    for row, p in zip(rows, pivots):
        if p == m.cols:
            return None, ker
        x[p] = row[m.cols]
    return x, ker


def kronecker(a, b):
    """Tensor product matrix, left factor major: (i_a*rb + i_b, j_a*cb + j_b)."""
    field = a.field
    z = field.zero
    rb, cb = b.rows, b.cols
    out = [[z] * (a.cols * cb) for _ in range(a.rows * rb)]
    for ia, arow in enumerate(a.data):
        for ja, av in enumerate(arow):
            if av._is0:
                continue
            for ib, brow in enumerate(b.data):
                orow = out[ia * rb + ib]
                base = ja * cb
                for jb, bv in enumerate(brow):
                    if not bv._is0:
                        orow[base + jb] = av * bv
    return Mat(field, a.rows * rb, a.cols * cb, out)


def direct_sum(mats):
    field = mats[0].field
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = Mat.zeros(field, rows, cols)
    ro = co = 0
    for m in mats:
        for i in range(m.rows):
            out.data[ro + i][co : co + m.cols] = list(m.data[i])
        ro += m.rows
        co += m.cols
    return out


def restrict_operator(t, w):
    """Matrix of t on the basis of the invariant subspace w (raises otherwise)."""
    cols = []
    for row in w.rows:
        img = t.apply(list(row))
        cols.append(w.coords(img))
    d = w.dim
    return Mat(t.field, d, d, [[cols[j][i] for j in range(d)] for i in range(d)])


def quotient_operator(t, w):
    """Induced operator on field^ambient / w, on the complement coordinates."""
    restrict_operator(t, w)  # raises unless w is invariant, so the quotient action is well defined
    comp = w.complement_indices()
    z = t.field.zero
    cols = []
    for j in comp:
        e = [z] * w.ambient
        e[j] = t.field.one
        resid = w.reduce(t.apply(e))
        cols.append([resid[i] for i in comp])
    d = len(comp)
    return Mat(t.field, d, d, [[cols[j][i] for j in range(d)] for i in range(d)])


def invert(m):
    """Inverse of a square matrix via RREF of the augmented system."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    d = m.rows
    aug = [
        list(row) + list(eye_row)
        for row, eye_row in zip(m.data, Mat.identity(m.field, d).data)
    ]
    rows, pivots = rref_rows(aug, m.field, 2 * d)
    if pivots[:d] != list(range(d)):
        raise ValueError("matrix not invertible")
    return Mat(m.field, d, d, [row[d:] for row in rows])


def bilinear_radical(gram):
    """Radical of a symmetric bilinear form given by its Gram matrix."""
    if gram.rows != gram.cols:
        raise ValueError("Gram matrix must be square")
    for i in range(gram.rows):
        for j in range(i):
            if gram.data[i][j] != gram.data[j][i]:
                raise ValueError("Gram matrix must be symmetric")
    return kernel_basis(gram)
