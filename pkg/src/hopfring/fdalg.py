"""Generic finite-dimensional algebra given by structure constants.

Used for the center of a Hopf algebra, block algebras, projective class
algebras, and small test fixtures.  The Jacobson radical is computed as
the radical of the trace form of the regular representation, which is
valid in characteristic zero.
"""

from __future__ import annotations

from .linalg import Mat, SpanBuilder, bilinear_radical

__all__ = ["TableAlgebra"]


class TableAlgebra:
    """Algebra on an abstract basis with product given as coordinate vectors."""

    def __init__(self, field, dim, product, unit=None):
        """product(i, j) must return the coordinates of basis_i * basis_j."""
        self.field = field
        self.dim = dim
        self._table = {}
        self._product = product
        self.unit = unit  # coordinate vector of 1, if known
        self._radical = None

    @staticmethod
    def from_table(field, table, unit=None):
        dim = len(table)
        return TableAlgebra(field, dim, lambda i, j: table[i][j], unit=unit)

    def basis_product(self, i, j):
        key = (i, j)
        v = self._table.get(key)
        if v is None:
            v = self._product(i, j)
            self._table[key] = v
        return v

    def mul_vec(self, x, y):
        z = self.field.zero
        out = [z] * self.dim
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                c = xi * yj
                for k, pk in enumerate(self.basis_product(i, j)):
                    if not pk.is_zero():
                        out[k] = out[k] + c * pk
        return out

    def left_mult_matrix(self, x):
        cols = []
        z = self.field.zero
        for j in range(self.dim):
            e = [z] * self.dim
            e[j] = self.field.one
            cols.append(self.mul_vec(x, e))
        return Mat(
            self.field,
            self.dim,
            self.dim,
            [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)],
        )

    def trace_vector(self):
        """Tr of left multiplication by each basis element."""
        out = []
        for w in range(self.dim):
            t = self.field.zero
            for u in range(self.dim):
                t = t + self.basis_product(w, u)[u]
            out.append(t)
        return out

    def gram(self):
        tv = self.trace_vector()
        z = self.field.zero
        data = [[z] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(i, self.dim):
                g = z
                for k, pk in enumerate(self.basis_product(i, j)):
                    if not pk.is_zero() and not tv[k].is_zero():
                        g = g + pk * tv[k]
                data[i][j] = g
                data[j][i] = g
        return Mat(self.field, self.dim, self.dim, data)

    def radical(self):
        if self._radical is None:
            self._radical = bilinear_radical(self.gram())
        return self._radical

    def semisimple_quotient_dim(self):
        return self.dim - self.radical().dim

    def is_idempotent(self, x):
        return self.mul_vec(x, x) == list(x)

    def orthogonal(self, x, y):
        z = self.field.zero
        return all(c.is_zero() for c in self.mul_vec(x, y)) and all(
            c.is_zero() for c in self.mul_vec(y, x)
        )

    def ideal_span(self, generators):
        """Two-sided ideal generated by the given coordinate vectors."""
        sb = SpanBuilder(self.field, self.dim)
        z = self.field.zero
        frontier = [list(g) for g in generators]
        for g in frontier:
            sb.insert(g)
        while frontier:
            nxt = []
            for g in frontier:
                for j in range(self.dim):
                    e = [z] * self.dim
                    e[j] = self.field.one
                    for prod in (self.mul_vec(e, g), self.mul_vec(g, e)):
                        if sb.insert(prod):
                            nxt.append(prod)
            frontier = nxt
        return sb.to_subspace()

    def subspace_product_span(self, xs, ys):
        sb = SpanBuilder(self.field, self.dim)
        for x in xs:
            for y in ys:
                sb.insert(self.mul_vec(x, y))
        return sb.to_subspace()

    def nilpotency_index(self, sub):
        """Least m with sub^m = 0 for a subalgebra-closed span (None if not nilpotent)."""
        rows = [list(r) for r in sub.rows]
        m = 1
        while rows:
            if m > self.dim + 1:
                return None
            nxt = self.subspace_product_span(rows, [list(r) for r in sub.rows])
            rows = [list(r) for r in nxt.rows]
            m += 1
        return m

    def quotient_by_ideal(self, ideal):
        """Quotient algebra on the complement coordinates of the ideal."""
        comp = ideal.complement_indices()
        pos = {j: k for k, j in enumerate(comp)}
        field = self.field
        z = field.zero

        def product(i, j):
            ei = [z] * self.dim
            ei[comp[i]] = field.one
            ej = [z] * self.dim
            ej[comp[j]] = field.one
            red = ideal.reduce(self.mul_vec(ei, ej))
            return [red[c] for c in comp]

        unit = None
        if self.unit is not None:
            red = ideal.reduce(list(self.unit))
            unit = [red[c] for c in comp]
        quo = TableAlgebra(field, len(comp), product, unit=unit)
        quo._section = comp
        return quo
