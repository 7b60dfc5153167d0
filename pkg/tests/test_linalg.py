import random

import pytest

from hopfring.cyclo import cyclo_field
from hopfring.linalg import (
    Mat,
    SpanBuilder,
    Subspace,
    bilinear_radical,
    direct_sum,
    image,
    kernel_basis,
    kronecker,
    quotient_operator,
    rank,
    restrict_operator,
    solve,
)

F3 = cyclo_field(3)


def rand_mat(field, rows, cols, rng):
    return Mat.from_rows(
        field, [[field.random(rng, 4, 2) for _ in range(cols)] for _ in range(rows)]
    )


def test_kernel_of_zero_and_identity():
    z = Mat.zeros(F3, 3, 3)
    assert kernel_basis(z) == Subspace.full(F3, 3)
    assert kernel_basis(Mat.identity(F3, 3)) == Subspace.zero(F3, 3)


def test_kernel_of_singular_cyclotomic_matrix():
    q = F3.q
    m = Mat.from_rows(F3, [[F3.one, q], [q * q, F3.one]])
    ker = kernel_basis(m)
    assert ker.dim == 1
    v = list(ker.rows[0])
    assert all(c.is_zero() for c in m.apply(v))


def test_rank_nullity_randomized():
    rng = random.Random(42)
    for _ in range(30):
        r = rng.randint(1, 5)
        c = rng.randint(1, 5)
        m = rand_mat(F3, r, c, rng)
        assert rank(m) + kernel_basis(m).dim == c


def test_kernel_vectors_annihilate():
    rng = random.Random(43)
    for _ in range(20):
        m = rand_mat(F3, 3, 5, rng)
        for row in kernel_basis(m).rows:
            assert all(x.is_zero() for x in m.apply(list(row)))


def test_kronecker_identities():
    assert kronecker(Mat.identity(F3, 2), Mat.identity(F3, 3)) == Mat.identity(F3, 6)
    rng = random.Random(1)
    a = rand_mat(F3, 2, 2, rng)
    assert kronecker(a, Mat.zeros(F3, 3, 3)).is_zero()


def test_kronecker_trace_multiplicative():
    rng = random.Random(2)
    for _ in range(10):
        a = rand_mat(F3, 3, 3, rng)
        b = rand_mat(F3, 3, 3, rng)
        assert kronecker(a, b).trace() == a.trace() * b.trace()


def test_kronecker_associative():
    rng = random.Random(3)
    a = rand_mat(F3, 2, 2, rng)
    b = rand_mat(F3, 2, 3, rng)
    c = rand_mat(F3, 3, 2, rng)
    assert kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c))


def test_kronecker_mixed_product():
    rng = random.Random(4)
    a = rand_mat(F3, 2, 3, rng)
    b = rand_mat(F3, 3, 2, rng)
    c = rand_mat(F3, 3, 2, rng)
    d = rand_mat(F3, 2, 3, rng)
    assert kronecker(a * b, c * d) == kronecker(a, c) * kronecker(b, d)


def test_bilinear_radical_basics():
    assert bilinear_radical(Mat.identity(F3, 4)).dim == 0
    assert bilinear_radical(Mat.zeros(F3, 4, 4)).dim == 4
    with pytest.raises(ValueError):
        bilinear_radical(Mat.zeros(F3, 2, 3))


def test_bilinear_radical_rejects_asymmetric():
    m = Mat.zeros(F3, 2, 2)
    m.data[0][1] = F3.one
    with pytest.raises(ValueError):
        bilinear_radical(m)


def test_trace_form_of_cyclotomic_field_is_nondegenerate():
    # Q(zeta_3) as a 2-dimensional algebra over Q with basis 1, z:
    # left multiplications L_1 = I and L_z = [[0,-1],[1,-1]] since z^2 = -1 - z
    one, zero = F3.one, F3.zero
    l1 = Mat.identity(F3, 2)
    lz = Mat.from_rows(F3, [[zero, -one], [one, -one]])
    basis = [l1, lz]
    gram = Mat.from_rows(
        F3, [[(basis[i] * basis[j]).trace() for j in range(2)] for i in range(2)]
    )
    assert gram.data[0][0] == F3.from_int(2)
    assert gram.data[0][1] == -one
    assert gram.data[1][1] == -one
    assert bilinear_radical(gram).dim == 0


def test_solve_particular_and_kernel():
    rng = random.Random(5)
    for _ in range(20):
        m = rand_mat(F3, 3, 4, rng)
        x0 = [F3.random(rng) for _ in range(4)]
        b = m.apply(x0)
        x, ker = solve(m, b)
        assert x is not None
        assert m.apply(x) == b
        assert rank(m) + ker.dim == 4


def test_solve_inconsistent():
    m = Mat.zeros(F3, 2, 2)
    x, ker = solve(m, [F3.one, F3.zero])
    assert x is None
    assert ker.dim == 2


def test_image_dimension():
    rng = random.Random(6)
    m = rand_mat(F3, 4, 3, rng)
    assert image(m).dim == rank(m)
    for j in range(3):
        assert image(m).contains(m.column(j))


def test_direct_sum_block_shape():
    a = Mat.identity(F3, 2)
    b = Mat.identity(F3, 3).scale(F3.q)
    s = direct_sum([a, b])
    assert s.rows == 5 and s.cols == 5
    assert s.data[0][0] == F3.one and s.data[2][2] == F3.q
    assert s.data[0][2].is_zero()


def test_restriction_and_quotient_commute_with_inclusion():
    # T is block triangular, so span(e0, e1) is invariant
    q = F3.q
    t = Mat.from_rows(
        F3,
        [
            [F3.one, q, q * q],
            [F3.zero, q, F3.one],
            [F3.zero, F3.zero, q],
        ],
    )
    w = Subspace.from_vectors(
        F3, 3, [[F3.one, F3.zero, F3.zero], [F3.zero, F3.one, F3.zero]]
    )
    r = restrict_operator(t, w)
    for row in w.rows:
        img = t.apply(list(row))
        coords = w.coords(img)
        back = [F3.zero] * 3
        for c, brow in zip(coords, w.rows):
            for j in range(3):
                back[j] = back[j] + c * brow[j]
        assert back == img
    assert r.rows == 2
    qop = quotient_operator(t, w)
    assert qop.rows == 1
    assert qop.data[0][0] == q


def test_restriction_rejects_noninvariant():
    t = Mat.from_rows(F3, [[F3.zero, F3.one], [F3.one, F3.zero]])
    w = Subspace.from_vectors(F3, 2, [[F3.one, F3.zero]])
    with pytest.raises(ValueError):
        restrict_operator(t, w)


def test_subspace_canonical_under_shuffle():
    rng = random.Random(7)
    vecs = [[F3.random(rng) for _ in range(5)] for _ in range(3)]
    s1 = Subspace.from_vectors(F3, 5, vecs)
    shuffled = list(vecs)
    rng.shuffle(shuffled)
    mixed = [
        [a + b for a, b in zip(shuffled[0], shuffled[1])],
        shuffled[1],
        shuffled[2],
        [c * F3.q for c in shuffled[0]],
    ]
    s2 = Subspace.from_vectors(F3, 5, mixed)
    assert s1 == s2


def test_span_builder_matches_batch():
    rng = random.Random(8)
    vecs = [[F3.random(rng) for _ in range(6)] for _ in range(8)]
    sb = SpanBuilder(F3, 6)
    for v in vecs:
        sb.insert(v)
    assert sb.to_subspace() == Subspace.from_vectors(F3, 6, vecs)


def test_subspace_sum_and_intersect():
    e = Mat.identity(F3, 4).data
    a = Subspace.from_vectors(F3, 4, [e[0], e[1]])
    b = Subspace.from_vectors(F3, 4, [e[1], e[2]])
    assert a.sum(b).dim == 3
    inter = a.intersect(b)
    assert inter.dim == 1
    assert inter.contains(e[1])
