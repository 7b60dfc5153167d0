import random

import pytest

from hopfring.algebra import AlgebraError, AlgebraSpec, build_algebra
from hopfring.linalg import Mat


def get(family, n, p=None):
    return build_algebra(AlgebraSpec(family, n, p))


def test_spec_validation():
    with pytest.raises(AlgebraError):
        AlgebraSpec("nope", 3)
    with pytest.raises(AlgebraError):
        AlgebraSpec("taft", 2)
    with pytest.raises(AlgebraError):
        AlgebraSpec("hpq", 3)  # missing p
    with pytest.raises(AlgebraError):
        AlgebraSpec("taft", 3, p=1)


def test_dimensions():
    assert get("taft", 3).dim == 9
    assert get("taft_opp", 3).dim == 9
    assert get("tensor_taft", 3).dim == 81
    assert get("hpq", 3, 1).dim == 81


def test_unit_element():
    H = get("tensor_taft", 3)
    rng = random.Random(0)
    for _ in range(20):
        m = H.basis[rng.randrange(H.dim)]
        u = H.monomial(m)
        assert H.mul(H.one, u) == u
        assert H.mul(u, H.one) == u


def test_tensor_taft_da_commutes():
    H = get("tensor_taft", 3)
    d, a = H.gen("d"), H.gen("a")
    assert d * a == H.monomial((1, 0, 0, 1))


def test_hpq_deformed_relation():
    H = get("hpq", 3, 1)
    d, a = H.gen("d"), H.gen("a")
    q = H.field.q
    expect = H.monomial((1, 0, 0, 1), q) + H.one - H.monomial((0, 1, 1, 0))
    assert d * a == expect


def test_hpq_p0_da():
    H = get("hpq", 3, 0)
    d, a = H.gen("d"), H.gen("a")
    assert d * a == H.monomial((1, 0, 0, 1), H.field.q)


def _oracle_tensor_taft(H, u, v):
    n = H.n
    i1, j1, l1, k1 = u
    i2, j2, l2, k2 = v
    if i1 + i2 >= n or k1 + k2 >= n:
        return {}
    mono = (i1 + i2, (j1 + j2) % n, (l1 + l2) % n, k1 + k2)
    return {mono: H.field.q_pow(j1 * i2 + k1 * l2)}


def _oracle_hpq0(H, u, v):
    n = H.n
    i1, j1, l1, k1 = u
    i2, j2, l2, k2 = v
    if i1 + i2 >= n or k1 + k2 >= n:
        return {}
    mono = (i1 + i2, (j1 + j2) % n, (l1 + l2) % n, k1 + k2)
    return {mono: H.field.q_pow((j1 + l1 + k1) * i2 + k1 * (j2 + l2))}


def _oracle_taft(H, u, v, sign):
    n = H.n
    i1, j1 = u
    i2, j2 = v
    if j1 + j2 >= n:
        return {}
    return {((i1 + i2) % n, j1 + j2): H.field.q_pow(sign * j1 * i2)}


@pytest.mark.parametrize("n", [3, 4])
def test_products_against_closed_forms(n):
    rng = random.Random(100 + n)
    HT = get("tensor_taft", n)
    H0 = get("hpq", n, 0)
    for _ in range(200):
        u = HT.basis[rng.randrange(HT.dim)]
        v = HT.basis[rng.randrange(HT.dim)]
        assert HT.mono_mul(u, v) == _oracle_tensor_taft(HT, u, v)
        assert H0.mono_mul(u, v) == _oracle_hpq0(H0, u, v)
    T = get("taft", n)
    Topp = get("taft_opp", n)
    for _ in range(200):
        u = T.basis[rng.randrange(T.dim)]
        v = T.basis[rng.randrange(T.dim)]
        assert T.mono_mul(u, v) == _oracle_taft(T, u, v, 1)
        assert Topp.mono_mul(u, v) == _oracle_taft(Topp, u, v, -1)


def test_hpq1_products_preserve_grading():
    H = get("hpq", 3, 1)
    rng = random.Random(7)
    for _ in range(100):
        u = H.basis[rng.randrange(H.dim)]
        v = H.basis[rng.randrange(H.dim)]
        gu, gv = H.conj_grade(u), H.conj_grade(v)
        expect = ((gu[0] + gv[0]) % 3, (gu[1] + gv[1]) % 3)
        for m in H.mono_mul(u, v):
            assert H.conj_grade(m) == expect


def test_generator_nilpotency_and_order():
    for fam, p in (("tensor_taft", None), ("hpq", 1)):
        H = get(fam, 3, p)
        a = H.gen("a")
        pw = H.one
        for _ in range(2):
            pw = pw * a
        assert not pw.is_zero()
        assert (pw * a).is_zero()
        B = H.left_mult_matrix("b")
        assert B.power(3) == Mat.identity(H.field, H.dim)
        assert B.power(1) != Mat.identity(H.field, H.dim)


def test_group_idempotents_orthogonal_complete():
    for fam, p in (("tensor_taft", None), ("hpq", 0), ("hpq", 1)):
        H = get(fam, 3, p)
        es = H.group_idempotents()
        total = H.zero_elt
        for key, e in es.items():
            total = total + e
            assert e * e == e
        assert total == H.one
        e00 = es[(0, 0)]
        e10 = es[(1, 0)]
        assert (e00 * e10).is_zero()


def test_idempotent_commutation_with_a():
    # moving a past e(i,j) shifts the index by the family's weight shift
    HT = get("tensor_taft", 3)
    H0 = get("hpq", 3, 0)
    assert HT.weight_shift("a") == (1, 0) and H0.weight_shift("a") == (1, 1)
    assert HT.weight_shift("d") == (0, 2) and H0.weight_shift("d") == (2, 2)
    for H in (HT, H0):
        es = H.group_idempotents()
        a = H.gen("a")
        d = H.gen("d")
        sa = H.weight_shift("a")
        sd = H.weight_shift("d")
        for i in range(3):
            for j in range(3):
                assert a * es[(i, j)] == es[((i + sa[0]) % 3, (j + sa[1]) % 3)] * a
                assert d * es[(i, j)] == es[((i + sd[0]) % 3, (j + sd[1]) % 3)] * d


def test_idempotent_eigenvalues():
    H = get("hpq", 3, 0)
    es = H.group_idempotents()
    b, c = H.gen("b"), H.gen("c")
    for (i, j), e in es.items():
        assert b * e == e.scale(H.field.q_pow(i))
        assert c * e == e.scale(H.field.q_pow(j))


def test_right_mult_matrix_consistency():
    H = get("hpq", 3, 1)
    R = H.right_mult_matrix("d")
    rng = random.Random(3)
    d = H.gen("d")
    for _ in range(10):
        m = H.basis[rng.randrange(H.dim)]
        u = H.monomial(m)
        prod = u * d
        vec = R.apply(u.as_vector())
        assert prod.as_vector() == vec


def test_serialize_readable():
    H = get("tensor_taft", 3)
    x = H.monomial((1, 0, 0, 1)) + H.monomial((0, 2, 0, 0), H.field.q)
    s = x.serialize()
    assert "ad" in s and "b^2" in s
