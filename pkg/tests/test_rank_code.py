import itertools
import random

import pytest
from hypothesis import given, strategies as st

from grw.gf_arith import tower_for
from grw.linalg import Subspace, dot
from grw.rank_code import (
    ExpansionBasis,
    default_basis,
    dual_code,
    frobenius_vec,
    hamming_weight,
    lambda_expand,
    make_code,
    min_rank_distance,
    rank_weight,
)

A, A1 = 2, 3  # alpha, alpha + 1 in F_4


def fq_span_dim(tower, x):
    """Oracle: dim over F_q of span{x_i}, by counting all F_q-combinations."""
    F = tower.ext
    span = {0}
    for a in x:
        span = {F.add(s, F.mul(c, a)) for s in span for c in range(tower.q)}
    d = 0
    while tower.q**d < len(span):
        d += 1
    return d


def random_bases(tower, count, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        u = tuple(rng.randrange(1, tower.order) for _ in range(tower.m))
        try:
            out.append(ExpansionBasis(tower, u))
        except ValueError:
            pass
    return out


# -- construction / dual ---------------------------------------------------------


def test_make_code_examples(F4):
    C = make_code(F4, [[1, A]])
    assert (C.n, C.k, C.rows) == (2, 1, ((1, A),))
    assert make_code(F4, [[A, A1]]).rows == ((1, A),)
    with pytest.raises(ValueError, match="dependent"):
        make_code(F4, [[1, 0], [1, 0]])
    with pytest.raises(ValueError):
        make_code(F4, [])
    with pytest.raises(ValueError):
        make_code(F4, [[1, 4]])


def test_dual_examples(F4):
    assert dual_code(make_code(F4, [[1, A]])).generator == Subspace.span(F4.ext, [[A, 1]], 2)
    assert dual_code(make_code(F4, [[1, 1]])).rows == ((1, 1),)
    F2 = tower_for(2, 1)
    assert dual_code(make_code(F2, [[1, 0]])).rows == ((0, 1),)


def test_dual_of_full_code_is_zero(F4):
    D = dual_code(make_code(F4, [[1, 0], [0, 1]]))
    assert D.k == 0


@pytest.mark.parametrize("q,m,n", [(2, 2, 3), (3, 2, 2), (2, 3, 3)])
def test_dual_involution(q, m, n):
    t = tower_for(q, m)
    rng = random.Random(1)
    for _ in range(20):
        k = rng.randint(1, n)
        rows = [[rng.randrange(t.order) for _ in range(n)] for _ in range(k)]
        try:
            C = make_code(t, rows)
        except ValueError:
            continue
        D = dual_code(C)
        assert C.k + D.k == n
        for x in D.rows:
            for y in C.rows:
                assert dot(t.ext, x, y) == 0
        if D.k:
            assert dual_code(D) == C


# -- expansion / rank weight ---------------------------------------------------


def test_lambda_examples(F4):
    B = default_basis(F4)
    assert lambda_expand(F4, [1, A], B) == [[1, 0], [0, 1]]
    assert lambda_expand(F4, [0, 0], B) == [[0, 0], [0, 0]]
    assert lambda_expand(F4, [A1, 1], B) == [[1, 1], [1, 0]]


@pytest.mark.parametrize("q,m", [(2, 3), (3, 2), (4, 2)])
def test_lambda_reconstructs(q, m):
    t = tower_for(q, m)
    for B in [default_basis(t)] + random_bases(t, 3):
        for a in range(t.order):
            (row,) = lambda_expand(t, [a], B)
            total = 0
            for c, u in zip(row, B.u):
                total = t.ext.add(total, t.ext.mul(c, u))
            assert total == a


def test_invalid_expansion_basis(F4):
    with pytest.raises(ValueError):
        ExpansionBasis(F4, (1, 1))
    with pytest.raises(ValueError):
        ExpansionBasis(F4, (1,))


def test_rank_weight_examples(F4):
    assert rank_weight(F4, [1, 1, 1]) == 1
    assert rank_weight(F4, [0, 0, 0]) == 0
    assert rank_weight(F4, [1, A]) == 2


@pytest.mark.parametrize("q,m,n", [(2, 2, 3), (2, 3, 3), (3, 2, 2)])
def test_rank_weight_is_fq_span_dimension(q, m, n):
    t = tower_for(q, m)
    for x in itertools.product(range(t.order), repeat=n):
        assert rank_weight(t, x) == fq_span_dim(t, x)


@pytest.mark.parametrize("q,m", [(2, 3), (2, 4), (3, 2)])
def test_rank_weight_basis_independent(q, m):
    t = tower_for(q, m)
    bases = random_bases(t, 4, seed=q * 10 + m)
    rng = random.Random(5)
    for _ in range(200):
        x = [rng.randrange(t.order) for _ in range(4)]
        ws = {rank_weight(t, x, B) for B in bases}
        assert ws == {rank_weight(t, x)}
        assert 0 <= rank_weight(t, x) <= min(4, m)


def test_rank_weight_invariances_exhaustive(F8):
    t = F8
    for x in itertools.product(range(t.order), repeat=3):
        w = rank_weight(t, x)
        assert w <= hamming_weight(x)
        for c in range(1, t.q):
            assert rank_weight(t, [t.ext.mul(c, a) for a in x]) == w
        for perm in itertools.permutations(x):
            assert rank_weight(t, perm) == w


@given(st.lists(st.integers(0, 8), min_size=1, max_size=4), st.integers(1, 8))
def test_rank_weight_scaling_F9(x, c):
    t = tower_for(3, 2)
    assert rank_weight(t, [t.ext.mul(c, a) for a in x]) == rank_weight(t, x)


# -- minimum distance ------------------------------------------------------------


def test_min_rank_distance_examples(F4):
    assert min_rank_distance(make_code(F4, [[1, 1]])) == 1
    assert min_rank_distance(make_code(F4, [[1, A]])) == 2
    F2 = tower_for(2, 1)
    assert min_rank_distance(make_code(F2, [[1, 0], [0, 1]])) == 1


def test_min_rank_distance_le_min_hamming(F8):
    rng = random.Random(3)
    for _ in range(30):
        rows = [[rng.randrange(8) for _ in range(3)] for _ in range(rng.randint(1, 2))]
        try:
            C = make_code(F8, rows)
        except ValueError:
            continue
        dh = min(hamming_weight(w) for w in C.codewords() if any(w))
        assert 1 <= min_rank_distance(C) <= dh


# -- Frobenius on vectors -----------------------------------------------------------


def test_frobenius_vec_examples(F4):
    assert frobenius_vec(F4, [1, A], 1) == (1, A1)
    assert frobenius_vec(F4, [1, A], F4.m) == (1, A)
    assert frobenius_vec(F4, [1, 1, 0], 1) == (1, 1, 0)


def test_frobenius_vec_semilinear(F8):
    t, F = F8, F8.ext
    rng = random.Random(2)
    for _ in range(100):
        x = [rng.randrange(8) for _ in range(3)]
        y = [rng.randrange(8) for _ in range(3)]
        a, b = rng.randrange(8), rng.randrange(8)
        lhs = frobenius_vec(t, [F.add(F.mul(a, u), F.mul(b, v)) for u, v in zip(x, y)])
        fa, fb = F.frob_table[a], F.frob_table[b]
        fx, fy = frobenius_vec(t, x), frobenius_vec(t, y)
        assert lhs == tuple(F.add(F.mul(fa, u), F.mul(fb, v)) for u, v in zip(fx, fy))
