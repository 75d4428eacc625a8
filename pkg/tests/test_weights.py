import random

import pytest

from grw.code_zoo import gabidulin_code, random_code
from grw.galois_subspaces import is_frobenius_invariant
from grw.gf_arith import tower_for
from grw.linalg import BudgetExceeded, Subspace, enumerate_subspaces, subspace_intersection
from grw.rank_code import hamming_weight, make_code, rank_weight
from grw.weights import ghw, grw_d, grw_M, weight_hierarchy

A, A1 = 2, 3


def brute_M(C, r):
    """Filter every subspace of the ambient space by Galois invariance."""
    K = C.tower.ext
    for v in range(C.n + 1):
        for V in enumerate_subspaces(K, C.n, v):
            if is_frobenius_invariant(V) and subspace_intersection(C.generator, V).dim >= r:
                return v


def brute_ghw(C, r):
    """Least support size over all r-dim subcodes, from codeword supports."""
    K = C.tower.ext
    best = None
    for D in enumerate_subspaces(K, C.k, r):
        words = []
        for coeffs in D.elements():
            w = [0] * C.n
            for c, row in zip(coeffs, C.rows):
                w = [K.add(a, K.mul(c, b)) for a, b in zip(w, row)]
            words.append(w)
        supp = {j for w in words for j, x in enumerate(w) if x}
        best = len(supp) if best is None else min(best, len(supp))
    return best


def small_codes(q, m, n, count, seed):
    t = tower_for(q, m)
    rng = random.Random(seed)
    return [random_code(t, n, rng.randint(1, n), rng.getrandbits(32)) for _ in range(count)]


def test_grw_M_examples(F4):
    assert grw_M(make_code(F4, [[1, 1]]), 1)[0] == 1
    assert grw_M(make_code(F4, [[1, A]]), 1)[0] == 2
    assert grw_M(make_code(F4, [[1, 0], [0, 1]]), 2)[0] == 2
    with pytest.raises(ValueError):
        grw_M(make_code(F4, [[1, A]]), 2)


def test_grw_M_witness(F4):
    v, W = grw_M(make_code(F4, [[1, 1]]), 1)
    assert W.space == Subspace.span(F4.ext, [[1, 1]], 2)
    v, W = grw_M(make_code(F4, [[1, A]]), 1)
    assert W.space == Subspace.full(F4.ext, 2)


def test_grw_d_examples(F4):
    assert grw_d(make_code(F4, [[1, 1]]), 1) == 1
    assert grw_d(make_code(F4, [[1, A]]), 1) == 2
    assert grw_d(make_code(F4, [[1, 0], [0, 1]]), 2) == 2


def test_ghw_examples(F4):
    assert ghw(make_code(F4, [[1, 1]]), 1) == 2
    assert ghw(make_code(F4, [[1, 0]]), 1) == 1
    assert ghw(make_code(F4, [[1, 0], [0, 1]]), 2) == 2


def test_hierarchy_examples(F4, F16):
    assert weight_hierarchy(make_code(F4, [[1, A]])).values == (2,)
    assert weight_hierarchy(make_code(F4, [[1, 0], [0, 1]])).values == (1, 2)
    assert weight_hierarchy(gabidulin_code(F16, 4, 2)).values == (3, 4)


@pytest.mark.parametrize("q,m,n", [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2)])
def test_hierarchy_matches_brute_filter_exhaustive(q, m, n):
    t = tower_for(q, m)
    for k in range(1, n + 1):
        for G in enumerate_subspaces(t.ext, n, k):
            C = make_code(t, G.basis)
            H = weight_hierarchy(C)
            assert H.values == tuple(brute_M(C, r) for r in range(1, k + 1))
            for r, (v, W) in enumerate(zip(H.values, H.witnesses), 1):
                assert W.dim == v and is_frobenius_invariant(W.space)
                assert subspace_intersection(C.generator, W.space).dim >= r


@pytest.mark.parametrize("q,m,n", [(2, 3, 3), (2, 4, 3), (3, 2, 3)])
def test_hierarchy_matches_brute_filter_random(q, m, n):
    for C in small_codes(q, m, n, 8, seed=q + m + n):
        assert weight_hierarchy(C).values == tuple(brute_M(C, r) for r in range(1, C.k + 1))


@pytest.mark.parametrize("q,m,n", [(2, 2, 2), (2, 3, 3), (3, 2, 2), (2, 2, 3), (2, 2, 4)])
def test_grw_d_paths_agree_and_equal_M(q, m, n):
    t = tower_for(q, m)
    for C in small_codes(q, m, n, 10, seed=11):
        for r in range(1, C.k + 1):
            slow = grw_d(C, r, path="slow")
            if n <= m:
                assert grw_d(C, r, path="fast") == slow
                assert slow == grw_M(C, r)[0]
            else:
                with pytest.raises(ValueError):
                    grw_d(C, r, path="fast")
                assert grw_d(C, r) == slow


def test_grw_d_first_is_min_rank_distance(F8):
    for C in small_codes(2, 3, 3, 12, seed=4):
        dmin = min(rank_weight(C.tower, w) for w in C.codewords() if any(w))
        assert grw_d(C, 1, path="slow") == dmin == grw_M(C, 1)[0]


def test_n_greater_than_m_drops_below_M(F4):
    # n=3 > m=2: the full code has d_3 bounded by m while M_3 = 3
    C = make_code(F4, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert grw_M(C, 3)[0] == 3
    assert grw_d(C, 3) == 2


@pytest.mark.parametrize("q,m,n", [(2, 2, 3), (2, 3, 3), (3, 2, 2)])
def test_ghw_matches_support_oracle(q, m, n):
    for C in small_codes(q, m, n, 8, seed=2):
        for r in range(1, C.k + 1):
            assert ghw(C, r) == brute_ghw(C, r)
            assert grw_M(C, r)[0] <= ghw(C, r)


def test_ghw_one_is_min_hamming(F8):
    for C in small_codes(2, 3, 3, 10, seed=8):
        assert ghw(C, 1) == min(hamming_weight(w) for w in C.codewords() if any(w))


def test_hierarchy_strictly_increasing(F16):
    for C in small_codes(2, 4, 4, 6, seed=3):
        H = weight_hierarchy(C).values
        assert all(a < b for a, b in zip(H, H[1:]))
        assert H[-1] <= C.n


def test_budget_propagates(F16):
    C = make_code(F16, [[1, 0, 0, 0]])
    with pytest.raises(BudgetExceeded):
        grw_d(make_code(F16, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]), 1, budget=10)
    with pytest.raises(BudgetExceeded):
        grw_M(C, 1, budget=1)
