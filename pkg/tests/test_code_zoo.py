import pytest

from grw.code_zoo import CodeSpecDescriptor, gabidulin_code, named_code, random_code
from grw.gf_arith import tower_for
from grw.linalg import Subspace
from grw.rank_code import frobenius_vec, make_code, min_rank_distance
from grw.weights import weight_hierarchy

A = 2


def test_gabidulin_examples(F4, F16):
    assert gabidulin_code(F4, 2, 1).rows == ((1, A),)
    C = gabidulin_code(F16, 4, 2)
    g = (1, 2, 4, 8)
    assert C.generator == Subspace.span(F16.ext, [g, frobenius_vec(F16, g)], 4)
    assert min_rank_distance(C) == 3
    with pytest.raises(ValueError, match="n <= m"):
        gabidulin_code(F4, 3, 1)


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)])
def test_gabidulin_is_mrd_by_brute_force(q, m):
    t = tower_for(q, m)
    for n in range(1, m + 1):
        for k in range(1, n + 1):
            if t.order ** k > 5000:
                continue
            C = gabidulin_code(t, n, k)
            assert C.k == k
            assert min_rank_distance(C) == n - k + 1


def test_random_code_deterministic(F16):
    assert random_code(F16, 4, 2, 123) == random_code(F16, 4, 2, 123)
    assert random_code(F16, 4, 4, 5) == named_code(F16, "full", 4, 4)
    seen = {random_code(F16, 4, 2, s) for s in range(10)}
    assert len(seen) > 1


def test_random_lines_over_F4(F4):
    for s in range(20):
        assert weight_hierarchy(random_code(F4, 2, 1, s)).values in {(1,), (2,)}


def test_named_examples(F4, F8):
    rep = named_code(F8, "repetition", 3, 1)
    assert rep.rows == ((1, 1, 1),) and weight_hierarchy(rep).values == (1,)
    assert weight_hierarchy(named_code(F4, "full", 2, 2)).values == (1, 2)
    coord = named_code(F8, "coordinate", 3, 2)
    assert coord == make_code(F8, [[1, 0, 0], [0, 1, 0]])
    assert weight_hierarchy(coord).values[0] == 1
    with pytest.raises(ValueError):
        named_code(F4, "bogus", 2, 1)
    with pytest.raises(ValueError):
        named_code(F4, "repetition", 2, 2)


def test_random_code_rejects_bad_k(F4):
    with pytest.raises(ValueError):
        random_code(F4, 2, 3, 0)


def test_descriptor_parsing():
    assert CodeSpecDescriptor.parse("gabidulin:n=4,k=2") == CodeSpecDescriptor("gabidulin", 4, 2)
    assert CodeSpecDescriptor.parse("random:n=3,k=2,seed=7") == CodeSpecDescriptor("random", 3, 2, 7)
    assert CodeSpecDescriptor.parse("full:n=2").k == 2
    assert CodeSpecDescriptor.parse("repetition:n=5").k == 1
    for bad in ("nope:n=2", "gabidulin:k=2", "gabidulin:n=2", "random:n=2,k=1", "full:n=x", "full:n=2,z=1"):
        with pytest.raises(ValueError):
            CodeSpecDescriptor.parse(bad)


def test_descriptor_build(F16):
    assert CodeSpecDescriptor.parse("gabidulin:n=4,k=2").build(F16) == gabidulin_code(F16, 4, 2)
    assert CodeSpecDescriptor.parse("random:n=3,k=2,seed=7").build(F16) == random_code(F16, 3, 2, 7)
