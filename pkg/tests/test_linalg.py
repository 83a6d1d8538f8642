import random
from fractions import Fraction

import pytest

from schubertlab.linalg import QQ, ExactMatrix, PrimeField, normalize_projective, random_full_rank, span_dim

F = PrimeField(1009)


def test_prime_field():
    assert F(-1) == 1008
    assert F(Fraction(1, 2)) * 2 % 1009 == 1
    assert F.inv(3) * 3 % 1009 == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ValueError):
        PrimeField(1001)


def test_rank_kernel_image_over_q():
    m = ExactMatrix(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    (k,) = m.kernel()
    assert m.apply(k) == [0, 0, 0]
    assert len(m.image()) == 2
    assert m.det() == 0
    assert len(m.left_kernel()) == 1


def test_det_and_solve():
    m = ExactMatrix(QQ, [[2, 1], [1, 3]])
    assert m.det() == 5
    x = m.solve([3, 5])
    assert m.apply(x) == [3, 5]
    assert ExactMatrix(QQ, [[1, 1], [1, 1]]).solve([1, 2]) is None


def test_rank_nullity_random():
    rng = random.Random(3)
    for _ in range(30):
        m = ExactMatrix.random(F, rng.randint(1, 7), rng.randint(1, 7), rng)
        ker = m.kernel()
        assert m.rank() + len(ker) == m.ncols
        assert all(not any(m.apply(v)) for v in ker)
        assert m.rank() == m.T.rank()


def test_matmul_and_identity():
    rng = random.Random(5)
    a = ExactMatrix.random(F, 3, 4, rng)
    assert ExactMatrix.identity(F, 3) @ a == a
    with pytest.raises(ValueError):
        a @ a


def test_full_rank_and_projective():
    rng = random.Random(1)
    assert random_full_rank(F, 3, 5, rng).rank() == 3
    assert span_dim(F, []) == 0
    assert normalize_projective(F, [0, 2, 4]) == (0, 1, 2)
    with pytest.raises(ValueError):
        normalize_projective(F, [0, 0])
    with pytest.raises(ValueError):
        ExactMatrix(F, [[1, 2], [3]])
