from rumin_poisson.linalg import in_span, nullspace, rank, solve_least, solve_square
from rumin_poisson.scalars import I_UNIT, ONE, ZERO, Scalar


def test_rank_and_nullspace():
    rows = [{0: ONE, 1: Scalar(2)}, {0: Scalar(2), 1: Scalar(4)}, {2: I_UNIT}]
    assert rank(rows) == 2
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    v = basis[0]
    for r in rows:
        assert sum((c * v.get(k, ZERO) for k, c in r.items()), ZERO) == ZERO


def test_solve_square_inverse():
    M = [[ONE, I_UNIT], [Scalar(2), ONE]]
    inv = solve_square(M)
    for i in range(2):
        for j in range(2):
            entry = sum((M[i][k] * inv[k][j] for k in range(2)), ZERO)
            assert entry == (ONE if i == j else ZERO)


def test_solve_least():
    cols = [{0: ONE}, {1: ONE}]
    assert solve_least(cols, {0: Scalar(3), 1: I_UNIT}) == [Scalar(3), I_UNIT]
    assert not in_span(cols, {2: ONE})
