import random

import pytest

from bpuverify.intlinalg import (
    IntMatrix,
    cokernel_invariants,
    element_order_in_cokernel,
    hermite_normal_form,
    integer_kernel,
    nullspace_mod_p,
    rank_mod_p,
    smith_normal_form,
    solve_integer,
)


def test_snf_examples():
    assert smith_normal_form(IntMatrix([[2, 0], [0, 3]])).invariant_factors == (1, 6)
    assert smith_normal_form(IntMatrix([[0, 0], [0, 0]])).invariant_factors == (0, 0)
    assert smith_normal_form(IntMatrix([[8, 3]])).invariant_factors == (1,)


def test_kernel_examples():
    assert integer_kernel(IntMatrix([[8, 3]])) == [(3, -8)]
    assert integer_kernel(IntMatrix.identity(3)) == []
    assert len(integer_kernel(IntMatrix([[0, 0]]))) == 2


def test_cokernel_examples():
    assert cokernel_invariants(IntMatrix([[4]])) == [4]
    assert cokernel_invariants(IntMatrix.identity(3)) == [1, 1, 1]
    assert cokernel_invariants(IntMatrix([[2, 0], [0, 0]])) == [2, 0]


def test_rank_mod_p_examples():
    a = IntMatrix([[8, 3]])
    assert rank_mod_p(a, 2) == 1
    assert rank_mod_p(a, 3) == 1
    assert rank_mod_p(IntMatrix.zero(3, 2), 5) == 0
    with pytest.raises(ValueError):
        rank_mod_p(a, 4)
    with pytest.raises(ValueError):
        rank_mod_p(a, 1)


def test_element_order_examples():
    assert element_order_in_cokernel(IntMatrix([[4]]), (1,)) == 4
    assert element_order_in_cokernel(IntMatrix([[1, 0], [0, 1]]), (3, 5)) == 1
    assert element_order_in_cokernel(IntMatrix([[0]]), (1,)) is None
    with pytest.raises(ValueError):
        element_order_in_cokernel(IntMatrix([[4]]), (1, 2))


def _random_matrix(rng, max_dim=5, span=9):
    m, n = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return IntMatrix([[rng.randint(-span, span) for _ in range(n)] for _ in range(m)])


def test_snf_certificates_random():
    rng = random.Random(101)
    for _ in range(120):
        a = _random_matrix(rng)
        snf = smith_normal_form(a)
        assert (snf.u @ a) @ snf.v == snf.d
        assert abs(snf.u.determinant()) == 1
        assert abs(snf.v.determinant()) == 1
        facs = snf.invariant_factors
        for x, y in zip(facs, facs[1:]):
            assert x >= 0 and y >= 0
            if x:
                assert y % x == 0
            else:
                assert y == 0


def test_kernel_is_saturated_and_exact_random():
    rng = random.Random(102)
    for _ in range(100):
        a = _random_matrix(rng)
        kern = integer_kernel(a)
        for v in kern:
            assert all(x == 0 for x in a.apply(v))
        snf = smith_normal_form(a)
        assert len(kern) + snf.rank == a.cols
        if kern:
            stack = smith_normal_form(IntMatrix(kern))
            assert stack.rank == len(kern)
            assert all(f == 1 for f in stack.invariant_factors[: stack.rank])


def test_rank_mod_p_equals_factors_coprime_to_p():
    rng = random.Random(103)
    for _ in range(60):
        a = _random_matrix(rng, max_dim=4)
        snf = smith_normal_form(a)
        for p in (2, 3, 5):
            expected = sum(1 for f in snf.invariant_factors if f != 0 and f % p != 0)
            assert rank_mod_p(a, p) == expected


def test_nullspace_mod_p():
    rng = random.Random(104)
    for _ in range(40):
        a = _random_matrix(rng, max_dim=4)
        for p in (2, 3):
            basis = nullspace_mod_p(a, p)
            assert len(basis) == a.cols - rank_mod_p(a, p)
            for v in basis:
                assert all(x % p == 0 for x in a.apply(v))


def test_hermite_transform_contract():
    rng = random.Random(105)
    for _ in range(60):
        a = _random_matrix(rng)
        h, u = hermite_normal_form(a)
        assert u @ a == h
        assert abs(u.determinant()) == 1
        lead_cols = []
        for row in h.entries:
            nz = [j for j, x in enumerate(row) if x]
            if nz:
                assert row[nz[0]] > 0
                lead_cols.append(nz[0])
        assert lead_cols == sorted(lead_cols)


def test_solve_integer_round_trip():
    rng = random.Random(106)
    for _ in range(60):
        dim = rng.randint(1, 5)
        k = rng.randint(1, 4)
        cols = [[rng.randint(-6, 6) for _ in range(dim)] for _ in range(k)]
        coeffs = [rng.randint(-5, 5) for _ in range(k)]
        target = [sum(c * col[i] for c, col in zip(coeffs, cols)) for i in range(dim)]
        sol = solve_integer(cols, target)
        assert sol is not None
        assert [sum(s * col[i] for s, col in zip(sol, cols)) for i in range(dim)] == target


def test_solve_integer_detects_non_members():
    assert solve_integer([[2, 0], [0, 2]], (1, 0)) is None
    assert solve_integer([[2, 4]], (3, 6)) is None
    assert solve_integer([], (0, 0)) == ()
    assert solve_integer([], (1, 0)) is None


def test_determinant_bareiss():
    assert IntMatrix([[2, 0], [0, 3]]).determinant() == 6
    assert IntMatrix([[1, 2], [3, 4]]).determinant() == -2
    assert IntMatrix([[0, 1], [1, 0]]).determinant() == -1
    rng = random.Random(107)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = IntMatrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
        # expansion by minors as the oracle
        def minor_det(rows):
            if len(rows) == 1:
                return rows[0][0]
            total = 0
            for j in range(len(rows)):
                sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
                term = rows[0][j] * minor_det(sub)
                total += term if j % 2 == 0 else -term
            return total

        assert a.determinant() == minor_det([list(r) for r in a.entries])
