"""Exact solving, valuation-orthogonal bases, scale-constrained systems."""

import random

import pytest

from ultraconv.field import Field
from ultraconv.linalg import (
    FREE,
    INTEGRAL,
    DimensionError,
    LinearSolver,
    Matrix,
    Vector,
    constrained_kernel,
    mixed_solve,
    orthogonalize,
    solve,
)


def _vec(f, *ints):
    return Vector.from_ints(f, list(ints))


# ---------------------------------------------------------------------------
# plain linear algebra

def test_solver_particular_and_kernel():
    f = Field.padic(2)
    A = Matrix(f, [[f.from_int(1), f.from_int(2), f.from_int(1)],
                   [f.from_int(0), f.from_int(1), f.from_int(3)]])
    b = _vec(f, 5, 4)
    sol = solve(A, b)
    assert sol is not None
    part, kernel = sol
    assert A.mul_vec(part) == b
    assert len(kernel) == 1
    for k in kernel:
        assert A.mul_vec(k).is_zero
    # a shifted target stays solvable, an inconsistent system does not
    A2 = Matrix(f, [[f.one, f.one], [f.one, f.one]])
    assert solve(A2, _vec(f, 1, 2)) is None


def test_solver_rejects_dimension_mismatch():
    f = Field.padic(3)
    A = Matrix(f, [[f.one, f.zero]])
    with pytest.raises(DimensionError):
        LinearSolver(A).solve(_vec(f, 1, 2))


def test_matrix_from_cols_roundtrip():
    f = Field.padic(5)
    cols = [_vec(f, 1, 0), _vec(f, 3, 3)]
    M = Matrix.from_cols(f, cols)
    assert M.nrows == 2 and M.ncols == 2
    assert M.col(1) == cols[1]


# ---------------------------------------------------------------------------
# orthogonal bases

def test_orthogonalize_frozen_example():
    f = Field.padic(3)
    ob = orthogonalize([_vec(f, 1, 0), _vec(f, 3, 3)])
    rendered = [[e.render() for e in v.coords] for v in ob.vectors]
    assert rendered == [["1", "0"], ["0", "3"]]
    assert ob.pivot_indices == (0, 1)
    assert ob.gammas == (0, 1)


def test_orthogonal_valuation_identity_frozen():
    # val(c1*u1 + c2*u2) must equal min(val(c1)+0, val(c2)+1) for the basis
    # above, including ties
    f = Field.padic(3)
    ob = orthogonalize([_vec(f, 1, 0), _vec(f, 3, 3)])
    cases = [("1", "1"), ("3", "1"), ("1/3", "9"), ("27", "1/3"), ("3", "3"), ("0", "5")]
    for s1, s2 in cases:
        c1, c2 = f.parse(s1), f.parse(s2)
        combo = ob.vectors[0].scale(c1) + ob.vectors[1].scale(c2)
        expected = min(c1.val() + ob.gammas[0], c2.val() + ob.gammas[1])
        assert combo.val() == expected


def test_orthogonalize_preserves_integral_span():
    f = Field.padic(2)
    gens = [_vec(f, 2, 4, 0), _vec(f, 1, 3, 1), _vec(f, 0, 2, 2)]
    ob = orthogonalize(gens)
    for g in gens:
        assert ob.spans_integrally(g)
    for u in ob.vectors:
        cs = LinearSolver(Matrix.from_cols(f, list(gens))).solve(u)
        assert cs is not None


def test_gamma_multiset_stable_under_recombination():
    """Unimodular integral recombinations present the same module, so the
    sorted gamma weights cannot move."""
    f = Field.padic(5)
    gens = [_vec(f, 5, 0, 10), _vec(f, 1, 2, 3), _vec(f, 0, 25, 5)]
    base = orthogonalize(gens).gamma_multiset()
    rng = random.Random(7)
    for _ in range(10):
        n = len(gens)
        U = [[f.from_int(1 if i == j else 0) for j in range(n)] for i in range(n)]
        # random elementary row operations keep the matrix O-unimodular
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            c = f.from_int(rng.randint(-4, 4))
            for k in range(n):
                U[i][k] = U[i][k] + c * U[j][k]
        new_gens = []
        for i in range(n):
            acc = Vector.zero(f, 3)
            for j in range(n):
                acc = acc + gens[j].scale(U[i][j])
            new_gens.append(acc)
        assert orthogonalize(new_gens).gamma_multiset() == base


def test_orthobasis_reduce_and_coefficients():
    f = Field.padic(2)
    ob = orthogonalize([_vec(f, 1, 0), _vec(f, 0, 4)])
    x = _vec(f, 3, 8)
    cs = ob.coefficients(x)
    assert cs is not None
    rebuilt = Vector.zero(f, 2)
    for c, u in zip(cs, ob.vectors):
        rebuilt = rebuilt + u.scale(c)
    assert rebuilt == x
    assert ob.coefficients(_vec(f, 0, 0)) == [f.zero, f.zero]


# ---------------------------------------------------------------------------
# scale-constrained systems

def test_constrained_kernel_frozen():
    f = Field.padic(2)
    M = Matrix(f, [[f.from_int(1), f.from_int(-2)]])
    free, integral = constrained_kernel(M, [INTEGRAL, INTEGRAL])
    assert free == []
    assert [[e.render() for e in v.coords] for v in integral] == [["2", "1"]]


def test_constrained_kernel_free_columns():
    f = Field.padic(2)
    M = Matrix(f, [[f.from_int(1), f.from_int(-2)]])
    free, integral = constrained_kernel(M, [FREE, FREE])
    vecs = free + integral
    assert len(free) == 1 and not integral
    for v in vecs:
        assert M.mul_vec(v).is_zero


def test_constrained_kernel_solutions_satisfy_scales():
    f = Field.padic(3)
    M = Matrix(f, [[f.from_int(3), f.from_int(1), f.from_int(0)],
                   [f.from_int(0), f.from_int(3), f.from_int(9)]])
    scales = [INTEGRAL, FREE, INTEGRAL]
    free, integral = constrained_kernel(M, scales)
    for v in free + integral:
        assert M.mul_vec(v).is_zero
    for v in integral:
        for c, s in zip(v.coords, scales):
            if s == INTEGRAL and not c.is_zero:
                assert c.val() >= 0


def test_mixed_solve_frozen():
    f5 = Field.padic(5)
    I2 = Matrix(f5, [[f5.one, f5.zero], [f5.zero, f5.one]])
    t = Vector(f5, [f5.fraction(1, 2), f5.fraction(1, 3)])
    w = mixed_solve(I2, [INTEGRAL, INTEGRAL], t)
    assert w is not None
    assert [e.render() for e in w.coords] == ["1/2", "1/3"]

    f2 = Field.padic(2)
    I2b = Matrix(f2, [[f2.one, f2.zero], [f2.zero, f2.one]])
    t2 = Vector(f2, [f2.fraction(1, 2), f2.fraction(1, 3)])
    assert mixed_solve(I2b, [INTEGRAL, INTEGRAL], t2) is None


def test_mixed_solve_witness_respects_scales():
    f = Field.padic(2)
    cols = [_vec(f, 2, 0), _vec(f, 1, 1), _vec(f, 0, 4)]
    M = Matrix.from_cols(f, cols)
    scales = [FREE, INTEGRAL, INTEGRAL]
    t = _vec(f, 7, 3)
    w = mixed_solve(M, scales, t)
    assert w is not None
    assert M.mul_vec(w) == t
    for c, s in zip(w.coords, scales):
        if s == INTEGRAL and not c.is_zero:
            assert c.val() >= 0


# ---------------------------------------------------------------------------
# randomized law checks via the verify suite

@pytest.mark.parametrize("sel,trials", [
    ("padic:2", 25), ("padic:5", 15), ("ratfunc:0", 8), ("ratfunc:3", 8),
])
def test_linalg_property_suite(sel, trials):
    from ultraconv.verify import run_suite
    results = run_suite("linalg", Field.from_selector(sel), seed=414213, trials=trials)
    for r in results:
        assert r.ok, f"{r.name}: {r.failures}"
