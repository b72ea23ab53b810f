import random
from fractions import Fraction
from itertools import combinations

import pytest

from shifted_symfun.interpolation import (ShiftVector, interpolation_basis,
                                          interpolation_polynomial)
from shifted_symfun.operators import (OperatorMatrix, _subset_coefficient,
                                      apply_difference_component,
                                      apply_difference_family, apply_raising,
                                      apply_sekiguchi_debiard, cutoff_phi,
                                      eigenvalue_poly, inhomogeneous_lift,
                                      operator_matrix)
from shifted_symfun.partitions import (dominance_leq, enumerate_upto,
                                       staircase)
from shifted_symfun.scalars import RationalFunction, UniPoly
from shifted_symfun.sympoly import SparsePoly, SymPoly, elementary

R = RationalFunction.gen("r")


def rand_sym(rng, n, d):
    terms = {}
    for lam in enumerate_upto(n, d):
        if rng.random() < 0.6:
            terms[lam] = Fraction(rng.randint(-4, 4))
    return SymPoly(n, terms)


def test_subset_coefficient_factorization():
    """d_I = (-1)^|I| * prod_{i not in I} (x_i + t) * phi_I, for every I."""
    for n in (1, 2, 3):
        t = SparsePoly.t_var(n)
        for size in range(n + 1):
            for rows in combinations(range(n), size):
                d_i = _subset_coefficient(rows, n, R)
                phi = cutoff_phi(rows, n, R).with_t()
                expected = phi * Fraction((-1) ** size)
                for i in range(n):
                    if i not in rows:
                        xi = SparsePoly.variable(n, i).with_t()
                        expected = expected * (xi + t)
                assert d_i == expected


def test_cutoff_phi_frozen_small():
    # n = 1: phi_() = 1, phi_(0,) = x
    assert cutoff_phi((), 1, R) == SparsePoly.const(1, Fraction(1))
    assert cutoff_phi((0,), 1, R) == SparsePoly.variable(1, 0)


def test_cutoff_vanishing_where_strip_breaks():
    rho = ShiftVector.staircase_multiple(3, R)
    for mu in enumerate_upto(3, 4):
        pt = rho.point(mu)
        for size in range(4):
            for rows in combinations(range(3), size):
                shifted = list(mu)
                for i in rows:
                    shifted[i] -= 1
                ok = all(shifted[i] >= shifted[i + 1] for i in range(2)) \
                    and shifted[-1] >= 0
                val = cutoff_phi(rows, 3, R).evaluate(pt)
                if not ok:
                    assert val == 0


def test_family_on_constants():
    """On 1 the family reduces to the empty-partition eigenvalue."""
    one = SymPoly.one(2)
    fam = apply_difference_family(one, R)
    want = eigenvalue_poly((0, 0), R, 2)  # (t + r)(t + 0)
    assert want == UniPoly.gen("t") ** 2 + UniPoly.gen("t") * R
    for p in range(3):
        c = want.coefficient(p)
        if c:
            assert fam[p] == one * c
        else:
            assert p not in fam


def test_eigenvalue_poly_frozen():
    e = eigenvalue_poly((1, 0), R, 2)
    t = UniPoly.gen("t")
    assert e == (t + R + 1) * t
    e3 = eigenvalue_poly((2, 1, 0), R, 3)
    ts = [Fraction(0), Fraction(1), Fraction(-1)]
    for tv in ts:
        want = (tv + 2 * R + 2) * (tv + R + 1) * tv
        assert e3(tv) == want


def test_interpolation_polynomials_are_eigenfunctions():
    rho = ShiftVector.staircase_multiple(2, R)
    for d in range(4):
        for lam, P in interpolation_basis(2, d, rho).items():
            fam = apply_difference_family(P, R)
            eig = eigenvalue_poly(lam, R, 2)
            for p in range(3):
                assert fam.get(p, SymPoly.zero(2)) == P * eig.coefficient(p)


def test_difference_component_identity():
    rng = random.Random(41)
    f = rand_sym(rng, 2, 3)
    assert apply_difference_component(f, 0, R) == f
    with pytest.raises(ValueError):
        apply_difference_component(f, 3, R)


def test_raising_creates_columns():
    for n in (2, 3):
        rho = ShiftVector.staircase_multiple(n, R)
        one = SymPoly.one(n)
        for k in range(1, n + 1):
            lam = (1,) * k + (0,) * (n - k)
            assert apply_raising(one, k, R) == \
                interpolation_polynomial(lam, rho)


def test_raising_top_component():
    rng = random.Random(42)
    for _ in range(8):
        n = rng.randint(2, 3)
        f = rand_sym(rng, n, 3)
        if f.is_zero():
            continue
        for k in range(1, n + 1):
            img = apply_raising(f, k, R)
            assert img.top_component() == (elementary(k, n) * f).top_component()
            assert img.degree() == f.degree() + k


def test_sekiguchi_triangular_with_eigenvalue_diagonal():
    t0 = Fraction(1)
    for n in (2, 3):
        mat = operator_matrix("sekiguchi", n, 3, R, t_value=t0)
        same_degree = lambda a, b: sum(a) == sum(b) and dominance_leq(a, b)
        assert mat.is_triangular(same_degree)
        for mu in mat.source:
            assert mat.entry(mu, mu) == eigenvalue_poly(mu, R, n)(t0)


def test_sekiguchi_on_random_input_matches_matrix():
    rng = random.Random(43)
    n, d = 2, 3
    mat = operator_matrix("sekiguchi", n, d, R, t_value=Fraction(1))
    f = rand_sym(rng, n, d)
    img = apply_sekiguchi_debiard(f, R, t_value=Fraction(1))
    want = SymPoly.zero(n)
    for j, mu in enumerate(mat.source):
        c = f.coefficient(mu)
        if c:
            for i, lam in enumerate(mat.target):
                e = mat.rows[i][j]
                if e:
                    want = want + SymPoly.basis(n, lam, Fraction(1)) * (e * c)
    assert img == want


def test_operator_matrix_algebra():
    n, d = 2, 2
    e1 = operator_matrix("raising", n, d, R, k=1)
    e1_up = operator_matrix("raising", n, d + 1, R, k=1)
    comp = e1_up @ e1
    assert comp.source == e1.source and comp.target == e1_up.target
    diff = comp - comp
    assert diff.is_zero()
    with pytest.raises(ValueError):
        _ = e1 @ e1  # bases do not chain


def test_inhomogeneous_lift_small():
    # in one box the lift of m_1 is exactly the degree-one interpolation poly
    rho = ShiftVector.staircase_multiple(2, R)
    f = SymPoly.basis(2, (1, 0))
    assert inhomogeneous_lift(f, R) == interpolation_polynomial((1, 0), rho)


def test_difference_family_never_raises_degree():
    rng = random.Random(44)
    for _ in range(10):
        n = rng.randint(1, 3)
        f = rand_sym(rng, n, 4)
        if f.is_zero():
            continue
        for g in apply_difference_family(f, R).values():
            assert g.degree() <= f.degree()
