import pytest
import sympy
from hypothesis import given, strategies as st

from oracles import colored_partitions, schur_oracle, two_tower_series
from walg.characters import char_T
from walg.coeffs import rank
from walg.errors import DimensionMismatch, NonDominant
from walg.fock import component, monomial_degree, poly_add_to, poly_mul, var_index
from walg.rootsys import build_algebra
from walg.screening import (
    _ad_power,
    _vanishes,
    commrel_proportionality_check,
    kernel_dims,
    q_matrix,
    q_power,
    schur_coeffs,
    screening_derivation,
    serre_check,
    serre_pairs,
    serre_relation_vanishes,
)

A1, A2, B2, G2 = (build_algebra(x) for x in ("A1", "A2", "B2", "G2"))


def p(n: int) -> int:
    return colored_partitions(1, n) if n >= 0 else 0


def test_schur_matches_exponential_oracle():
    N = 7
    xs, oracle = schur_oracle(N)
    ours = schur_coeffs(0, N)
    for k in range(N + 1):
        expr = sympy.Integer(0)
        for mono, c in ours[-k].items():
            term = sympy.Rational(c.numerator, c.denominator)
            for v, e in mono:
                term *= xs[v] ** e
            expr += term
        assert sympy.expand(expr - oracle[k]) == 0


def test_schur_is_homogeneous_and_colored():
    for k, poly in schur_coeffs(1, 6, r=2).items():
        for mono in poly:
            assert monomial_degree(mono, 2) == -k
            assert all(v % 2 == 1 for v, _ in mono)


def test_q_matrix_examples():
    assert q_matrix(A1, 0, 0, 1).to_dense() == [[2]]
    # basis (x_{-1}^2, x_{-2}); Q x_{-2} = 2 S_{-1} = 2 x_{-1}
    assert q_matrix(A1, 0, 0, 2).to_dense() == [[4, 2]]
    assert q_matrix(A1, 0, 1, 1).shape == (0, 1)
    assert q_matrix(A1, 0, 1, 2).to_dense() == [[0, 2]]
    # A2: Q_1 sends x^2_{-1} to (alpha_1|alpha_2) = -1
    x2 = var_index(1, -1, 2)
    assert screening_derivation(A2, 0, 0)({((x2, 1),): 1}) == {(): -1}


@given(st.sampled_from(["A2", "B2", "G2"]), st.integers(0, 1), st.integers(0, 2), st.integers(0, 5))
def test_q_is_a_derivation(label, i, mu_i, d):
    g = build_algebra(label)
    Q = screening_derivation(g, i, mu_i)
    comp_a, comp_b = component(g.rank, d), component(g.rank, 2)
    for a in comp_a.basis[:4]:
        for b in comp_b.basis[:3]:
            fa, fb = {a: 1}, {b: 1}
            lhs = Q(poly_mul(fa, fb))
            rhs = poly_add_to(poly_mul(Q(fa), fb), poly_mul(fa, Q(fb)))
            assert lhs == rhs
            # homogeneity: lowers degree by mu_i + 1
            assert all(monomial_degree(m, g.rank) == d + 2 - mu_i - 1 for m in lhs)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_serre_routes_agree(label):
    g = build_algebra(label)
    for mu in [(0, 0), (1, 0), (0, 1)]:
        for i, j in serre_pairs(g):
            a = serre_relation_vanishes(g, i, j, mu, 5, "derivation")
            b = serre_relation_vanishes(g, i, j, mu, 5, "matrix")
            assert a and b


def test_serre_negative_control():
    # one step short of the Serre exponent the adjoint power is nonzero
    for g in (A2, B2, G2):
        for i, j in serre_pairs(g):
            m = -g.cartan[i][j]
            dv = _ad_power(screening_derivation(g, i, 0), screening_derivation(g, j, 0), m)
            assert not _vanishes(dv, 6)


def test_serre_check_errors():
    with pytest.raises(NonDominant):
        serre_check(A2, (-1, 0), 3)
    with pytest.raises(DimensionMismatch):
        serre_check(A2, (0,), 3)
    with pytest.raises(ValueError):
        serre_relation_vanishes(A2, 0, 1, (0, 0), 3, "bogus")


@pytest.mark.parametrize("mu", [0, 1, 3])
def test_a1_lambda_zero_kernel(mu):
    assert kernel_dims(A1, (0,), (mu,), 12) == [p(d) - p(d - mu - 1) for d in range(13)]


@pytest.mark.parametrize("lam,mu", [(1, 0), (1, 1), (2, 1)])
def test_a1_power_is_surjective(lam, mu):
    shift = (lam + 1) * (mu + 1)
    for d in range(shift, 11):
        m = q_power(A1, 0, mu, lam + 1, d)
        assert rank(m) == m.shape[0] == p(d - shift)
    assert kernel_dims(A1, (lam,), (mu,), 10) == [p(d) - p(d - shift) for d in range(11)]


def test_a2_two_towers():
    assert kernel_dims(A2, (0, 0), (0, 0), 8) == two_tower_series(8)


@pytest.mark.parametrize("label,lam,mu,N", [("B2", (1, 0), (0, 1), 6), ("G2", (0, 0), (1, 0), 6), ("A2", (1, 1), (1, 0), 6)])
def test_kernel_matches_character(label, lam, mu, N):
    g = build_algebra(label)
    assert kernel_dims(g, lam, mu, N) == list(char_T(g, lam, mu, N).series)


@pytest.mark.parametrize("g", [A2, B2, G2], ids=["A2", "B2", "G2"])
def test_commrel_proportionality(g):
    for mu in [(0, 0), (1, 2)]:
        for i, j in serre_pairs(g):
            for m in range(1, 1 - g.cartan[i][j] + 1):
                assert commrel_proportionality_check(g, i, j, mu, m, 6)


def test_commrel_argument_errors():
    with pytest.raises(ValueError):
        commrel_proportionality_check(A2, 0, 0, (0, 0), 1, 3)
    with pytest.raises(ValueError):
        commrel_proportionality_check(A2, 0, 1, (0, 0), 3, 3)


def test_parallel_matches_serial(monkeypatch):
    monkeypatch.setenv("WALG_THREADS", "1")
    serial = kernel_dims(B2, (1, 1), (0, 1), 7)
    monkeypatch.setenv("WALG_THREADS", "3")
    assert kernel_dims(B2, (1, 1), (0, 1), 7) == serial
