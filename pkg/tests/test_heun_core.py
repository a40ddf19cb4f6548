import math

import numpy as np
import pytest

from heun_su11.errors import ComplexExponents, DegenerateSingularity, FuchsianViolation
from heun_su11.heun_core import (
    CanonicalCoefficients,
    canonical_action,
    canonical_coefficients,
    degree_decomposition,
    degree_decomposition_check,
    indicial_exponents_at_infinity,
    indicial_exponents_at_zero,
    lame_parameters,
    make_parameters,
    parameters_from_coefficients,
    second_order_action,
)
from heun_su11.monomials import MonomialSum

EXAMPLE1 = dict(gamma=0.5, delta=-0.5, alpha=-1.0, beta=-0.5, a=2.0, q=0.0)
EXAMPLE2 = dict(gamma=1.5, delta=-0.5, alpha=-0.5, beta=0.0, a=2.0, q=0.0)


def second_coefficients_by_expansion(params):
    """Independent route to (a3, a4, a5): expand
    gamma (z-1)(z-a) + delta z (z-a) + epsilon z (z-1)."""
    g, d, e, a = params.gamma, params.delta, params.epsilon, params.a
    a3 = g + d + e
    a4 = -(g * (a + 1.0) + d * a + e)
    a5 = g * a
    return a3, a4, a5


def random_parameters(rng):
    gamma = float(rng.uniform(-2.0, 2.0))
    delta = float(rng.uniform(-2.0, 2.0))
    alpha = float(rng.uniform(-2.0, 2.0))
    beta = float(rng.uniform(-2.0, 2.0))
    a = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 3.0))
    while a in (0.0, 1.0):
        a = float(rng.uniform(1.1, 3.0))
    q = float(rng.uniform(-2.0, 2.0))
    return make_parameters(gamma, delta, alpha, beta, a, q)


def test_epsilon_filled_from_exponent_balance():
    p = make_parameters(**EXAMPLE1)
    assert p.epsilon == -0.5
    p = make_parameters(**EXAMPLE2)
    assert p.epsilon == -0.5


def test_supplied_epsilon_must_be_consistent():
    p = make_parameters(epsilon=-0.5 + 1e-10, **EXAMPLE1)
    assert p.epsilon == -0.5  # recomputed, not the supplied value
    with pytest.raises(FuchsianViolation):
        make_parameters(epsilon=-0.5 + 1e-6, **EXAMPLE1)


def test_alpha_beta_stored_sorted():
    p = make_parameters(gamma=0.5, delta=-0.5, alpha=-0.5, beta=-1.0, a=2.0, q=0.0)
    assert (p.alpha, p.beta) == (-1.0, -0.5)


def test_degenerate_singularity_rejected():
    with pytest.raises(DegenerateSingularity):
        make_parameters(gamma=1.0, delta=1.0, alpha=1.0, beta=1.0, a=0.0, q=0.0)
    with pytest.raises(DegenerateSingularity):
        make_parameters(gamma=1.0, delta=1.0, alpha=1.0, beta=1.0, a=1.0, q=0.0)


def test_canonical_coefficients_example1():
    c = canonical_coefficients(make_parameters(**EXAMPLE1))
    assert c.as_tuple() == (1.0, -3.0, 2.0, -0.5, 0.0, 1.0, 0.5, 0.0)


def test_canonical_coefficients_lame_preset():
    c = canonical_coefficients(lame_parameters(0.0, 2.0, 1.0))
    assert (c.a3, c.a4, c.a5, c.a6, c.a7) == (1.5, -3.0, 1.0, 0.0, -1.0)


def test_accessory_enters_only_a7():
    p0 = make_parameters(**EXAMPLE1)
    p1 = p0.with_accessory(2.5)
    c0, c1 = canonical_coefficients(p0), canonical_coefficients(p1)
    assert c1.a7 == -2.5
    assert c0.as_tuple()[:7] == c1.as_tuple()[:7]


def test_first_order_coefficients_match_expansion_oracle():
    rng = np.random.default_rng(42)
    for _ in range(50):
        p = random_parameters(rng)
        c = canonical_coefficients(p)
        a3, a4, a5 = second_coefficients_by_expansion(p)
        assert c.a3 == pytest.approx(a3, abs=1e-12)
        assert c.a4 == pytest.approx(a4, abs=1e-12)
        assert c.a5 == pytest.approx(a5, abs=1e-12)
        assert c.a0 == 1.0


def test_lame_parameters_exponents():
    p = lame_parameters(0.0, 2.0, 1.0)
    assert (p.gamma, p.delta, p.epsilon) == (0.5, 0.5, 0.5)
    assert (p.alpha, p.beta) == (0.0, 0.5)
    # rho and -1-rho give the same exponent product
    p2 = lame_parameters(-1.0, 2.0, 1.0)
    assert (p2.alpha, p2.beta) == (0.0, 0.5)


def test_lame_parameters_complex_roots_rejected():
    with pytest.raises(ComplexExponents):
        lame_parameters(1.0, 2.0, 0.0)


def test_indicial_exponents_at_zero():
    p = make_parameters(**EXAMPLE1)
    roots = indicial_exponents_at_zero(canonical_coefficients(p))
    assert roots == (0.0, 1.0 - p.gamma)


def test_indicial_exponents_at_infinity():
    rng = np.random.default_rng(7)
    for _ in range(20):
        p = random_parameters(rng)
        lo, hi = indicial_exponents_at_infinity(canonical_coefficients(p))
        assert lo == pytest.approx(p.alpha, abs=1e-10)
        assert hi == pytest.approx(p.beta, abs=1e-10)


def test_canonical_action_against_pointwise_evaluation():
    # Oracle: evaluate f1 y'' + f2 y' + f3 y numerically from the parameter
    # definition and compare with the exponent-shift action.
    rng = np.random.default_rng(99)
    for _ in range(30):
        p = random_parameters(rng)
        c = canonical_coefficients(p)
        exps = rng.integers(-3, 4, size=4) * 0.5
        weights = rng.standard_normal(4)
        y = MonomialSum.from_terms(zip(exps, weights))
        z = float(rng.uniform(0.3, 2.5))
        f1 = z**3 + c.a1 * z**2 + c.a2 * z
        f2 = c.a3 * z**2 + c.a4 * z + c.a5
        f3 = c.a6 * z + c.a7
        direct = (
            f1 * y.derivative().derivative().evaluate(z)
            + f2 * y.derivative().evaluate(z)
            + f3 * y.evaluate(z)
        )
        via_action = canonical_action(c, y).evaluate(z)
        assert math.isclose(direct, via_action, rel_tol=1e-11, abs_tol=1e-11)


def test_second_order_action_parts_sum_to_action():
    p = make_parameters(**EXAMPLE2)
    c = canonical_coefficients(p)
    y = MonomialSum.from_terms([(-0.5, 1.0), (0.5, -2.0), (1.0, 0.3)])
    parts = second_order_action(c, y)
    total = parts[0] + parts[1] + parts[2]
    assert total.max_abs_diff(canonical_action(c, y)) <= 1e-13


def test_degree_decomposition_check_example1():
    p = make_parameters(**EXAMPLE1)
    assert degree_decomposition_check(p, 0.0, [0.0, 1.0, 2.0]) <= 1e-12


def test_degree_decomposition_check_lame_large_j():
    p = lame_parameters(0.0, 2.0, 1.0)
    assert degree_decomposition_check(p, 5.5, [-2.0, -1.0, 0.0, 1.0, 2.0]) <= 1e-12


def test_degree_decomposition_j_independence():
    rng = np.random.default_rng(5)
    for _ in range(25):
        p = random_parameters(rng)
        j = float(rng.uniform(-4.0, 4.0))
        exps = [float(x) for x in rng.integers(-4, 5, size=5) * 0.5]
        assert degree_decomposition_check(p, j, exps) <= 1e-12


def test_degree_decomposition_diagonal_shape():
    p = make_parameters(**EXAMPLE1)
    split = degree_decomposition(p, 1.0)
    c = canonical_coefficients(p)
    assert split.raising_part == (c.a0, c.a3, c.a6)
    assert split.lowering_part == (c.a2, c.a5, 0.0)
    f2, f1, f0 = split.diagonal_quadratic
    assert f2 == c.a1
    assert f1 == c.a1 + c.a4
    assert f0 == c.a4 + c.a7


def test_parameters_from_coefficients_roundtrip():
    rng = np.random.default_rng(13)
    for _ in range(25):
        p = random_parameters(rng)
        back = parameters_from_coefficients(canonical_coefficients(p))
        for field in ("gamma", "delta", "epsilon", "alpha", "beta", "a", "q"):
            assert getattr(back, field) == pytest.approx(getattr(p, field), abs=1e-9)


def test_parameters_from_coefficients_rejects_degenerate():
    c = CanonicalCoefficients(1.0, -1.0, 0.0, 1.0, -1.0, 0.0, 0.0, 0.0)
    with pytest.raises(DegenerateSingularity):
        parameters_from_coefficients(c)


def test_coefficients_json_roundtrip():
    c = canonical_coefficients(make_parameters(**EXAMPLE2))
    assert CanonicalCoefficients.from_json_dict(c.to_json_dict()) == c
