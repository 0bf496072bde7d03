"""Tests for the density/function expression mini-language."""

import cmath
import math

import numpy as np
import pytest

from cauchyjump import InputError, compile_expression


def ev(src, value, analytic=False):
    return complex(compile_expression(src, analytic=analytic)(value))


def test_arithmetic_and_precedence():
    assert ev("1 + 2*3", 0.0) == 7.0
    assert ev("(1 + 2)*3", 0.0) == 9.0
    assert ev("2^3^2", 0.0) == 512.0  # right associative
    assert ev("-2^2", 0.0) == -4.0    # unary minus binds looser than power
    assert ev("6/4", 0.0) == 1.5


def test_variable_aliases_all_name_the_input():
    z = 0.3 + 0.4j
    for var in ("t", "tau", "z", "w"):
        assert ev(f"{var}^2", z) == z * z


def test_constants():
    assert ev("i", 0.0) == 1j
    assert abs(ev("pi", 0.0) - math.pi) == 0.0
    assert abs(ev("e", 0.0) - math.e) == 0.0
    assert ev("2*i*pi", 0.0) == 2j * math.pi


def test_double_star_power_alias():
    assert ev("z**3", 2.0) == 8.0


def test_functions():
    z = 0.6 - 0.2j
    assert ev("re(z)", z) == 0.6
    assert ev("im(z)", z) == -0.2
    assert ev("conj(z)", z) == z.conjugate()
    assert abs(ev("sqrt(z)", 4.0) - 2.0) < 1e-15


def test_rational_in_tau():
    f = compile_expression("1/(tau - 3)")
    assert abs(complex(f(1.0)) + 0.5) < 1e-15


def test_vectorized_evaluation_broadcasts():
    f = compile_expression("z^2 + 1")
    zs = np.array([0.0, 1.0j, 2.0])
    out = f(zs)
    assert out.shape == zs.shape
    assert np.allclose(out, zs * zs + 1.0)


def test_constant_expression_broadcasts_to_input_shape():
    f = compile_expression("3 + 0*i")
    out = f(np.zeros(5, dtype=complex))
    assert out.shape == (5,)
    assert np.allclose(out, 3.0)


def test_scientific_notation_numbers():
    assert ev("1e-3 + 2.5E2", 0.0) == 0.001 + 250.0


def test_unknown_name_rejected_with_position():
    with pytest.raises(InputError) as exc:
        compile_expression("2*foo + 1")
    assert "foo" in str(exc.value)


def test_unexpected_character_position_reported():
    with pytest.raises(InputError) as exc:
        compile_expression("1 + $")
    assert "position 4" in str(exc.value)


def test_unbalanced_parens_rejected():
    with pytest.raises(InputError):
        compile_expression("(1 + 2")


def test_trailing_garbage_rejected():
    with pytest.raises(InputError):
        compile_expression("1 + 2 )")


def test_analytic_mode_rejects_non_analytic_functions():
    for src in ("re(z)", "im(z) + 1", "2*conj(z)"):
        with pytest.raises(InputError) as exc:
            compile_expression(src, analytic=True)
        assert "holomorphic" in str(exc.value)
    # sqrt and arithmetic stay available
    compile_expression("sqrt(z) + z^2", analytic=True)


def test_division_by_zero_yields_non_finite_not_crash():
    f = compile_expression("1/z")
    out = f(np.array([0.0 + 0.0j, 1.0 + 0.0j]))
    assert not np.isfinite(out[0].real) or not np.isfinite(out[0].imag) or abs(out[0]) > 1e300
    assert abs(out[1] - 1.0) < 1e-15


def test_whitespace_insensitive():
    assert ev("  1+ 2 *  z ", 2.0) == ev("1+2*z", 2.0)


def test_nested_function_calls():
    z = 0.25
    assert abs(ev("sqrt(sqrt(z))", z) - z ** 0.25) < 1e-15


def test_unary_plus_and_chained_signs():
    assert ev("+5", 0.0) == 5.0
    assert ev("-(-3)", 0.0) == 3.0
