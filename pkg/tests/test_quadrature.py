"""Tests for contour quadrature and principal values."""

import cmath
import math
import random

import numpy as np
import pytest

from cauchyjump import (
    Contour,
    Density,
    EndpointError,
    InputError,
    QuadratureRule,
    SingularityError,
    integrate,
    pv_cauchy,
    pv_unit,
)

TWO_PI_I = 2j * math.pi


def test_residue_of_inverse_tau():
    c = Contour.circle()
    res = integrate(c, lambda n: 1.0 / n.z, rule=QuadratureRule.trapezoid(64))
    assert abs(res.value - TWO_PI_I) < 1e-12
    assert res.error_estimate <= 1e-12


def test_analytic_integrand_vanishes():
    c = Contour.circle()
    res = integrate(c, lambda n: n.z)
    assert abs(res.value) < 1e-13


def test_segment_power_antiderivative():
    s = Contour.segment(-1.0, 1.0)
    res = integrate(s, lambda n: n.z ** 2)
    assert abs(res.value - 2.0 / 3.0) < 1e-12


def test_monomial_residues_on_closed_contour():
    c = Contour.circle()
    for n in range(-5, 6):
        res = integrate(c, lambda nodes, k=n: nodes.z ** k)
        want = TWO_PI_I if n == -1 else 0.0
        assert abs(res.value - want) < 1e-10, f"n={n}"


def test_polynomials_integrate_to_zero():
    c = Contour.ellipse(semi_axes=(2.0, 1.0))
    rng = random.Random(3301)
    for _ in range(6):
        coeffs = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(9)]

        def poly(nodes):
            acc = np.zeros_like(nodes.z)
            for a in reversed(coeffs):
                acc = acc * nodes.z + a
            return acc

        res = integrate(c, poly)
        assert abs(res.value) < 1e-10


def test_gauss_rule_handles_square_with_corners():
    sq = Contour.piecewise(
        [
            Contour.segment(1 - 1j, 1 + 1j),
            Contour.segment(1 + 1j, -1 + 1j),
            Contour.segment(-1 + 1j, -1 - 1j),
            Contour.segment(-1 - 1j, 1 - 1j),
        ]
    )
    res = integrate(sq, lambda n: 1.0 / n.z)
    assert abs(res.value - TWO_PI_I) < 1e-10


def test_trapezoid_weights_equal_on_closed_contour():
    rule = QuadratureRule.trapezoid(32)
    nodes = rule.build_nodes(Contour.circle())
    assert np.allclose(nodes.w, 1.0 / 32.0)
    assert np.all(nodes.w > 0)


def test_gauss_weights_positive_and_sum_to_one():
    rule = QuadratureRule.gauss(order=8, panels=4)
    nodes = rule.build_nodes(Contour.segment(0.0, 1.0))
    assert np.all(nodes.w > 0)
    assert abs(float(np.sum(nodes.w)) - 1.0) < 1e-13


def test_trapezoid_rejects_open_contour():
    with pytest.raises(InputError):
        QuadratureRule.trapezoid(16).build_nodes(Contour.segment(0.0, 1.0))


def test_rule_rejects_unknown_kind():
    with pytest.raises(InputError):
        QuadratureRule(kind="simpson")


def test_half_step_shift_avoids_parameter_at_all_doublings():
    c = Contour.circle()
    t0 = 0.25
    for n in (16, 32, 64, 128):
        nodes = QuadratureRule.trapezoid(n).build_nodes(c, half_step_from=t0)
        gap = np.min(np.abs((nodes.t - t0 + 0.5) % 1.0 - 0.5))
        assert gap >= 0.5 / n - 1e-15


def test_singularity_error_names_the_node():
    c = Contour.circle()

    def bad(nodes):
        vals = np.ones_like(nodes.z)
        vals[3] = np.nan
        return vals

    with pytest.raises(SingularityError) as exc:
        integrate(c, bad)
    assert "node 3" in str(exc.value)


def test_node_doubling_error_decay_for_analytic_density():
    c = Contour.circle()
    errs = []
    for n in (32, 64, 128):
        res = integrate(c, lambda nodes: 1.0 / (nodes.z - 0.9),
                        rule=QuadratureRule.trapezoid(n))
        errs.append(res.error_estimate)
    assert errs[0] / errs[1] >= 10.0
    assert errs[1] / errs[2] >= 10.0


def test_pv_unit_closed_is_exact():
    c = Contour.circle()
    for t0 in np.arange(16) / 16.0:
        res = pv_unit(c, float(t0))
        assert res.value == 1j * math.pi
        assert res.nodes_used == 0
        assert res.error_estimate == 0.0


def test_pv_unit_segment_symmetric_cases():
    assert abs(pv_unit(Contour.segment(-1.0, 1.0), 0.5).value) < 1e-14
    assert abs(pv_unit(Contour.segment(0.0, 2.0), 0.5).value) < 1e-14


def test_pv_unit_segment_asymmetric_matches_real_oracle():
    # PV of dx/(x - 1/2) over [-1, 1] is ln|1/2| - ln|3/2| = ln(1/3)
    res = pv_unit(Contour.segment(-1.0, 1.0), 0.75)
    assert abs(res.value - math.log(1.0 / 3.0)) < 1e-14


def test_pv_unit_vertical_segment():
    # PV over the upward segment [-i, i] at 0: i dy/(i y) has zero PV
    res = pv_unit(Contour.segment(-1j, 1j), 0.5)
    assert abs(res.value) < 1e-14


def test_pv_unit_branch_follows_travel_direction():
    # reversing travel flips which side the cut leaves from; values are
    # conjugate-negatives for a real segment
    fwd = pv_unit(Contour.segment(-1.0, 1.0), 0.75).value
    rev = pv_unit(Contour.segment(1.0, -1.0), 0.25).value
    assert abs(fwd + rev) < 1e-13


def test_pv_unit_endpoint_rejected():
    s = Contour.segment(-1.0, 1.0)
    with pytest.raises(EndpointError):
        pv_unit(s, 0.0)
    with pytest.raises(EndpointError):
        pv_unit(s, 1.0)


def test_pv_cauchy_of_unit_density_matches_pv_unit_exactly():
    c = Contour.circle()
    got = pv_cauchy(c, Density.constant(1.0), 0.125)
    assert got.value == pv_unit(c, 0.125).value

    s = Contour.segment(-1.0, 1.0)
    got_open = pv_cauchy(s, Density.constant(1.0, closed=False), 0.75)
    assert abs(got_open.value - pv_unit(s, 0.75).value) < 1e-15


def test_pv_cauchy_re_tau_residue_oracle():
    # Re tau = (tau + 1/tau)/2 on the unit circle; the bare principal
    # value at tau0 equals 2 pi i times (tau0 - 1/tau0)/4
    c = Contour.circle()
    d = Density.from_function(lambda tau: tau.real, c, name="re")
    at_one = pv_cauchy(c, d, 0.0)
    assert abs(at_one.value) < 1e-10
    at_i = pv_cauchy(c, d, 0.25)
    tau0 = 1j
    want = TWO_PI_I * (tau0 - 1.0 / tau0) / 4.0
    assert abs(want - (-math.pi)) < 1e-15
    assert abs(at_i.value - want) < 1e-10


def test_pv_cauchy_open_contour_sqrt_density():
    # phi(x) = sqrt(x) on [0, 1] at x0 = 1/4: the subtracted kernel is
    # 1/(sqrt(x) + 1/2), antiderivative 2 sqrt(x) - ln(sqrt(x) + 1/2),
    # so PV = 2 - ln(3) - [0 - ln(1/2)] + (1/2) ln 3 = 2 - ln 3 - ln 2
    #       + (1/2)(ln(3/4) - ln(1/4))  ... assembled below
    seg = Contour.segment(0.0, 1.0)
    d = Density.from_pullback(lambda t: np.sqrt(np.asarray(t, dtype=float)),
                              closed=False, name="sqrt")
    sub = 2.0 - math.log(1.5) + math.log(0.5)
    unit = math.log(1.0 - 0.25) - math.log(0.25)
    want = sub + 0.5 * unit
    got = pv_cauchy(seg, d, 0.25)
    assert abs(got.value - want) < 1e-6


def test_pv_cauchy_warns_on_declared_non_holder():
    c = Contour.circle()
    d = Density.from_pullback(
        lambda t: np.exp(2j * np.pi * np.asarray(t, dtype=float)),
        closed=True, declared_non_holder=True)
    res = pv_cauchy(c, d, 0.5)
    assert res.warning is not None


def test_integrate_reports_doubled_rule_gap():
    c = Contour.circle()
    res = integrate(c, lambda n: 1.0 / (n.z - 0.5), rule=QuadratureRule.trapezoid(16))
    assert res.error_estimate > 0
    assert res.nodes_used == 16
