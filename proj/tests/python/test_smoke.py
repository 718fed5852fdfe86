"""Smoke tests for the pybind11 surface: each main operation is reachable
from Python and returns sane values. The deep numerics live in the C++
suites; these only guard the binding layer."""

import json
import math
import xml.etree.ElementTree as ET

import pytest

import su11kc


def test_spectrum_values():
    q = su11kc.QuantumNumbers(k=-1, n=0, gamma=0.5)
    p = su11kc.energy_of(q)
    assert p.energy == pytest.approx(math.sqrt(3) / 2, rel=1e-12)
    assert p.s == pytest.approx(su11kc.s_of(-1, 0.5), rel=1e-15)
    assert p.nu * p.xi == pytest.approx(0.5, rel=1e-12)
    assert su11kc.energy_of(su11kc.QuantumNumbers(-1, 1, 0.5)).energy == pytest.approx(
        0.965925826, abs=5e-10
    )


def test_domain_errors_cross_the_boundary():
    with pytest.raises(ValueError):
        su11kc.s_of(-1, 1.5)
    with pytest.raises(ValueError):
        su11kc.energy_of(su11kc.QuantumNumbers(0, 0, 0.5))
    with pytest.raises(ValueError):
        su11kc.make_spinor(su11kc.QuantumNumbers(1, 0, 0.5))


def test_verify_algebra_passes_and_perturbation_fails():
    report = su11kc.verify_algebra()
    assert report.passed
    assert len(report) == 8
    assert not su11kc.verify_algebra(perturb=True).passed


def test_operator_algebra_round_trip():
    sp = su11kc.build_generator(su11kc.Generator.SigmaPlus)
    sm = su11kc.build_generator(su11kc.Generator.SigmaMinus)
    s3 = su11kc.build_generator(su11kc.Generator.Sigma3)
    assert su11kc.commutator(sp, sm) == -(s3 + s3)
    assert su11kc.casimir_sigma().max_order <= 4


def test_states_and_ladder_action():
    s = su11kc.s_of(-1, 0.5)
    xi = 0.5 / s
    chi0 = su11kc.normalize(su11kc.basis_state(0, s, xi))
    chi1 = su11kc.normalize(su11kc.basis_state(1, s, xi))
    assert su11kc.norm(chi0) == pytest.approx(1.0, rel=1e-12)
    assert su11kc.inner_product(chi0, chi1) == pytest.approx(0.0, abs=1e-12)

    raised = su11kc.apply_diffop(
        su11kc.build_generator(su11kc.Generator.SigmaPlus), chi0, s, xi
    )
    overlap = su11kc.inner_product(chi1, raised)
    q_plus = su11kc.q_coeff(0, s, su11kc.LadderSign.Plus)
    assert q_plus == pytest.approx(math.sqrt(2 * s), rel=1e-14)
    assert overlap == pytest.approx(su11kc.LADDER_PHASE_PLUS * q_plus, rel=1e-10)


def test_spinor_ground_state():
    state = su11kc.make_spinor(su11kc.QuantumNumbers(-1, 0, 0.5))
    assert state.upper.is_zero
    assert state.lower(1.0) > 0.0
    values = state.lower.sample([0.5, 1.0, 2.0])
    assert all(v > 0 for v in values)


def test_special_functions():
    assert su11kc.kummer_m(0.0, 1.7, 3.2) == 1.0
    assert su11kc.kummer_m(-2.0, 3.0, 1.0) == pytest.approx(5.0 / 12.0, rel=1e-14)
    assert su11kc.kummer_coeffs(2, 3.0) == pytest.approx([1.0, -2 / 3, 1 / 12])
    assert su11kc.gamma_fn(5.0) == pytest.approx(24.0, rel=1e-13)
    nodes, weights = su11kc.gauss_laguerre(10, 0.0)
    assert len(nodes) == len(weights) == 10
    assert sum(w * x for w, x in zip(weights, nodes)) == pytest.approx(1.0, rel=1e-12)


def test_check_suite_reports():
    s = su11kc.s_of(-1, 0.5)
    report = su11kc.check_ladder(s, 0.5 / s, 3)
    report.merge(su11kc.check_eigen(s, 0.5, 3))
    report.merge(su11kc.check_dirac_system(su11kc.QuantumNumbers(-1, 1, 0.5)))
    assert report.passed
    entry = report.entries[0]
    assert {"check_name", "parameters", "measured_error", "tolerance", "passed"} <= set(
        entry
    )
    doc = json.loads(su11kc.report_json(report, {"gamma": 0.5, "k": -1}))
    assert doc["passed"] is True
    assert doc["parameters"]["k"] == -1


def test_diagram_svg_is_well_formed_xml():
    data = su11kc.level_diagram(0.5, 2, 3)
    assert all(not (lvl.n == 0 and lvl.k > 0) for lvl in data.levels)
    svg = su11kc.diagram_svg(data)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    levels = [
        el
        for el in root.iter()
        if el.get("class") == "level"
    ]
    assert len(levels) == len(data.levels)
    csv = su11kc.diagram_csv(data)
    assert csv.splitlines()[0] == "k,N,n,E_over_m,dashed"
