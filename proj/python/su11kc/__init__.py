"""su(1,1) ladder-operator solution of the relativistic Kepler-Coulomb problem.

The heavy lifting lives in the C++ extension ``su11kc._core``: exact symbolic
operator algebra, bound-state spectrum, quasi-polynomial radial states and
the verification harness.
"""

from su11kc._core import (  # noqa: F401
    Component,
    DiagramArrow,
    DiagramData,
    DiagramLevel,
    DiffOp,
    Generator,
    LadderSign,
    LADDER_PHASE_MINUS,
    LADDER_PHASE_PLUS,
    QuantumNumbers,
    QuasiPolynomial,
    SpectralParams,
    SpinorState,
    VerificationReport,
    __version__,
    apply_diffop,
    basis_state,
    build_generator,
    casimir_sigma,
    check_b_equivalence,
    check_dirac_system,
    check_eigen,
    check_hermiticity,
    check_ladder,
    commutator,
    component_match_check,
    compose,
    diagram_csv,
    diagram_svg,
    energy_of,
    gamma_fn,
    gauss_laguerre,
    inner_product,
    kummer_coeffs,
    kummer_m,
    level_diagram,
    log_gamma,
    make_spinor,
    nonrel_limit_check,
    norm,
    normalize,
    physical_component,
    q_coeff,
    report_json,
    s_of,
    state_exists,
    verify_algebra,
)
