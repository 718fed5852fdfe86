#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "su11kc/cli.hpp"
#include "su11kc/generators.hpp"
#include "su11kc/ladder.hpp"
#include "su11kc/quasi_polynomial.hpp"
#include "su11kc/serialize.hpp"
#include "su11kc/special_functions.hpp"
#include "su11kc/spectrum.hpp"
#include "su11kc/states.hpp"

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace su11kc;

namespace {

std::vector<double> to_double(const std::vector<Real>& v) {
    return {v.begin(), v.end()};
}

py::dict entry_dict(const CheckEntry& entry) {
    py::dict params;
    for (const auto& [key, value] : entry.parameters) params[key.c_str()] = value;
    py::dict out;
    out["check_name"] = entry.check_name;
    out["parameters"] = params;
    out["measured_error"] = entry.measured_error;
    out["tolerance"] = entry.tolerance;
    out["passed"] = entry.passed;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "su(1,1) ladder-operator solution of the relativistic "
              "Kepler-Coulomb bound-state problem";

    // ---- spectrum ----------------------------------------------------
    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init<int, int, double, double>(), py::arg("k"), py::arg("n"),
             py::arg("gamma"), py::arg("mass") = 1.0)
        .def_readwrite("k", &QuantumNumbers::k)
        .def_readwrite("n", &QuantumNumbers::n)
        .def_readwrite("gamma", &QuantumNumbers::gamma)
        .def_readwrite("mass", &QuantumNumbers::mass)
        .def_property_readonly("N", &QuantumNumbers::principal)
        .def("validate", &QuantumNumbers::validate)
        .def("__repr__", [](const QuantumNumbers& q) {
            return "QuantumNumbers(k=" + std::to_string(q.k) +
                   ", n=" + std::to_string(q.n) +
                   ", gamma=" + format_sig9(q.gamma) +
                   ", mass=" + format_sig9(q.mass) + ")";
        });

    py::class_<SpectralParams>(m, "SpectralParams")
        .def_readonly("s", &SpectralParams::s)
        .def_readonly("xi", &SpectralParams::xi)
        .def_readonly("energy", &SpectralParams::energy)
        .def_readonly("nu", &SpectralParams::nu)
        .def_readonly("mu", &SpectralParams::mu)
        .def_readonly("alpha1", &SpectralParams::alpha1)
        .def_readonly("alpha2", &SpectralParams::alpha2)
        .def("__repr__", [](const SpectralParams& p) {
            return "SpectralParams(s=" + format_sig9(p.s) +
                   ", xi=" + format_sig9(p.xi) +
                   ", energy=" + format_sig9(p.energy) + ")";
        });

    m.def("s_of", &s_of, py::arg("k"), py::arg("gamma"),
          "sqrt(k^2 - gamma^2) for 0 < gamma < |k|");
    m.def("energy_of", &energy_of, py::arg("q"));
    m.def("component_match_check", &component_match_check, py::arg("q"));
    m.def("state_exists", &state_exists, py::arg("n"), py::arg("k"));
    m.def("nonrel_limit_check", &nonrel_limit_check, py::arg("N"), py::arg("k"),
          py::arg("gamma_small"));

    py::class_<DiagramLevel>(m, "DiagramLevel")
        .def_readonly("k", &DiagramLevel::k)
        .def_readonly("N", &DiagramLevel::N)
        .def_readonly("n", &DiagramLevel::n)
        .def_readonly("e_over_m", &DiagramLevel::e_over_m)
        .def_readonly("dashed", &DiagramLevel::dashed);
    py::class_<DiagramArrow>(m, "DiagramArrow")
        .def_readonly("label", &DiagramArrow::label)
        .def_readonly("k_from", &DiagramArrow::k_from)
        .def_readonly("N_from", &DiagramArrow::N_from)
        .def_readonly("k_to", &DiagramArrow::k_to)
        .def_readonly("N_to", &DiagramArrow::N_to);
    py::class_<DiagramData>(m, "DiagramData")
        .def_readonly("gamma", &DiagramData::gamma)
        .def_readonly("levels", &DiagramData::levels)
        .def_readonly("arrows", &DiagramData::arrows);
    m.def("level_diagram", &level_diagram, py::arg("gamma"), py::arg("k_max"),
          py::arg("N_max"));
    m.def("diagram_csv", &diagram_csv, py::arg("data"));
    m.def("diagram_svg", &diagram_svg, py::arg("data"));

    // ---- special functions -------------------------------------------
    m.def(
        "kummer_m",
        [](double a, double b, double z) { return kummer_m({a, b, z}); },
        py::arg("a"), py::arg("b"), py::arg("z"),
        "Terminating confluent hypergeometric 1F1(a, b; z), a a nonpositive integer");
    m.def("kummer_coeffs", &kummer_coeffs, py::arg("n"), py::arg("b"));
    m.def("gamma_fn", &gamma_fn, py::arg("x"));
    m.def("log_gamma", &log_gamma, py::arg("x"));
    m.def(
        "gauss_laguerre",
        [](int count, double alpha) {
            const QuadratureRule rule = gauss_laguerre(count, alpha);
            return py::make_tuple(rule.nodes, rule.weights);
        },
        py::arg("count"), py::arg("alpha"),
        "(nodes, weights) for the weight x^alpha e^-x on (0, inf)");

    // ---- states --------------------------------------------------------
    py::class_<QuasiPolynomial>(m, "QuasiPolynomial")
        .def(py::init([](double base_exponent, double decay,
                         const std::vector<double>& coeffs) {
                 return QuasiPolynomial(base_exponent, decay,
                                        std::vector<Real>(coeffs.begin(), coeffs.end()));
             }),
             py::arg("base_exponent"), py::arg("decay"), py::arg("coeffs"))
        .def_property_readonly("base_exponent",
                               [](const QuasiPolynomial& f) {
                                   return static_cast<double>(f.base_exponent());
                               })
        .def_property_readonly("decay", [](const QuasiPolynomial& f) {
            return static_cast<double>(f.decay());
        })
        .def_property_readonly("coeffs", [](const QuasiPolynomial& f) {
            return to_double(f.coeffs());
        })
        .def_property_readonly("is_zero", &QuasiPolynomial::is_zero)
        .def("__call__", [](const QuasiPolynomial& f, double rho) {
            return static_cast<double>(f(rho));
        })
        .def("sample", [](const QuasiPolynomial& f, const std::vector<double>& rho) {
            std::vector<double> out(rho.size());
            for (size_t i = 0; i < rho.size(); ++i)
                out[i] = static_cast<double>(f(rho[i]));
            return out;
        })
        .def("derivative", &QuasiPolynomial::derivative);
    m.def("basis_state", &basis_state, py::arg("m"), py::arg("s"), py::arg("xi"));

    py::enum_<Component>(m, "Component")
        .value("Upper", Component::Upper)
        .value("Lower", Component::Lower);
    m.def("physical_component", &physical_component, py::arg("q"), py::arg("which"));

    py::class_<SpinorState>(m, "SpinorState")
        .def_readonly("upper", &SpinorState::upper)
        .def_readonly("lower", &SpinorState::lower)
        .def_readonly("q", &SpinorState::q)
        .def_readonly("params", &SpinorState::params);
    m.def("make_spinor", &make_spinor, py::arg("q"));

    m.def("inner_product", [](const QuasiPolynomial& f, const QuasiPolynomial& g) {
        return static_cast<double>(inner_product(f, g));
    });
    m.def("norm", [](const QuasiPolynomial& f) {
        return static_cast<double>(qp_norm(f));
    });
    m.def("normalize", &normalize, py::arg("f"));

    // ---- symbolic operators -------------------------------------------
    py::enum_<Generator>(m, "Generator")
        .value("Sigma3", Generator::Sigma3)
        .value("SigmaPlus", Generator::SigmaPlus)
        .value("SigmaMinus", Generator::SigmaMinus)
        .value("Xi3", Generator::Xi3)
        .value("XiPlus", Generator::XiPlus)
        .value("XiMinus", Generator::XiMinus)
        .value("BPlus", Generator::BPlus)
        .value("BMinus", Generator::BMinus)
        .value("RadialH", Generator::RadialH);

    py::class_<DiffOp>(m, "DiffOp")
        .def_property_readonly("is_zero", &DiffOp::is_zero)
        .def_property_readonly("max_order", &DiffOp::max_order)
        .def("__eq__", [](const DiffOp& a, const DiffOp& b) { return a == b; })
        .def("__add__", [](const DiffOp& a, const DiffOp& b) { return a + b; })
        .def("__sub__", [](const DiffOp& a, const DiffOp& b) { return a - b; })
        .def("__neg__", [](const DiffOp& a) { return -a; })
        .def("shift_s", &DiffOp::shift_s)
        .def("__repr__", [](const DiffOp& op) { return op.str(); });
    m.def("build_generator", &build_generator, py::arg("which"));
    m.def("compose", &diffop_compose, py::arg("lhs"), py::arg("rhs"));
    m.def("commutator", &diffop_commutator, py::arg("a"), py::arg("b"));
    m.def("casimir_sigma", &casimir_sigma);
    m.def(
        "apply_diffop",
        [](const DiffOp& op, const QuasiPolynomial& f, double s, double xi,
           double gamma) { return apply_diffop(op, f, {s, xi, gamma}); },
        py::arg("op"), py::arg("f"), py::arg("s"), py::arg("xi"),
        py::arg("gamma") = 0.0);

    // ---- verification ---------------------------------------------------
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_property_readonly("passed", &VerificationReport::passed)
        .def_property_readonly("entries",
                               [](const VerificationReport& report) {
                                   py::list out;
                                   for (const CheckEntry& entry : report.entries)
                                       out.append(entry_dict(entry));
                                   return out;
                               })
        .def("merge", &VerificationReport::merge)
        .def("__len__",
             [](const VerificationReport& report) { return report.entries.size(); });

    m.def("verify_algebra", &verify_algebra, py::arg("perturb") = false);
    py::enum_<LadderSign>(m, "LadderSign")
        .value("Plus", LadderSign::Plus)
        .value("Minus", LadderSign::Minus);
    m.def(
        "q_coeff",
        [](int m_, double s, LadderSign sign) { return q_coeff(m_, s, sign).value; },
        py::arg("m"), py::arg("s"), py::arg("sign"));
    m.def("check_ladder", &check_ladder, py::arg("s"), py::arg("xi"), py::arg("m_max"));
    m.def("check_eigen", &check_eigen, py::arg("s"), py::arg("gamma"), py::arg("m_max"));
    m.def("check_hermiticity", &check_hermiticity, py::arg("s"), py::arg("xi"),
          py::arg("trials"), py::arg("seed") = 20240901u);
    m.def("check_b_equivalence", &check_b_equivalence, py::arg("q"));
    m.def("check_dirac_system", &check_dirac_system, py::arg("q"));
    m.def(
        "report_json",
        [](const VerificationReport& report, const std::map<std::string, double>& params) {
            return report_json(report, params);
        },
        py::arg("report"), py::arg("parameters") = std::map<std::string, double>{});

    m.attr("__version__") = "0.1.0";
    m.attr("LADDER_PHASE_PLUS") = kLadderPhasePlus;
    m.attr("LADDER_PHASE_MINUS") = kLadderPhaseMinus;
}
