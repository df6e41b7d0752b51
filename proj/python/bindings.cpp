#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mprisk/cost_model.hpp"
#include "mprisk/dirichlet.hpp"
#include "mprisk/error.hpp"
#include "mprisk/risk.hpp"
#include "mprisk/special_functions.hpp"

namespace py = pybind11;
using namespace mprisk;

namespace {

BeliefBatch to_batch(const std::vector<std::vector<double>>& rows) {
    BeliefBatch batch;
    for (const auto& r : rows) batch.beliefs.push_back(validate_belief(r));
    return batch;
}

}  // namespace

PYBIND11_MODULE(_mprisk, m) {
    m.doc() = "Dirichlet belief modelling and CVaR risk profiles";

    static py::exception<ValidationError> validation(m, "ValidationError", PyExc_ValueError);
    static py::exception<NumericalError> numerical(m, "NumericalError", PyExc_ArithmeticError);
    static py::exception<IoError> io(m, "IoError", PyExc_OSError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            py::set_error(validation, e.what());
        } catch (const NumericalError& e) {
            py::set_error(numerical, e.what());
        } catch (const IoError& e) {
            py::set_error(io, e.what());
        }
    });

    m.def("digamma", &special::digamma);
    m.def("inv_digamma", &special::inv_digamma);
    m.def("reg_lower_inc_gamma", &special::reg_lower_inc_gamma, py::arg("a"), py::arg("x"));

    m.def(
        "exceedance_probs",
        [](std::vector<double> alpha, double tol) { return exceedance_probs(DirichletParams(std::move(alpha)), tol); },
        py::arg("alpha"), py::arg("tol") = 1e-8);

    m.def(
        "estimate_mle",
        [](const std::vector<std::vector<double>>& beliefs, double tol, int max_iter) {
            const auto fit = estimate_mle(to_batch(beliefs), {tol, max_iter});
            const auto a = fit.params.alpha();
            return py::dict(py::arg("alpha") = std::vector<double>(a.begin(), a.end()),
                            py::arg("iterations") = fit.iterations, py::arg("converged") = fit.converged);
        },
        py::arg("beliefs"), py::arg("tol") = 1e-10, py::arg("max_iter") = 1000);

    m.def(
        "sample",
        [](std::vector<double> alpha, std::size_t n, std::uint64_t seed) {
            Rng rng(seed);
            std::vector<std::vector<double>> out;
            for (const auto& b : sample(DirichletParams(std::move(alpha)), rng, n)) {
                out.emplace_back(b.values().begin(), b.values().end());
            }
            return out;
        },
        py::arg("alpha"), py::arg("n"), py::arg("seed") = 1);

    m.def(
        "cvar",
        [](std::vector<double> values, std::vector<double> probs, double epsilon) {
            return cvar(CostDistribution{std::move(values), std::move(probs)}, epsilon);
        },
        py::arg("values"), py::arg("probs"), py::arg("epsilon"));

    py::class_<CostTable>(m, "CostTable")
        .def_static("load", &load_cost_csv, py::arg("path"))
        .def_static("parse", &parse_cost_csv, py::arg("text"))
        .def("to_csv", &format_cost_csv)
        .def_property_readonly("labels", [](const CostTable& t) { return t.matrix.labels().labels(); })
        .def("cost", [](const CostTable& t, const std::string& truth, const std::string& perceived) {
            const auto& ls = t.matrix.labels();
            return t.matrix(ls.index_of(truth), ls.index_of(perceived));
        });

    m.def(
        "risk_profile",
        [](std::vector<double> alpha, const CostTable& table, double epsilon) {
            return risk_profile(DirichletParams(std::move(alpha)), table.matrix, epsilon).values;
        },
        py::arg("alpha"), py::arg("costs"), py::arg("epsilon") = 0.1);

    m.def("accumulation_weights", &accumulation_weights, py::arg("mu"), py::arg("steps"));

    m.def(
        "accumulate",
        [](const std::vector<std::vector<double>>& profiles, double mu) {
            AccumulatedRiskState state(mu);
            std::vector<double> acc;
            for (std::size_t k = 0; k < profiles.size(); ++k) acc = state.accumulate({0.1, double(k + 1), profiles[k]});
            return acc;
        },
        py::arg("profiles"), py::arg("mu") = 0.5);

    m.def(
        "decide",
        [](std::vector<double> accumulated, double eta, double t, double horizon) {
            const auto d = decide(accumulated, eta, t, horizon);
            py::object out = d.risk_output ? py::cast(*d.risk_output) : py::none();
            return py::dict(py::arg("argmin") = d.argmin, py::arg("tie") = d.tie, py::arg("gated") = d.gated,
                            py::arg("risk_output") = out, py::arg("t_exec") = d.t_exec);
        },
        py::arg("accumulated"), py::arg("eta"), py::arg("t"), py::arg("horizon"));
}
