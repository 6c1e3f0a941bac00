#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gravdiscord/correlations.hpp"
#include "gravdiscord/error.hpp"
#include "gravdiscord/experiments.hpp"
#include "gravdiscord/gaussian_state.hpp"
#include "gravdiscord/spacetime.hpp"
#include "gravdiscord/wavepacket.hpp"

namespace py = pybind11;
using namespace gravdiscord;

namespace {

Direction direction_from(int sign) {
    return sign >= 0 ? Direction::CoRotating : Direction::CounterRotating;
}

}  // namespace

PYBIND11_MODULE(_gravdiscord, m) {
    m.doc() = "Gravitational effects on Gaussian quantum correlations sent to a satellite";

    // Error subclasses RuntimeError and carries the failure kind as `.kind`.
    m.attr("Error") = py::reinterpret_steal<py::object>(
        PyErr_NewException("gravdiscord.Error", PyExc_RuntimeError, nullptr));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const py::object type = py::module_::import("gravdiscord._gravdiscord").attr("Error");
            py::object instance = type(e.what());
            instance.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(type.ptr(), instance.ptr());
        }
    });

    py::enum_<ShiftMode>(m, "ShiftMode")
        .value("EXACT", ShiftMode::Exact)
        .value("PERTURBATIVE", ShiftMode::Perturbative);
    py::enum_<OverlapMode>(m, "OverlapMode")
        .value("EXACT", OverlapMode::Exact)
        .value("PERTURBATIVE", OverlapMode::Perturbative);
    py::enum_<SweepAxis>(m, "SweepAxis")
        .value("HEIGHT", SweepAxis::Height)
        .value("SQUEEZING", SweepAxis::Squeezing)
        .value("FREQUENCY", SweepAxis::Frequency)
        .value("CHANGE_RATE", SweepAxis::ChangeRate);
    py::enum_<Baseline>(m, "Baseline")
        .value("GROUND", Baseline::Ground)
        .value("PERFECT_CHANNEL", Baseline::PerfectChannel);

    // Space-time
    py::class_<KerrBody>(m, "KerrBody")
        .def(py::init<double, double, double, double>(), py::arg("mass"), py::arg("kerr_parameter"),
             py::arg("surface_radius"), py::arg("angular_velocity"))
        .def_static("earth", &KerrBody::earth)
        .def_static("from_si", &KerrBody::from_si, py::arg("mass_kg"), py::arg("angular_momentum"),
                    py::arg("angular_velocity"), py::arg("surface_radius"))
        .def_property_readonly("mass", &KerrBody::mass_geometric)
        .def_property_readonly("kerr_parameter", &KerrBody::kerr_parameter)
        .def_property_readonly("surface_radius", &KerrBody::surface_radius)
        .def_property_readonly("angular_velocity", &KerrBody::angular_velocity_geometric)
        .def_property_readonly("schwarzschild_radius", &KerrBody::schwarzschild_radius);

    py::class_<ShiftBreakdown>(m, "ShiftBreakdown")
        .def_readonly("schwarzschild_term", &ShiftBreakdown::schwarzschild_term)
        .def_readonly("rotation_term", &ShiftBreakdown::rotation_term)
        .def_readonly("higher_order_term", &ShiftBreakdown::higher_order_term)
        .def_readonly("total", &ShiftBreakdown::total);

    m.def(
        "frequency_ratio",
        [](const KerrBody& body, double height, int direction) {
            return frequency_ratio_exact(body, OrbitSpec(height, direction_from(direction)));
        },
        py::arg("body"), py::arg("height"), py::arg("direction") = 1);
    m.def(
        "shift",
        [](const KerrBody& body, double height, int direction, ShiftMode mode) {
            return shift_parameter(body, OrbitSpec(height, direction_from(direction)), mode);
        },
        py::arg("body"), py::arg("height"), py::arg("direction") = 1,
        py::arg("mode") = ShiftMode::Exact);
    m.def(
        "shift_terms",
        [](const KerrBody& body, double height, int direction) {
            return shift_parameter_perturbative(body, OrbitSpec(height, direction_from(direction)));
        },
        py::arg("body"), py::arg("height"), py::arg("direction") = 1);
    m.def(
        "compensation_height",
        [](const KerrBody& body, int direction, ShiftMode mode) {
            return compensation_height(body, direction_from(direction), mode);
        },
        py::arg("body"), py::arg("direction") = 1, py::arg("mode") = ShiftMode::Exact);

    // Wave packets
    py::class_<WavePacketSpec>(m, "WavePacketSpec")
        .def(py::init<double, double>(), py::arg("peak_frequency") = 1.0, py::arg("bandwidth") = 1.0)
        .def_property_readonly("peak_frequency", &WavePacketSpec::peak_frequency)
        .def_property_readonly("bandwidth", &WavePacketSpec::bandwidth)
        .def_property_readonly("peak_over_bandwidth", &WavePacketSpec::peak_over_bandwidth);

    py::class_<ChannelOverlap>(m, "ChannelOverlap")
        .def_property_readonly("theta", &ChannelOverlap::theta)
        .def_property_readonly("loss", &ChannelOverlap::loss)
        .def_property_readonly("fidelity", &ChannelOverlap::fidelity);

    m.def("overlap", &overlap, py::arg("spec"), py::arg("delta"),
          py::arg("mode") = OverlapMode::Exact);
    m.def("overlap_quadrature", &overlap_quadrature, py::arg("spec"), py::arg("delta"));

    // Gaussian states; covariance matrices cross the boundary as numpy arrays.
    py::class_<StandardForm>(m, "StandardForm")
        .def(py::init([](double a, double b, double c1, double c2) {
                 StandardForm s{a, b, c1, c2};
                 s.validate();
                 return s;
             }),
             py::arg("a"), py::arg("b"), py::arg("c1"), py::arg("c2"))
        .def_readonly("a", &StandardForm::a)
        .def_readonly("b", &StandardForm::b)
        .def_readonly("c1", &StandardForm::c1)
        .def_readonly("c2", &StandardForm::c2)
        .def("covariance", [](const StandardForm& s) { return s.to_covariance().matrix(); });

    m.def(
        "tmss_covariance", [](double s) { return tmss_covariance(s).matrix(); }, py::arg("s"));
    m.def(
        "lossy_covariance",
        [](double s, double theta) {
            const int keep[] = {0, 1};
            return partial_trace(apply_symplectic(initial_extended_covariance(s), channel_symplectic(theta)),
                                 keep)
                .matrix();
        },
        py::arg("s"), py::arg("theta"));
    m.def("lossy_standard_form", &lossy_standard_form, py::arg("s"), py::arg("theta"));
    m.def(
        "symplectic_spectrum",
        [](const Matrix& sigma) { return symplectic_spectrum(CovarianceMatrix(sigma)); },
        py::arg("sigma"));
    m.def(
        "renyi2_entropy", [](const Matrix& sigma) { return renyi2_entropy(CovarianceMatrix(sigma)); },
        py::arg("sigma"));
    m.def(
        "standard_form_params",
        [](const Matrix& sigma) { return standard_form_params(CovarianceMatrix(sigma)); },
        py::arg("sigma"));

    // Correlations
    py::class_<CorrelationReport>(m, "CorrelationReport")
        .def_readonly("mutual_information", &CorrelationReport::mutual_information)
        .def_readonly("classical", &CorrelationReport::classical)
        .def_readonly("discord", &CorrelationReport::discord)
        .def_property_readonly("optimal_lambda",
                               [](const CorrelationReport& r) { return r.optimal_seed.lambda(); })
        .def_property_readonly("optimal_angle",
                               [](const CorrelationReport& r) { return r.optimal_seed.angle(); });

    m.def(
        "analyze", [](const StandardForm& state) { return analyze(state); }, py::arg("state"));
    m.def("mutual_information", &mutual_information, py::arg("state"));
    m.def(
        "classical_correlation",
        [](const StandardForm& state) { return classical_correlation(state).value; },
        py::arg("state"));
    m.def("quantum_discord", &quantum_discord, py::arg("state"));
    m.def(
        "change_rate",
        [](const CorrelationReport& current, const CorrelationReport& baseline) {
            const ChangeRates r = change_rate(current, baseline);
            return py::make_tuple(r.mutual_information, r.classical, r.discord);
        },
        py::arg("current"), py::arg("baseline"));

    // Experiments
    py::class_<AxisRange>(m, "AxisRange")
        .def(py::init<double, double, int>(), py::arg("min"), py::arg("max"), py::arg("steps") = 101)
        .def_readwrite("min", &AxisRange::min)
        .def_readwrite("max", &AxisRange::max)
        .def_readwrite("steps", &AxisRange::steps);
    m.def("default_range", &default_range, py::arg("axis"));

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("body", &RunConfig::body)
        .def_property(
            "direction", [](const RunConfig& c) { return sign(c.direction); },
            [](RunConfig& c, int d) { c.direction = direction_from(d); })
        .def_readwrite("squeezing", &RunConfig::squeezing)
        .def_readwrite("peak_frequency", &RunConfig::peak_frequency)
        .def_readwrite("bandwidth", &RunConfig::bandwidth)
        .def_readwrite("height", &RunConfig::height)
        .def_readwrite("shift_mode", &RunConfig::shift_mode)
        .def_readwrite("overlap_mode", &RunConfig::overlap_mode)
        .def_readwrite("baseline", &RunConfig::baseline)
        .def_property(
            "axis", [](const RunConfig& c) { return c.axis; },
            [](RunConfig& c, SweepAxis a) {
                c.axis = a;
                c.range = default_range(a);
            })
        .def_readwrite("range", &RunConfig::range)
        .def_readwrite("allow_large_squeezing", &RunConfig::allow_large_squeezing)
        .def("validate", &RunConfig::validate);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("axis", &SweepRow::axis)
        .def_readonly("delta", &SweepRow::delta)
        .def_readonly("theta", &SweepRow::theta)
        .def_readonly("mutual_information", &SweepRow::mutual_information)
        .def_readonly("classical", &SweepRow::classical)
        .def_readonly("discord", &SweepRow::discord)
        .def_readonly("mu_mutual_information", &SweepRow::mu_mutual_information)
        .def_readonly("mu_classical", &SweepRow::mu_classical)
        .def_readonly("mu_discord", &SweepRow::mu_discord);

    m.def("run_point", &run_point, py::arg("config"), py::arg("height"));
    m.def("sweep", &sweep, py::arg("config"));
    m.def("format_csv", &format_csv, py::arg("table"));
    m.def("emit_csv", &emit_csv, py::arg("table"), py::arg("path"));
    m.def("format_plot_script", &format_plot_script, py::arg("axis"), py::arg("csv_path"));
}
