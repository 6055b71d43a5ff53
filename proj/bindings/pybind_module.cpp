#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "epband/ep_finder.hpp"
#include "epband/errors.hpp"
#include "epband/lattice_model.hpp"
#include "epband/oracle.hpp"
#include "epband/spectrum.hpp"
#include "epband/symmetry.hpp"
#include "epband/topo_field.hpp"

namespace py = pybind11;

using namespace epband;
using lattice_model::BoundaryY;
using lattice_model::ModelParams;
using lattice_model::Momentum;
using lattice_model::VariantKind;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Band structure, exceptional points, and half-integer winding numbers "
              "for a gain/loss dimerized lattice";

    auto err = py::register_exception<Error>(m, "EpbandError");
    py::register_exception<CoalescentError>(m, "CoalescentError", err);
    py::register_exception<DegenerateParamsError>(m, "DegenerateParamsError", err);
    py::register_exception<LoopThroughEPError>(m, "LoopThroughEPError", err);
    py::register_exception<NonQuantizedError>(m, "NonQuantizedError", err);
    py::register_exception<SizeGuardError>(m, "SizeGuardError", err);
    py::register_exception<EigenConvergenceError>(m, "EigenConvergenceError", err);
    py::register_exception<InternalCheckError>(m, "InternalCheckError", err);

    py::enum_<VariantKind>(m, "VariantKind")
        .value("Base2D", VariantKind::Base2D)
        .value("Chain", VariantKind::Chain)
        .value("HoppingPerturbed", VariantKind::HoppingPerturbed)
        .value("PotentialPerturbed", VariantKind::PotentialPerturbed);

    py::enum_<BoundaryY>(m, "BoundaryY")
        .value("Periodic", BoundaryY::Periodic)
        .value("Open", BoundaryY::Open);

    py::enum_<spectrum::PointClass>(m, "PointClass")
        .value("RealPair", spectrum::PointClass::RealPair)
        .value("ImaginaryPair", spectrum::PointClass::ImaginaryPair)
        .value("EP", spectrum::PointClass::EP);

    py::enum_<ep_finder::PhaseRegion>(m, "PhaseRegion")
        .value("Broken", ep_finder::PhaseRegion::Broken)
        .value("RealGapped", ep_finder::PhaseRegion::RealGapped)
        .value("ImaginaryGapped", ep_finder::PhaseRegion::ImaginaryGapped)
        .value("Boundary", ep_finder::PhaseRegion::Boundary);

    py::class_<Momentum>(m, "Momentum")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("kx"), py::arg("ky") = 0.0)
        .def_readwrite("kx", &Momentum::kx)
        .def_readwrite("ky", &Momentum::ky)
        .def("__repr__", [](const Momentum& k) {
            return "Momentum(" + std::to_string(k.kx) + ", " + std::to_string(k.ky) + ")";
        });

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double j, double delta, double gamma, double g, double t_d,
                         double v_pot, int n_cells, int n_chains, BoundaryY boundary_y,
                         VariantKind variant) {
                 ModelParams p;
                 p.j = j;
                 p.delta = delta;
                 p.gamma = gamma;
                 p.g = g;
                 p.t_d = t_d;
                 p.v_pot = v_pot;
                 p.n_cells = n_cells;
                 p.n_chains = n_chains;
                 p.boundary_y = boundary_y;
                 p.variant = variant;
                 p.validate();
                 return p;
             }),
             py::arg("j") = 1.0, py::arg("delta") = 0.0, py::arg("gamma") = 0.0,
             py::arg("g") = 1.0, py::arg("t_d") = 0.0, py::arg("v_pot") = 0.0,
             py::arg("n_cells") = 1, py::arg("n_chains") = 1,
             py::arg("boundary_y") = BoundaryY::Periodic,
             py::arg("variant") = VariantKind::Base2D)
        .def_readwrite("j", &ModelParams::j)
        .def_readwrite("delta", &ModelParams::delta)
        .def_readwrite("gamma", &ModelParams::gamma)
        .def_readwrite("g", &ModelParams::g)
        .def_readwrite("t_d", &ModelParams::t_d)
        .def_readwrite("v_pot", &ModelParams::v_pot)
        .def_readwrite("n_cells", &ModelParams::n_cells)
        .def_readwrite("n_chains", &ModelParams::n_chains)
        .def_readwrite("boundary_y", &ModelParams::boundary_y)
        .def_readwrite("variant", &ModelParams::variant)
        .def("validate", &ModelParams::validate);

    m.def("energy_scale", &lattice_model::energy_scale);
    m.def("momentum_grid", &lattice_model::momentum_grid);
    m.def("wrap_to_bz", &lattice_model::wrap_to_bz);

    m.def("eps_squared", &spectrum::eps_squared, py::arg("params"), py::arg("k"));
    m.def("classify_point", &spectrum::classify_point, py::arg("params"), py::arg("k"));

    py::class_<spectrum::BandPoint>(m, "BandPoint")
        .def_readonly("k", &spectrum::BandPoint::k)
        .def_readonly("eps", &spectrum::BandPoint::eps)
        .def_readonly("classification", &spectrum::BandPoint::classification)
        .def_property_readonly("vec_minus",
                               [](const spectrum::BandPoint& b) {
                                   return py::make_tuple(b.vec_minus.u, b.vec_minus.v);
                               })
        .def_property_readonly("vec_plus", [](const spectrum::BandPoint& b) {
            return py::make_tuple(b.vec_plus.u, b.vec_plus.v);
        });
    m.def("band_pair", &spectrum::band_pair, py::arg("params"), py::arg("k"));

    py::class_<ep_finder::EPRecord>(m, "EPRecord")
        .def_readonly("k_c", &ep_finder::EPRecord::k_c)
        .def_readonly("charge", &ep_finder::EPRecord::charge)
        .def_readonly("charge_set", &ep_finder::EPRecord::charge_set)
        .def_readonly("residual", &ep_finder::EPRecord::residual);
    m.def("locate_eps", &ep_finder::locate_eps, py::arg("params"));
    m.def("classify_phase", &ep_finder::classify_phase, py::arg("delta"),
          py::arg("gamma_over_2j"));

    py::class_<ep_finder::EPDomain>(m, "EPDomain")
        .def_readonly("t_d", &ep_finder::EPDomain::t_d)
        .def("contains", &ep_finder::EPDomain::contains, py::arg("delta"), py::arg("u"))
        .def("boundary_polylines", &ep_finder::EPDomain::boundary_polylines);
    m.def("ep_domain_perturbed", &ep_finder::ep_domain_perturbed, py::arg("t_d"));

    py::class_<topo_field::FieldSample>(m, "FieldSample")
        .def_readonly("k", &topo_field::FieldSample::k)
        .def_readonly("fx", &topo_field::FieldSample::fx)
        .def_readonly("fy", &topo_field::FieldSample::fy)
        .def_readonly("at_ep", &topo_field::FieldSample::at_ep)
        .def_property_readonly("b", [](const topo_field::FieldSample& s) {
            return py::make_tuple(s.b[0], s.b[1], s.b[2]);
        });
    m.def("auxiliary_b", &topo_field::auxiliary_b, py::arg("params"), py::arg("k"));
    m.def("field_f", &topo_field::field_f, py::arg("params"), py::arg("k"));

    py::class_<topo_field::KLoop>(m, "KLoop")
        .def(py::init<>())
        .def_readwrite("pts", &topo_field::KLoop::pts)
        .def_static("circle", &topo_field::KLoop::circle, py::arg("center"), py::arg("radius"),
                    py::arg("n_segments") = 64);
    m.def("winding_number", &topo_field::winding_number, py::arg("params"), py::arg("loop"));
    m.def("near_ep_asymptote", &topo_field::near_ep_asymptote, py::arg("params"),
          py::arg("k_c"), py::arg("dk"));

    py::class_<topo_field::KinkReport>(m, "KinkReport")
        .def_readonly("samples", &topo_field::KinkReport::samples)
        .def_readonly("kink_positions", &topo_field::KinkReport::kink_positions);
    m.def("kink_profile", &topo_field::kink_profile, py::arg("params"), py::arg("n_samples"));
    // by-reference mutation does not survive the copy across the language
    // boundary, so return the annotated records instead
    m.def(
        "fill_charges",
        [](const ModelParams& p, std::vector<ep_finder::EPRecord> eps) {
            topo_field::fill_charges(p, eps);
            return eps;
        },
        py::arg("params"), py::arg("eps"));

    py::class_<spectrum::BiorthPair>(m, "BiorthPair")
        .def_property_readonly("right_minus",
                               [](const spectrum::BiorthPair& b) {
                                   return py::make_tuple(b.right_minus.u, b.right_minus.v);
                               })
        .def_property_readonly("right_plus",
                               [](const spectrum::BiorthPair& b) {
                                   return py::make_tuple(b.right_plus.u, b.right_plus.v);
                               })
        .def_property_readonly("left_minus",
                               [](const spectrum::BiorthPair& b) {
                                   return py::make_tuple(b.left_minus.u, b.left_minus.v);
                               })
        .def_property_readonly("left_plus",
                               [](const spectrum::BiorthPair& b) {
                                   return py::make_tuple(b.left_plus.u, b.left_plus.v);
                               })
        .def_readonly("omega", &spectrum::BiorthPair::omega);
    m.def("biorthogonal_pair", &spectrum::biorthogonal_pair, py::arg("params"), py::arg("k"));

    m.def("qx_expectation", &symmetry::qx_expectation, py::arg("params"), py::arg("k"));
    m.def(
        "symmetry_defect",
        [](const ModelParams& p, Momentum k) {
            return symmetry::symmetry_defect(lattice_model::build_bloch(p, k));
        },
        py::arg("params"), py::arg("k"));

    py::class_<oracle::CrosscheckReport>(m, "CrosscheckReport")
        .def_readonly("max_pairing_distance", &oracle::CrosscheckReport::max_pairing_distance)
        .def_readonly("matched", &oracle::CrosscheckReport::matched)
        .def_readonly("n_levels", &oracle::CrosscheckReport::n_levels);
    m.def("crosscheck_spectra", &oracle::crosscheck_spectra, py::arg("params"));

    py::class_<oracle::MinGapResult>(m, "MinGapResult")
        .def_readonly("value", &oracle::MinGapResult::value)
        .def_readonly("argmin", &oracle::MinGapResult::argmin);
    m.def("min_gap_scan", &oracle::min_gap_scan, py::arg("params"), py::arg("grid_n"));
}
