#pragma once

#include "epband/core_algebra.hpp"
#include "epband/lattice_model.hpp"
#include "epband/spectrum.hpp"

namespace epband::symmetry {

using core_algebra::Complex2x2;
using lattice_model::ModelParams;
using lattice_model::Momentum;

struct SymmetryReport {
    Momentum k;
    double indicator = 0.0;   // |<Q_x^B>|
    spectrum::PointClass phase = spectrum::PointClass::RealPair;
    double defect_norm = 0.0; // || sigma_x h* sigma_x - h ||_F
};

// Biorthogonal expectation of the antilinear Q_x = sigma_x K on the minus
// band of the Chain variant: conjugate the right vector, apply sigma_x,
// contract with the biorthogonal partner. Exactly 1 on RealPair, 0 on
// ImaginaryPair; the implementation asserts this dichotomy to 1e-8.
// Throws CoalescentError at/near EPs.
double qx_expectation(const ModelParams& p, Momentum k);

// Frobenius norm of sigma_x h* sigma_x - h; zero iff the antilinear symmetry
// holds (Chain and HoppingPerturbed; 2 sqrt(2) |V| for PotentialPerturbed).
double symmetry_defect(const Complex2x2& h);

SymmetryReport make_report(const ModelParams& p, Momentum k);

} // namespace epband::symmetry
