#pragma once

#include <complex>
#include <vector>

#include "epband/lattice_model.hpp"

namespace epband::oracle {

using core_algebra::cplx;
using lattice_model::DenseMatrix;
using lattice_model::ModelParams;
using lattice_model::Momentum;

struct CrosscheckReport {
    double max_pairing_distance = 0.0;
    bool matched = false; // max_pairing_distance <= 1e-10 * energy_scale
    int n_levels = 0;
    ModelParams params;
};

// All eigenvalues of a general complex matrix, sorted lexicographically
// (Re, then Im). Throws EigenConvergenceError (message carries an FNV-1a
// hash of the matrix bytes) if the dense solver fails.
std::vector<cplx> dense_spectrum(const DenseMatrix& h);

// Greedy minimal-distance pairing between the dense real-space spectrum and
// the union of Bloch pairs {+-eps_k} over momentum_grid; if greedy exceeds
// the tolerance, an optimal bottleneck assignment is tried before reporting
// a mismatch.
CrosscheckReport crosscheck_spectra(const ModelParams& p);

struct MinGapResult {
    double value = 0.0; // min |eps_k|
    Momentum argmin;
};

// Minimum of |eps_k| over a grid_n x grid_n k-grid (grid_n points for Chain),
// then locally polished. Near-zero minima are re-polished with the
// long-double EP Newton so genuine EPs report |eps| at the 1e-9 level.
MinGapResult min_gap_scan(const ModelParams& p, int grid_n);

} // namespace epband::oracle
