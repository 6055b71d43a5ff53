#pragma once

#include <array>
#include <vector>

#include "epband/ep_finder.hpp"
#include "epband/lattice_model.hpp"
#include "epband/spectrum.hpp"

namespace epband::topo_field {

using core_algebra::cplx;
using lattice_model::ModelParams;
using lattice_model::Momentum;

struct FieldSample {
    Momentum k;
    std::array<cplx, 3> b; // auxiliary field (Bx, By real; Bz complex), energy
    double fx = 0.0;       // F = (Bx<sx> + By<sy>, <sz>); fx carries energy units
    double fy = 0.0;
    bool at_ep = false;    // true iff classified EP; then F = (0, 0)
};

// Decomposition h = B . sigma:
//   Bx = -J [w + v cos kx], By = -J v sin kx, Bz = -(V_k + v_pot + i gamma).
// Satisfies Bx^2 + By^2 + Bz^2 = eps^2.
std::array<cplx, 3> auxiliary_b(const ModelParams& p, Momentum k);

// Expectation values taken in the Dirac-normalized minus-branch eigenvector.
FieldSample field_f(const ModelParams& p, Momentum k);

// Closed, ordered polyline in k-space; counterclockwise positive.
struct KLoop {
    std::vector<Momentum> pts; // first point repeated at the end

    static KLoop circle(Momentum center, double radius, int n_segments = 64);
};

// Topological charge of the loop: w = -(accumulated doubled angle of
// (F_x + i F_y)^2) / (4 pi), a half-integer. Segments are bisected until each
// doubled-angle step is below pi/2 (depth cap 20).
// Throws LoopThroughEPError when |F| < 1e-8 on the refined loop and
// NonQuantizedError when |2w - round(2w)| > 1e-6.
double winding_number(const ModelParams& p, const KLoop& loop);

// Leading-order field near a refined EP at k_c, dk = (x, y):
//   F = (-Re e, Im e / gamma),
//   e = principal_sqrt(-2 J^2 v w sin(k_cx) x - 4 i g gamma sin(k_cy) y).
std::array<double, 2> near_ep_asymptote(const ModelParams& p, Momentum k_c,
                                        std::array<double, 2> dk);

struct KinkReport {
    std::vector<FieldSample> samples;   // along kx in [-pi, pi)
    std::vector<double> kink_positions; // EP momenta separating real/broken
};

// Chain variant: samples F on n_samples points and lists the EP momenta where
// the profile switches between (F_x != 0, F_y = 0) and F_y != 0.
KinkReport kink_profile(const ModelParams& p, int n_samples);

// Fill each record's charge from a radius-0.05 circular loop.
void fill_charges(const ModelParams& p, std::vector<ep_finder::EPRecord>& eps);

} // namespace epband::topo_field
