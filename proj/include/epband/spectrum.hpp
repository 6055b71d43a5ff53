#pragma once

#include <complex>

#include "epband/core_algebra.hpp"
#include "epband/lattice_model.hpp"

namespace epband::spectrum {

using core_algebra::cplx;
using core_algebra::Vec2;
using lattice_model::ModelParams;
using lattice_model::Momentum;

enum class PointClass {
    RealPair,      // eps^2 > 0
    ImaginaryPair, // eps^2 < 0, or complex eps^2 (gapped, non-real)
    EP,            // |eps^2| ~ 0
};

struct BandPoint {
    Momentum k;
    cplx eps;       // principal branch of sqrt(eps^2), energy units
    Vec2 vec_minus; // Dirac-normalized right eigenvector, eigenvalue -eps
    Vec2 vec_plus;  // eigenvalue +eps; coincides with vec_minus at an EP
    PointClass classification = PointClass::RealPair;
};

struct BiorthPair {
    Vec2 right_minus, right_plus; // eigenvectors of h
    Vec2 left_minus, left_plus;   // eigenvectors of h^dagger, labeled by
                                  // eigenvalue as a number (left_a <-> a*eps)
    cplx omega;                   // matched biorthogonal norm of the raw forms
};

// Closed-form band energy squared:
//   eps^2 = J^2 (w^2 + v^2 + 2 w v cos kx) + (V_k + v_pot + i gamma)^2,
// w = 1-delta, v = v_eff. Equals -det h(k).
cplx eps_squared(const ModelParams& p, Momentum k);
std::complex<long double> eps_squared_ld(const ModelParams& p,
                                         long double kx, long double ky);

// Band energy, eigenvectors from the explicit column forms (upper entry
// V + v_pot + i gamma + eps for the minus branch), Dirac-normalized.
BandPoint band_pair(const ModelParams& p, Momentum k);

PointClass classify_point(const ModelParams& p, Momentum k);

// Chain variant only. Left/right frames scaled so <left_a|right_b> is exactly
// the pairing delta: delta_{a,b} when eps^2 > 0, delta_{a,-b} when eps^2 < 0.
// Throws CoalescentError when |omega| < 1e-8 * energy_scale (at/near an EP).
BiorthPair biorthogonal_pair(const ModelParams& p, Momentum k);

// Relative EP classification tolerance on |eps^2|.
inline constexpr double tol_ep_class = 1e-10;
// Relative realness tolerance on Im eps^2 for the RealPair label.
inline constexpr double tol_real = 1e-12;

} // namespace epband::spectrum
