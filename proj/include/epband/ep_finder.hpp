#pragma once

#include <array>
#include <vector>

#include "epband/lattice_model.hpp"

namespace epband::ep_finder {

using lattice_model::ModelParams;
using lattice_model::Momentum;

struct EPRecord {
    Momentum k_c;          // canonicalized to [-pi, pi)^2
    double charge = 0.0;   // half-integer winding, filled by topo_field
    bool charge_set = false;
    double residual = 0.0; // |eps^2(k_c)| after long-double refinement
};

enum class PhaseRegion { Broken, RealGapped, ImaginaryGapped, Boundary };

// All exceptional points in the canonical Brillouin zone.
// Analytic seeds (cos^2(kx/2) = rho, ky from Im eps^2 = 0) refined by Newton
// in 80-bit arithmetic; each record satisfies
//   residual <= 1e-18 * energy_scale^2  and  |eps(k_c)| <= 1e-9 * energy_scale
// (the latter certified through an independent trace/determinant route).
// gamma = 0 returns an empty list: a Hermitian degeneracy is a Dirac point,
// not an exceptional point. Charges are left unset.
// Throws DegenerateParamsError when |1-delta^2| (or the t_d-shifted
// denominator) is below 1e-12.
std::vector<EPRecord> locate_eps(const ModelParams& p);

// Phase of the (delta, gamma/2J) plane at V_k = 0.
// Broken when (u^2-delta^2)(u^2-1) < 0 (checked first); Boundary when |u|
// equals |delta| or 1 within 1e-12; RealGapped when |u| < |delta|; else
// ImaginaryGapped.
PhaseRegion classify_phase(double delta, double gamma_over_2j);

// EP-existence region under the t_d perturbation, over (delta, u = gamma/2J).
struct EPDomain {
    double t_d = 0.0;

    // True when the shifted condition cos^2(kc/2) = rho_d has a solution:
    //   rho_d = (u^2 - (delta + t_d/2)^2) / ((1-delta)(1+delta+t_d)) in [0,1].
    // At t_d = 0 this is exactly classify_phase's Broken-or-Boundary set.
    bool contains(double delta, double u) const;

    // Boundary lines u = +-(delta + t_d/2) and u = +-(1 + t_d/2), sampled
    // over delta in [-1.5, 1.5] for plotting.
    std::vector<std::vector<std::array<double, 2>>> boundary_polylines() const;
};

EPDomain ep_domain_perturbed(double t_d);

} // namespace epband::ep_finder
