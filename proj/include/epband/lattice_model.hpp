#pragma once

#include <complex>
#include <vector>

#include "epband/core_algebra.hpp"

namespace epband::lattice_model {

using core_algebra::Complex2x2;
using core_algebra::cplx;

enum class VariantKind {
    Base2D,             // coupled-chain bundle, V_k = 2 g cos(ky)
    Chain,              // single chain, V_k = 0, g ignored
    HoppingPerturbed,   // extra inter-cell hopping t_d (stays symmetry protected)
    PotentialPerturbed, // staggered real potential v_pot (breaks the protection)
};

enum class BoundaryY { Periodic, Open };

struct ModelParams {
    double j = 1.0;     // hopping scale, energy units, > 0
    double delta = 0.0; // dimerization, dimensionless
    double gamma = 0.0; // gain/loss magnitude, energy units, >= 0
    double g = 1.0;     // inter-chain tunneling, energy units
    double t_d = 0.0;   // extra hopping (HoppingPerturbed only), dimensionless
    double v_pot = 0.0; // staggered potential (PotentialPerturbed only), energy
    int n_cells = 1;    // N, unit cells per chain
    int n_chains = 1;   // M
    BoundaryY boundary_y = BoundaryY::Periodic;
    VariantKind variant = VariantKind::Base2D;

    // Throws std::invalid_argument on violated invariants.
    void validate() const;

    // Effective inter-cell coefficient: 1 + delta (+ t_d when HoppingPerturbed).
    double v_eff() const;
    // Diagonal real offset: v_pot for PotentialPerturbed, else 0.
    double v_pot_eff() const;
    // V_k = 2 g cos(ky); identically 0 for the Chain variant.
    double v_of_ky(double ky) const;
};

struct Momentum {
    double kx = 0.0; // radians, canonical range [-pi, pi)
    double ky = 0.0; // ignored by the Chain variant
};

// Wrap an angle into [-pi, pi).
double wrap_to_bz(double k);

// Coarse magnitude of the spectrum, used to make tolerances relative.
// 2 J (1 + |delta|) + J |t_d| + gamma + 2|g| + |v_pot| (g dropped for Chain).
double energy_scale(const ModelParams& p);

// The Bloch core matrix h(k):
//   [ -(V_k + v_pot + i gamma)   -J f(-kx) ]
//   [ -J f(kx)                    V_k + v_pot + i gamma ]
// with f(kx) = (1-delta) + v_eff e^{i kx}.
Complex2x2 build_bloch(const ModelParams& p, Momentum k);

// Dense real-space Hamiltonian, dimension 2 N M, row-major.
struct DenseMatrix {
    int dim = 0;
    std::vector<cplx> a; // dim * dim entries

    cplx& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    const cplx& at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }
};

// Site layout: chain n in 1..M holds sites l in 1..2N, index (n-1)*2N + (l-1).
// Sub-lattice A at odd l (diagonal -i gamma), B at even l (+i gamma).
// x is always periodic; y wraps only for periodic boundary_y.
// Guard: 2 N M <= 4096 (SizeGuardError).
DenseMatrix build_realspace(const ModelParams& p);

// Momenta matching build_realspace's spectrum:
//   periodic: wrapped {2 pi n / N} (and /M for ky), ascending;
//   open y:   ky = pi n / (M + 1), n = 1..M (sine modes);
//   Chain:    1D in kx, ky = 0.
// Ordering: ky-major, kx ascending fastest.
std::vector<Momentum> momentum_grid(const ModelParams& p);

} // namespace epband::lattice_model
