#include "epband/lattice_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "epband/errors.hpp"

namespace epband::lattice_model {

namespace {
constexpr double pi = std::numbers::pi;
}

void ModelParams::validate() const {
    auto bad = [](const char* what) { throw std::invalid_argument(std::string("ModelParams: ") + what); };
    if (!(j > 0.0) || !std::isfinite(j)) bad("j must be finite and > 0");
    if (!std::isfinite(delta)) bad("delta must be finite");
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) bad("gamma must be finite and >= 0");
    if (!std::isfinite(g)) bad("g must be finite");
    if (!std::isfinite(t_d)) bad("t_d must be finite");
    if (!std::isfinite(v_pot)) bad("v_pot must be finite");
    if (n_cells < 1) bad("n_cells must be >= 1");
    if (n_chains < 1) bad("n_chains must be >= 1");
    if (variant == VariantKind::Chain && n_chains != 1) bad("Chain variant requires n_chains = 1");
}

double ModelParams::v_eff() const {
    return 1.0 + delta + (variant == VariantKind::HoppingPerturbed ? t_d : 0.0);
}

double ModelParams::v_pot_eff() const {
    return variant == VariantKind::PotentialPerturbed ? v_pot : 0.0;
}

double ModelParams::v_of_ky(double ky) const {
    if (variant == VariantKind::Chain) return 0.0;
    return 2.0 * g * std::cos(ky);
}

double wrap_to_bz(double k) {
    double w = k - 2.0 * pi * std::floor((k + pi) / (2.0 * pi));
    // floor rounding can place pi itself at +pi; fold it back.
    if (w >= pi) w -= 2.0 * pi;
    return w;
}

double energy_scale(const ModelParams& p) {
    double s = 2.0 * p.j * (1.0 + std::abs(p.delta)) + p.gamma;
    if (p.variant == VariantKind::HoppingPerturbed) s += p.j * std::abs(p.t_d);
    if (p.variant == VariantKind::PotentialPerturbed) s += std::abs(p.v_pot);
    if (p.variant != VariantKind::Chain) s += 2.0 * std::abs(p.g);
    return s;
}

Complex2x2 build_bloch(const ModelParams& p, Momentum k) {
    p.validate();
    const double w = 1.0 - p.delta;
    const double v = p.v_eff();
    const cplx d(p.v_of_ky(k.ky) + p.v_pot_eff(), p.gamma);
    const cplx f = w + v * std::exp(cplx(0.0, k.kx));
    const cplx fm = w + v * std::exp(cplx(0.0, -k.kx));
    return Complex2x2(-d, -p.j * fm, -p.j * f, d);
}

DenseMatrix build_realspace(const ModelParams& p) {
    p.validate();
    const long long dim_ll = 2LL * p.n_cells * p.n_chains;
    if (dim_ll > 4096) throw SizeGuardError("build_realspace: 2*N*M exceeds 4096");
    const int n2 = 2 * p.n_cells;
    const int dim = static_cast<int>(dim_ll);

    DenseMatrix h;
    h.dim = dim;
    h.a.assign(static_cast<size_t>(dim) * dim, cplx(0.0, 0.0));
    auto idx = [&](int l, int n) { return (n - 1) * n2 + (l - 1); }; // l in 1..2N, n in 1..M
    auto sgn = [](int l) { return l % 2 == 1 ? -1.0 : 1.0; };        // (-1)^l

    const double vp = p.v_pot_eff();
    for (int n = 1; n <= p.n_chains; ++n) {
        for (int l = 1; l <= n2; ++l) {
            const int l2 = l % n2 + 1; // x always periodic
            const double hop = -p.j * (1.0 + sgn(l) * p.delta);
            h.at(idx(l, n), idx(l2, n)) += hop;
            h.at(idx(l2, n), idx(l, n)) += hop;
            h.at(idx(l, n), idx(l, n)) += sgn(l) * cplx(vp, p.gamma);
        }
        if (p.variant == VariantKind::HoppingPerturbed) {
            // Extra weight on the inter-cell bonds (B of cell c to A of cell c+1),
            // the real-space counterpart of the -J t_d e^{-+ i kx} Bloch terms.
            for (int c = 1; c <= p.n_cells; ++c) {
                const int lb = 2 * c;
                const int la = (2 * c) % n2 + 1;
                h.at(idx(lb, n), idx(la, n)) += -p.j * p.t_d;
                h.at(idx(la, n), idx(lb, n)) += -p.j * p.t_d;
            }
        }
    }
    if (p.variant != VariantKind::Chain) {
        const int last = p.boundary_y == BoundaryY::Periodic ? p.n_chains : p.n_chains - 1;
        for (int n = 1; n <= last; ++n) {
            const int n2ch = n % p.n_chains + 1;
            for (int l = 1; l <= n2; ++l) {
                h.at(idx(l, n), idx(l, n2ch)) += p.g * sgn(l);
                h.at(idx(l, n2ch), idx(l, n)) += p.g * sgn(l);
            }
        }
    }
    return h;
}

std::vector<Momentum> momentum_grid(const ModelParams& p) {
    p.validate();
    std::vector<double> kxs;
    kxs.reserve(p.n_cells);
    for (int n = 0; n < p.n_cells; ++n) kxs.push_back(wrap_to_bz(2.0 * pi * n / p.n_cells));
    std::sort(kxs.begin(), kxs.end());

    std::vector<Momentum> out;
    if (p.variant == VariantKind::Chain) {
        out.reserve(kxs.size());
        for (double kx : kxs) out.push_back({kx, 0.0});
        return out;
    }

    std::vector<double> kys;
    kys.reserve(p.n_chains);
    if (p.boundary_y == BoundaryY::Periodic) {
        for (int n = 0; n < p.n_chains; ++n) kys.push_back(wrap_to_bz(2.0 * pi * n / p.n_chains));
        std::sort(kys.begin(), kys.end());
    } else {
        for (int n = 1; n <= p.n_chains; ++n) kys.push_back(pi * n / (p.n_chains + 1));
    }

    out.reserve(kxs.size() * kys.size());
    for (double ky : kys)
        for (double kx : kxs) out.push_back({kx, ky});
    return out;
}

} // namespace epband::lattice_model
