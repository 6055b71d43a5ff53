#include "epband/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>

#include "epband/ep_finder.hpp"
#include "epband/errors.hpp"
#include "epband/spectrum.hpp"

namespace epband::oracle {

using lattice_model::build_realspace;
using lattice_model::energy_scale;
using lattice_model::momentum_grid;
using lattice_model::VariantKind;
using lattice_model::wrap_to_bz;

namespace {

constexpr double pi = std::numbers::pi;

uint64_t fnv1a(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

bool lex_less(const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Smallest max-edge perfect matching between two equal-size point sets.
// Binary search over candidate distances + Kuhn augmenting paths.
double bottleneck_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    const int n = static_cast<int>(a.size());
    std::vector<double> dist(static_cast<size_t>(n) * n);
    std::vector<double> cand;
    cand.reserve(dist.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            dist[static_cast<size_t>(i) * n + j] = std::abs(a[i] - b[j]);
            cand.push_back(dist[static_cast<size_t>(i) * n + j]);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<int> match_b(n);
    std::vector<char> seen(n);
    auto try_match = [&](auto&& self, int i, double thr) -> bool {
        for (int j = 0; j < n; ++j) {
            if (seen[j] || dist[static_cast<size_t>(i) * n + j] > thr) continue;
            seen[j] = 1;
            if (match_b[j] < 0 || self(self, match_b[j], thr)) {
                match_b[j] = i;
                return true;
            }
        }
        return false;
    };
    auto feasible = [&](double thr) {
        std::fill(match_b.begin(), match_b.end(), -1);
        for (int i = 0; i < n; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            if (!try_match(try_match, i, thr)) return false;
        }
        return true;
    };

    size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        const size_t mid = (lo + hi) / 2;
        if (feasible(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

} // namespace

std::vector<cplx> dense_spectrum(const DenseMatrix& h) {
    const int n = h.dim;
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = h.at(r, c);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "dense_spectrum: no convergence (matrix fnv1a %016llx)",
                      static_cast<unsigned long long>(
                          fnv1a(h.a.data(), h.a.size() * sizeof(cplx))));
        throw EigenConvergenceError(buf);
    }
    std::vector<cplx> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

CrosscheckReport crosscheck_spectra(const ModelParams& p) {
    CrosscheckReport rep;
    rep.params = p;

    std::vector<cplx> dense = dense_spectrum(build_realspace(p));

    std::vector<cplx> bloch;
    bloch.reserve(dense.size());
    for (const auto& k : momentum_grid(p)) {
        const cplx e = core_algebra::principal_sqrt(spectrum::eps_squared(p, k));
        bloch.push_back(e);
        bloch.push_back(-e);
    }
    std::sort(bloch.begin(), bloch.end(), lex_less);
    if (bloch.size() != dense.size())
        throw InternalCheckError("crosscheck_spectra: level count mismatch");
    rep.n_levels = static_cast<int>(dense.size());

    // Greedy nearest-unused pairing in lexicographic order.
    std::vector<char> used(bloch.size(), 0);
    double worst = 0.0;
    for (const cplx& x : dense) {
        double best = -1.0;
        size_t bi = 0;
        for (size_t i = 0; i < bloch.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(x - bloch[i]);
            if (best < 0.0 || d < best) {
                best = d;
                bi = i;
            }
        }
        used[bi] = 1;
        worst = std::max(worst, best);
    }

    const double tol = 1e-10 * energy_scale(p);
    if (worst > tol) worst = std::min(worst, bottleneck_distance(dense, bloch));

    rep.max_pairing_distance = worst;
    rep.matched = worst <= tol;
    return rep;
}

namespace {

// |eps^2|^2 and its first/second k-derivatives for the polish stage.
struct Phi {
    double val, gx, gy, hxx, hxy, hyy;
};

Phi phi_at(const ModelParams& p, double kx, double ky) {
    const double w = 1.0 - p.delta, v = p.v_eff(), jj = p.j * p.j;
    const bool has_ky = p.variant != VariantKind::Chain;
    const double V = has_ky ? p.v_of_ky(ky) : 0.0;
    const double A = V + p.v_pot_eff();
    const double dV = has_ky ? -2.0 * p.g * std::sin(ky) : 0.0;
    const double ddV = has_ky ? -2.0 * p.g * std::cos(ky) : 0.0;

    const double re = jj * (w * w + v * v + 2.0 * w * v * std::cos(kx)) + A * A -
                      p.gamma * p.gamma;
    const double im = 2.0 * A * p.gamma;
    const double re_x = -2.0 * jj * w * v * std::sin(kx);
    const double re_xx = -2.0 * jj * w * v * std::cos(kx);
    const double re_y = 2.0 * A * dV;
    const double re_yy = 2.0 * (dV * dV + A * ddV);
    const double im_y = 2.0 * p.gamma * dV;
    const double im_yy = 2.0 * p.gamma * ddV;

    Phi f;
    f.val = re * re + im * im;
    f.gx = 2.0 * re * re_x;
    f.gy = 2.0 * re * re_y + 2.0 * im * im_y;
    f.hxx = 2.0 * (re_x * re_x + re * re_xx);
    f.hxy = 2.0 * re_y * re_x;
    f.hyy = 2.0 * (re_y * re_y + re * re_yy) + 2.0 * (im_y * im_y + im * im_yy);
    return f;
}

} // namespace

MinGapResult min_gap_scan(const ModelParams& p, int grid_n) {
    p.validate();
    if (grid_n < 16) throw std::invalid_argument("min_gap_scan: grid_n must be >= 16");
    const bool has_ky = p.variant != VariantKind::Chain;

    double best = -1.0, bx = 0.0, by = 0.0;
    const int ny = has_ky ? grid_n : 1;
    for (int iy = 0; iy < ny; ++iy) {
        const double ky = has_ky ? -pi + 2.0 * pi * iy / grid_n : 0.0;
        for (int ix = 0; ix < grid_n; ++ix) {
            const double kx = -pi + 2.0 * pi * ix / grid_n;
            const double val = std::abs(spectrum::eps_squared(p, {kx, ky}));
            if (best < 0.0 || val < best) {
                best = val;
                bx = kx;
                by = ky;
            }
        }
    }

    // Damped Newton on |eps^2|^2 from the grid argmin (steepest descent with
    // Armijo backtracking whenever the Hessian is not positive definite).
    double kx = bx, ky = by;
    for (int it = 0; it < 120; ++it) {
        const Phi f = phi_at(p, kx, ky);
        if (f.val < 1e-300) break;
        double sx, sy;
        const double det = f.hxx * f.hyy - f.hxy * f.hxy;
        const bool spd = has_ky ? (f.hxx > 0.0 && det > 0.0) : (f.hxx > 0.0);
        if (spd) {
            if (has_ky) {
                sx = -(f.gx * f.hyy - f.gy * f.hxy) / det;
                sy = -(f.hxx * f.gy - f.hxy * f.gx) / det;
            } else {
                sx = -f.gx / f.hxx;
                sy = 0.0;
            }
        } else {
            sx = -f.gx;
            sy = has_ky ? -f.gy : 0.0;
        }
        const double slope = f.gx * sx + f.gy * sy;
        if (slope >= 0.0) break;
        double t = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 50; ++bt) {
            const Phi trial = phi_at(p, kx + t * sx, ky + t * sy);
            if (trial.val <= f.val + 0.25 * t * slope) {
                kx += t * sx;
                ky += t * sy;
                moved = true;
                break;
            }
            t /= 2.0;
        }
        if (!moved || t * std::hypot(sx, sy) < 1e-14) break;
    }

    double min_abs_e2 = std::abs(spectrum::eps_squared(p, {kx, ky}));

    // Near-zero minima: defer to the certified EP locations, which are refined
    // in long-double precision well past what the double polish can reach.
    const double scale = energy_scale(p);
    if (min_abs_e2 <= 1e-6 * scale * scale) {
        try {
            for (const auto& rec : ep_finder::locate_eps(p)) {
                const auto e2 = spectrum::eps_squared_ld(p, rec.k_c.kx, rec.k_c.ky);
                const double v = static_cast<double>(std::abs(e2));
                if (v < min_abs_e2) {
                    min_abs_e2 = v;
                    kx = rec.k_c.kx;
                    ky = rec.k_c.ky;
                }
            }
        } catch (const DegenerateParamsError&) {
            // keep the polished double minimum
        }
    }

    MinGapResult res;
    res.value = std::sqrt(min_abs_e2);
    res.argmin = {wrap_to_bz(kx), has_ky ? wrap_to_bz(ky) : 0.0};
    return res;
}

} // namespace epband::oracle
