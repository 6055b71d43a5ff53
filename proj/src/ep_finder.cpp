#include "epband/ep_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "epband/errors.hpp"
#include "epband/spectrum.hpp"

namespace epband::ep_finder {

using lattice_model::energy_scale;
using lattice_model::VariantKind;
using lattice_model::wrap_to_bz;

namespace {

constexpr long double pi_ld = std::numbers::pi_v<long double>;
constexpr double pi = std::numbers::pi;

// Boundary-merge window on rho (and on cos ky): inside it the two roots are
// numerically indistinguishable and the midpoint satisfies the residual bound.
constexpr long double merge_eps = 1e-18L;

struct LdParams {
    long double j, w, v, gamma, g, vp;
    bool has_ky; // false for Chain
};

LdParams ld_of(const ModelParams& p) {
    LdParams q;
    q.j = p.j;
    q.w = 1.0L - static_cast<long double>(p.delta);
    q.v = p.v_eff();
    q.gamma = p.gamma;
    q.g = p.variant == VariantKind::Chain ? 0.0L : static_cast<long double>(p.g);
    q.vp = p.v_pot_eff();
    q.has_ky = p.variant != VariantKind::Chain;
    return q;
}

// eps^2 split into (Re, Im) plus the partial derivatives used by Newton.
struct E2 {
    long double re, im;
    long double re_x, re_y, im_y; // d/dkx of Re, d/dky of Re and Im (im_x = 0)
};

E2 eval(const LdParams& q, long double kx, long double ky) {
    const long double V = q.has_ky ? 2.0L * q.g * std::cos(ky) : 0.0L;
    const long double A = V + q.vp;
    const long double jj = q.j * q.j;
    const long double dV = q.has_ky ? -2.0L * q.g * std::sin(ky) : 0.0L;
    E2 e;
    e.re = jj * (q.w * q.w + q.v * q.v + 2.0L * q.w * q.v * std::cos(kx)) + A * A - q.gamma * q.gamma;
    e.im = 2.0L * A * q.gamma;
    e.re_x = -2.0L * jj * q.w * q.v * std::sin(kx);
    e.re_y = 2.0L * A * dV;
    e.im_y = 2.0L * q.gamma * dV;
    return e;
}

// Newton polish of one seed. fix_x / fix_y hold a coordinate that is exact by
// symmetry (merged roots at kx = 0 / -pi sit on stationary lines of Re eps^2).
void refine(const LdParams& q, long double& kx, long double& ky, bool fix_x, bool fix_y) {
    for (int it = 0; it < 60; ++it) {
        const E2 e = eval(q, kx, ky);
        long double dx = 0.0L, dy = 0.0L;
        if (!fix_y && q.has_ky) {
            if (std::abs(e.im_y) > 1e-30L) dy = e.im / e.im_y;
        }
        if (!fix_x) {
            if (std::abs(e.re_x) > 1e-30L) dx = (e.re - e.re_y * dy) / e.re_x;
        }
        const long double cap = 0.1L;
        dx = std::clamp(dx, -cap, cap);
        dy = std::clamp(dy, -cap, cap);
        kx -= dx;
        ky -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-21L) break;
    }
}

// Independent certification route: |eps| from the trace/determinant quadratic
// of the Bloch matrix assembled entrywise in long double.
long double eps_abs_via_matrix(const LdParams& q, long double kx, long double ky) {
    using C = std::complex<long double>;
    const long double V = q.has_ky ? 2.0L * q.g * std::cos(ky) : 0.0L;
    const C d(V + q.vp, q.gamma);
    const C f = q.w + q.v * std::exp(C(0.0L, kx));
    const C fm = q.w + q.v * std::exp(C(0.0L, -kx));
    // h = [[-d, -J fm], [-J f, d]]; trace 0, so lambda^2 = -det.
    const C det = (-d) * d - (q.j * fm) * (q.j * f);
    return std::sqrt(std::abs(core_algebra::principal_sqrt(-det)));
}

} // namespace

std::vector<EPRecord> locate_eps(const ModelParams& p) {
    p.validate();
    if (p.gamma == 0.0) return {}; // Hermitian degeneracies are not EPs

    const LdParams q = ld_of(p);
    const long double u = q.gamma / (2.0L * q.j);
    const long double shift = p.variant == VariantKind::HoppingPerturbed
                                  ? static_cast<long double>(p.t_d) / 2.0L
                                  : 0.0L;
    const long double den = q.w * q.v;
    if (std::abs(den) < 1e-12L)
        throw DegenerateParamsError("locate_eps: (1-delta)(1+delta+t_d) below 1e-12");
    const long double dd = static_cast<long double>(p.delta) + shift;
    long double rho = (u * u - dd * dd) / den;
    if (rho < -merge_eps || rho > 1.0L + merge_eps) return {};
    rho = std::clamp(rho, 0.0L, 1.0L);

    // kx roots of cos^2(kx/2) = rho; merged single root on the boundary lines.
    std::vector<std::pair<long double, bool>> kxs; // (value, held fixed)
    if (rho >= 1.0L - merge_eps) {
        kxs = {{0.0L, true}};
    } else if (rho <= merge_eps) {
        kxs = {{-pi_ld, true}};
    } else {
        const long double kx = 2.0L * std::acos(std::sqrt(rho));
        kxs = {{-kx, false}, {kx, false}};
    }

    // ky roots of V_k + v_pot = 0 (the Im eps^2 = 0 condition at gamma > 0).
    std::vector<std::pair<long double, bool>> kys;
    if (!q.has_ky) {
        kys = {{0.0L, true}};
    } else {
        if (std::abs(q.g) < 1e-12L) {
            if (std::abs(q.vp) < 1e-12L)
                throw DegenerateParamsError("locate_eps: g = 0 makes the EP locus a line in ky");
            return {}; // Im eps^2 = 2 v_pot gamma never vanishes
        }
        const long double c = -q.vp / (2.0L * q.g);
        if (c < -1.0L - merge_eps || c > 1.0L + merge_eps) return {};
        if (c >= 1.0L - merge_eps) {
            kys = {{0.0L, true}};
        } else if (c <= -1.0L + merge_eps) {
            kys = {{-pi_ld, true}};
        } else {
            const long double ky = std::acos(std::clamp(c, -1.0L, 1.0L));
            kys = {{-ky, false}, {ky, false}};
        }
    }

    const double scale = energy_scale(p);
    std::vector<EPRecord> out;
    for (auto [ky0, fy] : kys) {
        for (auto [kx0, fx] : kxs) {
            long double kx = kx0, ky = ky0;
            refine(q, kx, ky, fx, fy);
            EPRecord rec;
            rec.k_c = {wrap_to_bz(static_cast<double>(kx)), wrap_to_bz(static_cast<double>(ky))};
            rec.residual = static_cast<double>(std::abs(spectrum::eps_squared_ld(p, kx, ky)));
            if (rec.residual > 1e-18 * scale * scale)
                throw InternalCheckError("locate_eps: refined residual exceeds 1e-18 * scale^2");
            if (eps_abs_via_matrix(q, kx, ky) > 1e-9L * scale)
                throw InternalCheckError("locate_eps: |eps| certification failed");
            out.push_back(rec);
        }
    }
    std::sort(out.begin(), out.end(), [](const EPRecord& a, const EPRecord& b) {
        if (a.k_c.kx != b.k_c.kx) return a.k_c.kx < b.k_c.kx;
        return a.k_c.ky < b.k_c.ky;
    });
    return out;
}

PhaseRegion classify_phase(double delta, double gamma_over_2j) {
    const double u2 = gamma_over_2j * gamma_over_2j;
    const double d2 = delta * delta;
    if ((u2 - d2) * (u2 - 1.0) < 0.0) return PhaseRegion::Broken;
    const double au = std::abs(gamma_over_2j);
    if (std::abs(au - std::abs(delta)) <= 1e-12 || std::abs(au - 1.0) <= 1e-12)
        return PhaseRegion::Boundary;
    if (au < std::abs(delta)) return PhaseRegion::RealGapped;
    return PhaseRegion::ImaginaryGapped;
}

bool EPDomain::contains(double delta, double u) const {
    const double den = (1.0 - delta) * (1.0 + delta + t_d);
    if (std::abs(den) < 1e-12) return false; // type-I/II parameter lines
    const double dd = delta + t_d / 2.0;
    const double rho = (u * u - dd * dd) / den;
    return rho >= 0.0 && rho <= 1.0;
}

std::vector<std::vector<std::array<double, 2>>> EPDomain::boundary_polylines() const {
    std::vector<std::vector<std::array<double, 2>>> lines;
    const int n = 121;
    auto line = [&](auto f) {
        std::vector<std::array<double, 2>> pl;
        pl.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double d = -1.5 + 3.0 * i / (n - 1);
            pl.push_back({d, f(d)});
        }
        lines.push_back(std::move(pl));
    };
    line([&](double d) { return d + t_d / 2.0; });    // rho = 0
    line([&](double d) { return -(d + t_d / 2.0); }); // rho = 0, mirror
    line([&](double) { return 1.0 + t_d / 2.0; });    // rho = 1
    line([&](double) { return -(1.0 + t_d / 2.0); }); // rho = 1, mirror
    return lines;
}

EPDomain ep_domain_perturbed(double t_d) {
    if (!std::isfinite(t_d)) throw std::invalid_argument("ep_domain_perturbed: t_d must be finite");
    return EPDomain{t_d};
}

} // namespace epband::ep_finder
