#include "epband/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "epband/errors.hpp"

namespace epband::spectrum {

using core_algebra::principal_sqrt;
using lattice_model::energy_scale;
using lattice_model::VariantKind;

cplx eps_squared(const ModelParams& p, Momentum k) {
    const double w = 1.0 - p.delta;
    const double v = p.v_eff();
    const cplx d(p.v_of_ky(k.ky) + p.v_pot_eff(), p.gamma);
    return p.j * p.j * (w * w + v * v + 2.0 * w * v * std::cos(k.kx)) + d * d;
}

std::complex<long double> eps_squared_ld(const ModelParams& p, long double kx, long double ky) {
    using C = std::complex<long double>;
    const long double w = 1.0L - static_cast<long double>(p.delta);
    const long double v = static_cast<long double>(p.v_eff());
    long double vk = 0.0L;
    if (p.variant != VariantKind::Chain) vk = 2.0L * static_cast<long double>(p.g) * std::cos(ky);
    const C d(vk + static_cast<long double>(p.v_pot_eff()), static_cast<long double>(p.gamma));
    const long double jj = static_cast<long double>(p.j);
    return jj * jj * (w * w + v * v + 2.0L * w * v * std::cos(kx)) + d * d;
}

PointClass classify_point(const ModelParams& p, Momentum k) {
    p.validate();
    const cplx e2 = eps_squared(p, k);
    const double s2 = energy_scale(p) * energy_scale(p);
    if (std::abs(e2) <= tol_ep_class * s2) return PointClass::EP;
    if (std::abs(e2.imag()) <= tol_real * s2 && e2.real() > 0.0) return PointClass::RealPair;
    return PointClass::ImaginaryPair;
}

namespace {

// Right eigenvector of h for eigenvalue lambda, in the explicit column form
// used throughout: primary column (h22 - lambda, -h21) whose upper entry is
// V + v_pot + i gamma + eps for the minus branch; falls back to the other
// adjugate column, then to a basis vector when h is (numerically) diagonal.
core_algebra::Vec2 right_raw(const core_algebra::Complex2x2& h, cplx lambda, double scale) {
    core_algebra::Vec2 a{h.a22 - lambda, -h.a21};
    if (a.norm() > 1e-13 * scale) return a;
    core_algebra::Vec2 b{-h.a12, h.a11 - lambda};
    if (b.norm() > 1e-13 * scale) return b;
    return std::abs(h.a11 - lambda) <= std::abs(h.a22 - lambda)
               ? core_algebra::Vec2{1.0, 0.0}
               : core_algebra::Vec2{0.0, 1.0};
}

core_algebra::Complex2x2 dagger(const core_algebra::Complex2x2& h) {
    return {std::conj(h.a11), std::conj(h.a21), std::conj(h.a12), std::conj(h.a22)};
}

core_algebra::Vec2 unit(core_algebra::Vec2 x) {
    const double n = x.norm();
    x.u /= n;
    x.v /= n;
    return x;
}

} // namespace

BandPoint band_pair(const ModelParams& p, Momentum k) {
    p.validate();
    BandPoint out;
    out.k = k;
    const cplx e2 = eps_squared(p, k);
    out.eps = principal_sqrt(e2);
    out.classification = classify_point(p, k);

    const auto h = lattice_model::build_bloch(p, k);
    const double scale = h.frobenius() > 0.0 ? h.frobenius() : 1.0;
    out.vec_minus = unit(right_raw(h, -out.eps, scale));
    if (out.classification == PointClass::EP) {
        out.vec_plus = out.vec_minus; // coalesced
    } else {
        out.vec_plus = unit(right_raw(h, out.eps, scale));
    }
    return out;
}

BiorthPair biorthogonal_pair(const ModelParams& p, Momentum k) {
    p.validate();
    if (p.variant != VariantKind::Chain)
        throw std::invalid_argument("biorthogonal_pair: Chain variant only");

    const auto h = lattice_model::build_bloch(p, k);
    const auto hd = dagger(h);
    const double scale = h.frobenius() > 0.0 ? h.frobenius() : 1.0;
    const cplx e2 = eps_squared(p, k);
    const cplx eps = principal_sqrt(e2);

    core_algebra::Vec2 rm = right_raw(h, -eps, scale);
    core_algebra::Vec2 rp = right_raw(h, eps, scale);
    // Left vectors labeled by their h^dagger eigenvalue as a number.
    core_algebra::Vec2 lm = right_raw(hd, -eps, scale);
    core_algebra::Vec2 lp = right_raw(hd, eps, scale);

    // Matched pairs: delta_{a,b} in the real region, delta_{a,-b} otherwise.
    // Anchor on the right vectors: g_m is the norm of the pair holding
    // right_minus, whichever left vector that pairs it with.
    const bool real_region = classify_point(p, k) == PointClass::RealPair;
    core_algebra::Vec2& left_of_rm = real_region ? lm : lp;
    core_algebra::Vec2& left_of_rp = real_region ? lp : lm;

    const cplx g_m = core_algebra::dot(left_of_rm, rm);
    const cplx g_p = core_algebra::dot(left_of_rp, rp);
    if (std::abs(g_m) < 1e-8 * energy_scale(p) || std::abs(g_p) < 1e-8 * energy_scale(p))
        throw CoalescentError("biorthogonal_pair: frame degenerates near an EP");

    // right /= s, left /= conj(s) with s^2 = G makes <left|right> exactly 1.
    auto rescale = [](core_algebra::Vec2& l, core_algebra::Vec2& r, cplx gram) {
        const cplx s = principal_sqrt(gram);
        r.u /= s;
        r.v /= s;
        const cplx sc = std::conj(s);
        l.u /= sc;
        l.v /= sc;
    };
    rescale(left_of_rm, rm, g_m);
    rescale(left_of_rp, rp, g_p);

    BiorthPair out;
    out.right_minus = rm;
    out.right_plus = rp;
    out.left_minus = lm;
    out.left_plus = lp;
    out.omega = g_m;
    return out;
}

} // namespace epband::spectrum
