#include "epband/core_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace epband::core_algebra {

double Vec2::norm() const { return std::sqrt(std::norm(u) + std::norm(v)); }

cplx dot(const Vec2& a, const Vec2& b) {
    return std::conj(a.u) * b.u + std::conj(a.v) * b.v;
}

static bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex2x2::Complex2x2(cplx m11, cplx m12, cplx m21, cplx m22)
    : a11(m11), a12(m12), a21(m21), a22(m22) {
    if (!finite(a11) || !finite(a12) || !finite(a21) || !finite(a22))
        throw std::invalid_argument("Complex2x2: non-finite entry");
}

double Complex2x2::frobenius() const {
    return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
}

Vec2 Complex2x2::apply(const Vec2& x) const {
    return {a11 * x.u + a12 * x.v, a21 * x.u + a22 * x.v};
}

template <typename T>
static std::complex<T> psqrt(std::complex<T> z) {
    std::complex<T> r = std::sqrt(z);
    // std::sqrt already lands in Re >= 0; pin the two ambiguous edges so that
    // negative reals give +i sqrt(|z|) and -0 real parts do not leak through.
    if (r.real() < T(0) || (r.real() == T(0) && r.imag() < T(0))) r = -r;
    if (r.real() == T(0)) r = std::complex<T>(T(0), r.imag()); // drop -0
    return r;
}

cplx principal_sqrt(cplx z) { return psqrt(z); }
std::complex<long double> principal_sqrt(std::complex<long double> z) { return psqrt(z); }

// Deterministic phase: rotate so the largest-magnitude component is real > 0.
static Vec2 canonical_unit(Vec2 x) {
    double n = x.norm();
    if (n == 0.0) return x;
    x.u /= n;
    x.v /= n;
    cplx lead = std::abs(x.u) >= std::abs(x.v) ? x.u : x.v;
    double m = std::abs(lead);
    if (m > 0.0) {
        cplx phase = std::conj(lead) / m;
        x.u *= phase;
        x.v *= phase;
    }
    return x;
}

// Eigenvector for a given eigenvalue from the adjugate of (m - lambda I):
// columns (a22-l, -a21) and (-a12, a11-l); the larger one is well conditioned.
static Vec2 eigvec_for(const Complex2x2& m, cplx lambda, double scale) {
    Vec2 col1{m.a22 - lambda, -m.a21};
    Vec2 col2{-m.a12, m.a11 - lambda};
    Vec2 pick = col1.norm() >= col2.norm() ? col1 : col2;
    if (pick.norm() <= 1e-14 * scale) {
        // (m - lambda I) ~ 0: scalar matrix, any basis vector works.
        pick = std::abs(m.a11 - lambda) <= std::abs(m.a22 - lambda)
                   ? Vec2{1.0, 0.0}
                   : Vec2{0.0, 1.0};
    }
    return canonical_unit(pick);
}

EigenResult eig2(const Complex2x2& m) {
    const cplx tr = m.trace();
    const cplx dt = m.det();
    const cplx disc = tr * tr - 4.0 * dt;
    const double fro = m.frobenius();
    const double scale = fro > 0.0 ? fro : 1.0;

    EigenResult r;
    const cplx root = principal_sqrt(disc);
    r.lambda_plus = (tr + root) / 2.0;
    r.lambda_minus = (tr - root) / 2.0;

    const bool scalar_like =
        std::abs(m.a12) <= 1e-14 * scale && std::abs(m.a21) <= 1e-14 * scale &&
        std::abs(m.a11 - m.a22) <= 1e-14 * scale;

    if (std::abs(disc) <= tol_ep * scale * scale && !scalar_like) {
        r.defective = true;
        r.lambda_plus = r.lambda_minus = tr / 2.0;
        r.vec_plus = r.vec_minus = eigvec_for(m, r.lambda_plus, scale);
        return r;
    }

    r.vec_plus = eigvec_for(m, r.lambda_plus, scale);
    r.vec_minus = eigvec_for(m, r.lambda_minus, scale);
    return r;
}

} // namespace epband::core_algebra
