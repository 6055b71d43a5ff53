#include "epband/symmetry.hpp"

#include <cmath>
#include <complex>

#include "epband/errors.hpp"

namespace epband::symmetry {

using core_algebra::cplx;
using core_algebra::dot;
using core_algebra::Vec2;
using lattice_model::VariantKind;

double qx_expectation(const ModelParams& p, Momentum k) {
    const auto bo = spectrum::biorthogonal_pair(p, k); // enforces Chain, throws near EPs
    const bool real_region = spectrum::classify_point(p, k) == spectrum::PointClass::RealPair;
    // The partner of right_minus under the antilinear pairing carries the
    // conjugated eigenvalue: -eps itself when real, +eps when imaginary.
    const Vec2& left = real_region ? bo.left_minus : bo.left_plus;
    const Vec2& right = bo.right_minus;
    const Vec2 sx_conj_right{std::conj(right.v), std::conj(right.u)};
    const double q = std::abs(dot(left, sx_conj_right));
    if (std::min(std::abs(q), std::abs(q - 1.0)) > 1e-8)
        throw InternalCheckError("qx_expectation: value is not within 1e-8 of 0 or 1");
    return q;
}

double symmetry_defect(const Complex2x2& h) {
    const cplx d11 = std::conj(h.a22) - h.a11;
    const cplx d12 = std::conj(h.a21) - h.a12;
    const cplx d21 = std::conj(h.a12) - h.a21;
    const cplx d22 = std::conj(h.a11) - h.a22;
    return std::sqrt(std::norm(d11) + std::norm(d12) + std::norm(d21) + std::norm(d22));
}

SymmetryReport make_report(const ModelParams& p, Momentum k) {
    SymmetryReport rep;
    rep.k = k;
    rep.phase = spectrum::classify_point(p, k);
    rep.defect_norm = symmetry_defect(lattice_model::build_bloch(p, k));
    if (p.variant == VariantKind::Chain && rep.phase != spectrum::PointClass::EP)
        rep.indicator = qx_expectation(p, k);
    return rep;
}

} // namespace epband::symmetry
