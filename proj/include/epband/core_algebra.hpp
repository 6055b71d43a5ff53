#pragma once

#include <array>
#include <complex>

namespace epband::core_algebra {

using cplx = std::complex<double>;

// A complex 2-vector. Kept minimal on purpose: everything downstream is 2x2.
struct Vec2 {
    cplx u{0.0, 0.0};
    cplx v{0.0, 0.0};

    double norm() const;
};

// Hermitian inner product <a|b> = conj(a).b
cplx dot(const Vec2& a, const Vec2& b);

struct Complex2x2 {
    cplx a11, a12, a21, a22;

    // Throws std::invalid_argument on NaN/Inf entries.
    Complex2x2(cplx m11, cplx m12, cplx m21, cplx m22);

    cplx trace() const { return a11 + a22; }
    cplx det() const { return a11 * a22 - a12 * a21; }
    double frobenius() const;

    Vec2 apply(const Vec2& x) const;
};

struct EigenResult {
    cplx lambda_plus;
    cplx lambda_minus;
    Vec2 vec_plus;
    Vec2 vec_minus;
    // True when the discriminant vanishes (relative to the matrix scale) and
    // the matrix is not a multiple of the identity: a 2x2 Jordan block with a
    // single independent eigenvector. vec_plus and vec_minus then coincide.
    bool defective = false;
};

// Square root with Re >= 0; ties (purely imaginary results) resolved to Im >= 0,
// so the negative real axis maps to +i*sqrt(|z|).
cplx principal_sqrt(cplx z);
std::complex<long double> principal_sqrt(std::complex<long double> z);

// Closed-form eigen-decomposition via the trace/determinant quadratic.
// Eigenvalue labels: lambda_{plus,minus} = trace/2 +- principal_sqrt(disc)/2.
// Eigenvectors are unit-norm with the largest-magnitude component made real
// positive (deterministic phase).
EigenResult eig2(const Complex2x2& m);

// Relative tolerance deciding defectiveness in eig2: |disc| <= tol_ep * fro^2.
inline constexpr double tol_ep = 1e-10;

} // namespace epband::core_algebra
