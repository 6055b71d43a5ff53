#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "epband/core_algebra.hpp"

using namespace epband::core_algebra;

namespace {
const double sqrt2 = std::sqrt(2.0);
const double sqrt3 = std::sqrt(3.0);
} // namespace

TEST_CASE("principal_sqrt on pinned inputs") {
    CHECK(principal_sqrt(cplx(4.0, 0.0)) == cplx(2.0, 0.0));
    CHECK(principal_sqrt(cplx(-1.0, 0.0)) == cplx(0.0, 1.0));

    // -4i has argument -pi/2, so the principal root sits at -pi/4
    cplx r = principal_sqrt(cplx(0.0, -4.0));
    CHECK(r.real() == doctest::Approx(sqrt2).epsilon(1e-15));
    CHECK(r.imag() == doctest::Approx(-sqrt2).epsilon(1e-15));

    // negative real axis resolves upward, including for a -0.0 imaginary part
    CHECK(principal_sqrt(cplx(-4.0, -0.0)) == cplx(0.0, 2.0));
    CHECK(principal_sqrt(cplx(0.0, 0.0)) == cplx(0.0, 0.0));
    CHECK(principal_sqrt(cplx(-0.0, 0.0)) == cplx(0.0, 0.0));
}

TEST_CASE("principal_sqrt branch and square-back over random inputs") {
    std::mt19937 rng(20260822u);
    std::uniform_real_distribution<double> mag(1e-6, 1e6);
    std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
    for (int i = 0; i < 2000; ++i) {
        cplx z = std::polar(mag(rng), ang(rng));
        cplx r = principal_sqrt(z);
        CHECK(r.real() >= 0.0);
        if (r.real() == 0.0) CHECK(r.imag() >= 0.0);
        CHECK(std::abs(r * r - z) <= 1e-12 * std::abs(z));
    }
    // long-double overload agrees with the double one
    std::complex<long double> zl(-2.0L, 0.0L);
    auto rl = principal_sqrt(zl);
    CHECK(static_cast<double>(rl.real()) == 0.0);
    CHECK(static_cast<double>(rl.imag()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("Vec2 norm and inner product") {
    Vec2 a{cplx(1.0, 0.0), cplx(0.0, 1.0)};
    Vec2 b{cplx(0.0, 2.0), cplx(1.0, 0.0)};
    CHECK(a.norm() == doctest::Approx(sqrt2));
    // <a|b> = conj(a).b
    cplx d = dot(a, b);
    CHECK(d.real() == doctest::Approx(0.0));
    CHECK(d.imag() == doctest::Approx(2.0 - 1.0));
    CHECK(dot(a, a).real() == doctest::Approx(2.0));
    CHECK(dot(a, a).imag() == doctest::Approx(0.0));
}

TEST_CASE("Complex2x2 basics and the non-finite guard") {
    Complex2x2 m(cplx(1.0, 1.0), cplx(2.0, 0.0), cplx(0.0, -1.0), cplx(-1.0, 0.0));
    CHECK(m.trace() == cplx(0.0, 1.0));
    CHECK(m.det() == cplx(1.0, 1.0) * cplx(-1.0, 0.0) - cplx(2.0, 0.0) * cplx(0.0, -1.0));
    CHECK(m.frobenius() == doctest::Approx(std::sqrt(2.0 + 4.0 + 1.0 + 1.0)));

    Vec2 x{cplx(1.0, 0.0), cplx(0.0, 1.0)};
    Vec2 y = m.apply(x);
    CHECK(y.u == m.a11 * x.u + m.a12 * x.v);
    CHECK(y.v == m.a21 * x.u + m.a22 * x.v);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Complex2x2(cplx(nan, 0.0), 0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Complex2x2(0.0, cplx(0.0, inf), 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("eig2 on sigma_x") {
    Complex2x2 sx(0.0, 1.0, 1.0, 0.0);
    EigenResult r = eig2(sx);
    CHECK_FALSE(r.defective);
    CHECK(r.lambda_plus == cplx(1.0, 0.0));
    CHECK(r.lambda_minus == cplx(-1.0, 0.0));
    // deterministic phase: largest component real positive
    CHECK(r.vec_plus.u.real() == doctest::Approx(1.0 / sqrt2).epsilon(1e-15));
    CHECK(r.vec_plus.v.real() == doctest::Approx(1.0 / sqrt2).epsilon(1e-15));
    CHECK(std::abs(r.vec_plus.u.imag()) < 1e-15);
    CHECK(r.vec_minus.u.real() == doctest::Approx(1.0 / sqrt2).epsilon(1e-15));
    CHECK(r.vec_minus.v.real() == doctest::Approx(-1.0 / sqrt2).epsilon(1e-15));
}

TEST_CASE("eig2 on a traceless anti-Hermitian Bloch-like matrix") {
    // eigenvalues +-i; this is h(pi, pi/2) of the reference gain/loss sheet
    Complex2x2 m(cplx(0.0, -sqrt3), cplx(sqrt2, 0.0), cplx(sqrt2, 0.0), cplx(0.0, sqrt3));
    EigenResult r = eig2(m);
    CHECK_FALSE(r.defective);
    CHECK(r.lambda_plus.real() == 0.0);
    CHECK(r.lambda_plus.imag() == doctest::Approx(1.0));
    CHECK(r.lambda_minus.imag() == doctest::Approx(-1.0));
    for (const Vec2* v : {&r.vec_plus, &r.vec_minus}) {
        CHECK(v->norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("eig2 flags the Jordan block as defective") {
    Complex2x2 j(0.0, 1.0, 0.0, 0.0);
    EigenResult r = eig2(j);
    CHECK(r.defective);
    CHECK(r.lambda_plus == cplx(0.0, 0.0));
    CHECK(r.lambda_minus == cplx(0.0, 0.0));
    // single independent eigenvector (1, 0), shared by both slots
    CHECK(r.vec_plus.u.real() == doctest::Approx(1.0));
    CHECK(std::abs(r.vec_plus.v) < 1e-15);
    CHECK(std::abs(r.vec_plus.u - r.vec_minus.u) < 1e-15);
    CHECK(std::abs(r.vec_plus.v - r.vec_minus.v) < 1e-15);
}

TEST_CASE("eig2 does not call a scalar matrix defective") {
    Complex2x2 s(cplx(2.0, -1.0), 0.0, 0.0, cplx(2.0, -1.0));
    EigenResult r = eig2(s);
    CHECK_FALSE(r.defective);
    CHECK(r.lambda_plus == cplx(2.0, -1.0));
    CHECK(r.lambda_minus == cplx(2.0, -1.0));
    // basis vectors, not a collapsed frame
    CHECK(std::abs(dot(r.vec_plus, r.vec_minus)) < 1e-15);
}

TEST_CASE("eig2 residuals and invariants over random matrices") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> c(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        Complex2x2 m(cplx(c(rng), c(rng)), cplx(c(rng), c(rng)), cplx(c(rng), c(rng)),
                     cplx(c(rng), c(rng)));
        EigenResult r = eig2(m);
        double scale = m.frobenius();
        CHECK(std::abs(r.lambda_plus + r.lambda_minus - m.trace()) <= 1e-12 * scale);
        CHECK(std::abs(r.lambda_plus * r.lambda_minus - m.det()) <= 1e-12 * scale * scale);
        if (!r.defective) {
            Vec2 rp = m.apply(r.vec_plus);
            Vec2 rm = m.apply(r.vec_minus);
            Vec2 dp{rp.u - r.lambda_plus * r.vec_plus.u, rp.v - r.lambda_plus * r.vec_plus.v};
            Vec2 dm{rm.u - r.lambda_minus * r.vec_minus.u,
                    rm.v - r.lambda_minus * r.vec_minus.v};
            CHECK(dp.norm() <= 1e-12 * scale);
            CHECK(dm.norm() <= 1e-12 * scale);
            CHECK(r.vec_plus.norm() == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(r.vec_minus.norm() == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}
