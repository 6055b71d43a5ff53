#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "epband/ep_finder.hpp"
#include "epband/errors.hpp"
#include "epband/spectrum.hpp"
#include "epband/topo_field.hpp"

using namespace epband;
using namespace epband::topo_field;
using lattice_model::ModelParams;
using lattice_model::Momentum;
using lattice_model::VariantKind;

namespace {
constexpr double pi = std::numbers::pi;
const double sqrt2 = std::sqrt(2.0);
const double sqrt3 = std::sqrt(3.0);

ModelParams sheet(double delta, double gamma, double g = 1.0) {
    ModelParams p;
    p.delta = delta;
    p.gamma = gamma;
    p.g = g;
    p.n_cells = 8;
    p.n_chains = 4;
    return p;
}

ModelParams chain(double delta, double gamma) {
    ModelParams p;
    p.variant = VariantKind::Chain;
    p.delta = delta;
    p.gamma = gamma;
    p.n_cells = 8;
    return p;
}

ModelParams fig3a() { return sheet(std::sqrt(0.5), sqrt3); }
} // namespace

TEST_CASE("auxiliary_b pinned values") {
    auto b = auxiliary_b(sheet(0.3, 0.5), {0.0, 0.0});
    CHECK(b[0].real() == doctest::Approx(-2.0));
    CHECK(b[0].imag() == 0.0);
    CHECK(b[1].real() == doctest::Approx(0.0).scale(1.0));
    CHECK(b[2].real() == doctest::Approx(-2.0));
    CHECK(b[2].imag() == doctest::Approx(-0.5));

    auto c = auxiliary_b(chain(0.0, 0.0), {pi, 0.0});
    CHECK(c[0].real() == doctest::Approx(0.0).scale(1.0));
    CHECK(std::abs(c[1]) < 1e-15);
    CHECK(std::abs(c[2]) < 1e-15);
}

TEST_CASE("B . B reproduces eps^2") {
    std::mt19937 rng(41u);
    std::uniform_real_distribution<double> kd(-pi, pi), dd(-0.8, 0.8), gm(0.0, 2.0),
        gg(-1.5, 1.5);
    for (int i = 0; i < 300; ++i) {
        ModelParams p = sheet(dd(rng), gm(rng), gg(rng));
        Momentum k{kd(rng), kd(rng)};
        auto b = auxiliary_b(p, k);
        const cplx sum = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
        const cplx e2 = spectrum::eps_squared(p, k);
        CHECK(std::abs(sum - e2) <= 1e-12 * (1.0 + std::abs(e2)));
    }
}

TEST_CASE("field_f pinned values") {
    // chain, delta 0, gamma 1 at k = 0
    FieldSample s = field_f(chain(0.0, 1.0), {0.0, 0.0});
    CHECK_FALSE(s.at_ep);
    CHECK(s.fx == doctest::Approx(-sqrt3).epsilon(1e-12));
    CHECK(std::abs(s.fy) < 1e-12);

    // Hermitian sheet at (pi/2, pi/2)
    FieldSample h = field_f(sheet(0.0, 0.0), {pi / 2, pi / 2});
    CHECK(h.fx == doctest::Approx(-sqrt2).epsilon(1e-12));
    CHECK(std::abs(h.fy) < 1e-12);

    // at an EP the sample is flagged and zeroed
    FieldSample e = field_f(fig3a(), {pi / 2, pi / 2});
    CHECK(e.at_ep);
    CHECK(e.fx == 0.0);
    CHECK(e.fy == 0.0);
}

TEST_CASE("KLoop::circle closes exactly") {
    KLoop loop = KLoop::circle({0.3, -0.4}, 0.25, 16);
    REQUIRE(loop.pts.size() == 17);
    CHECK(loop.pts.front().kx == loop.pts.back().kx);
    CHECK(loop.pts.front().ky == loop.pts.back().ky);
    CHECK(loop.pts[0].kx == doctest::Approx(0.55));
    CHECK(loop.pts[4].ky == doctest::Approx(-0.15));
    CHECK_THROWS_AS(KLoop::circle({0.0, 0.0}, -1.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(KLoop::circle({0.0, 0.0}, 0.1, 2), std::invalid_argument);
}

TEST_CASE("winding picks up half-integer charges around single EPs") {
    ModelParams p = fig3a();
    const double w1 = winding_number(p, KLoop::circle({pi / 2, pi / 2}, 0.2));
    CHECK(w1 == doctest::Approx(0.5).epsilon(1e-6));
    const double w2 = winding_number(p, KLoop::circle({-pi / 2, -pi / 2}, 0.2));
    CHECK(w2 == doctest::Approx(0.5).epsilon(1e-6));
    const double w3 = winding_number(p, KLoop::circle({pi / 2, -pi / 2}, 0.2));
    CHECK(w3 == doctest::Approx(-0.5).epsilon(1e-6));
    const double w4 = winding_number(p, KLoop::circle({-pi / 2, pi / 2}, 0.2));
    CHECK(w4 == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("winding vanishes away from EPs and over opposite pairs") {
    ModelParams p = fig3a();
    CHECK(std::abs(winding_number(p, KLoop::circle({0.0, 0.0}, 0.2))) < 1e-9);
    // radius 2 circle encloses the +1/2 and -1/2 EPs at kx = pi/2 together
    CHECK(std::abs(winding_number(p, KLoop::circle({pi / 2, 0.0}, 2.0, 128))) < 1e-6);
}

TEST_CASE("merged EPs carry zero charge") {
    ModelParams p = sheet(std::sqrt(0.5), 2.0);
    CHECK(std::abs(winding_number(p, KLoop::circle({0.0, pi / 2}, 0.05))) < 1e-9);
    CHECK(std::abs(winding_number(p, KLoop::circle({0.0, pi / 2}, 0.2))) < 1e-9);
}

TEST_CASE("winding rejects malformed loops") {
    ModelParams p = fig3a();
    KLoop open;
    open.pts = {{0.0, 0.0}, {0.1, 0.0}, {0.1, 0.1}, {0.0, 0.1}};
    CHECK_THROWS_AS(winding_number(p, open), std::invalid_argument);
    KLoop tiny;
    tiny.pts = {{0.0, 0.0}, {0.1, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(winding_number(p, tiny), std::invalid_argument);
}

TEST_CASE("a loop through an EP is refused") {
    ModelParams p = fig3a();
    // the 4-segment circle has its top point exactly on the EP
    KLoop through = KLoop::circle({pi / 2, pi / 2 - 0.05}, 0.05, 4);
    CHECK_THROWS_AS(winding_number(p, through), LoopThroughEPError);
}

TEST_CASE("near_ep_asymptote pinned values") {
    ModelParams p = fig3a();
    auto eps = ep_finder::locate_eps(p);
    REQUIRE(eps.size() == 4);
    Momentum kc{0.0, 0.0};
    for (const auto& r : eps)
        if (r.k_c.kx > 0 && r.k_c.ky > 0) kc = r.k_c;

    auto fy = near_ep_asymptote(p, kc, {0.0, 1e-4});
    CHECK(fy[0] == doctest::Approx(-0.018612097182).epsilon(1e-9));
    CHECK(fy[1] == doctest::Approx(-0.0107456993182).epsilon(1e-9));

    auto fx = near_ep_asymptote(p, kc, {1e-4, 0.0});
    CHECK(std::abs(fx[0]) < 1e-12);
    CHECK(fx[1] == doctest::Approx(0.0057735026919).epsilon(1e-9));

    auto z = near_ep_asymptote(p, kc, {0.0, 0.0});
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);

    CHECK_THROWS_AS(near_ep_asymptote(sheet(0.5, 0.0), kc, {1e-4, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("asymptote tracks the exact field near the EP") {
    ModelParams p = fig3a();
    auto eps = ep_finder::locate_eps(p);
    Momentum kc{0.0, 0.0};
    for (const auto& r : eps)
        if (r.k_c.kx > 0 && r.k_c.ky > 0) kc = r.k_c;

    for (double h : {1e-3, 1e-4}) {
        const double cap = h == 1e-3 ? 0.05 : 0.005;
        for (auto dk : {std::array<double, 2>{h, 0.0}, std::array<double, 2>{0.0, h}}) {
            auto a = near_ep_asymptote(p, kc, dk);
            FieldSample s = field_f(p, {kc.kx + dk[0], kc.ky + dk[1]});
            REQUIRE_FALSE(s.at_ep);
            const double num = std::hypot(s.fx - a[0], s.fy - a[1]);
            const double den = std::hypot(a[0], a[1]);
            CHECK(num / den <= cap);
        }
    }
}

TEST_CASE("kink_profile locates the derivative kinks of the chain") {
    ModelParams p = chain(0.0, 1.0);
    KinkReport rep = kink_profile(p, 256);
    REQUIRE(rep.samples.size() == 256);
    CHECK(rep.samples.front().k.kx == doctest::Approx(-pi));
    REQUIRE(rep.kink_positions.size() == 2);
    CHECK(rep.kink_positions[0] == doctest::Approx(-2.0 * pi / 3.0).epsilon(1e-9));
    CHECK(rep.kink_positions[1] == doctest::Approx(2.0 * pi / 3.0).epsilon(1e-9));
    for (const auto& s : rep.samples) {
        if (std::abs(s.k.kx) < 2.0) CHECK(std::abs(s.fy) <= 1e-12); // exact zero plateau
        if (std::abs(s.k.kx) > 2.2 && !s.at_ep) CHECK(std::abs(s.fy) > 1e-3);
    }

    CHECK(kink_profile(chain(std::sqrt(0.5), 0.0), 64).kink_positions.empty());

    auto merged = kink_profile(chain(std::sqrt(0.5), std::sqrt(2.0)), 64);
    REQUIRE(merged.kink_positions.size() == 1);
    CHECK(merged.kink_positions[0] == doctest::Approx(-pi));

    CHECK_THROWS_AS(kink_profile(fig3a(), 64), std::invalid_argument);
    CHECK_THROWS_AS(kink_profile(p, 1), std::invalid_argument);
}

TEST_CASE("fill_charges annotates the EP records in place") {
    ModelParams p = fig3a();
    auto eps = ep_finder::locate_eps(p);
    fill_charges(p, eps);
    double sum = 0.0;
    for (const auto& r : eps) {
        CHECK(r.charge_set);
        CHECK(std::abs(std::abs(r.charge) - 0.5) < 1e-6);
        // the quadrant pattern: positive product of momenta carries +1/2
        const double want = r.k_c.kx * r.k_c.ky > 0 ? 0.5 : -0.5;
        CHECK(r.charge == doctest::Approx(want).epsilon(1e-6));
        sum += r.charge;
    }
    CHECK(std::abs(sum) < 1e-6);
}

TEST_CASE("chain EP lines cannot be encircled") {
    // F is ky-independent for the chain, so every circle around a chain EP
    // crosses the zero locus; the honest outcome is the loop error
    ModelParams p = chain(0.0, 1.0);
    auto eps = ep_finder::locate_eps(p);
    REQUIRE(eps.size() == 2);
    CHECK_THROWS_AS(fill_charges(p, eps), LoopThroughEPError);
}
