#include "epband/topo_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "epband/errors.hpp"

namespace epband::topo_field {

using core_algebra::principal_sqrt;
using lattice_model::build_bloch;
using lattice_model::VariantKind;

namespace {
constexpr double pi = std::numbers::pi;
}

std::array<cplx, 3> auxiliary_b(const ModelParams& p, Momentum k) {
    p.validate();
    const double w = 1.0 - p.delta;
    const double v = p.v_eff();
    const double V = p.variant == VariantKind::Chain ? 0.0 : p.v_of_ky(k.ky);
    return {
        cplx(-p.j * (w + v * std::cos(k.kx)), 0.0),
        cplx(-p.j * v * std::sin(k.kx), 0.0),
        cplx(-(V + p.v_pot_eff()), -p.gamma),
    };
}

FieldSample field_f(const ModelParams& p, Momentum k) {
    FieldSample s;
    s.k = k;
    s.b = auxiliary_b(p, k);
    const auto bp = spectrum::band_pair(p, k);
    if (bp.classification == spectrum::PointClass::EP) {
        s.at_ep = true;
        return s; // F undefined at the EP; report (0, 0)
    }
    const cplx cross = std::conj(bp.vec_minus.u) * bp.vec_minus.v;
    const double sx = 2.0 * cross.real();
    const double sy = 2.0 * cross.imag();
    const double sz = std::norm(bp.vec_minus.u) - std::norm(bp.vec_minus.v);
    s.fx = s.b[0].real() * sx + s.b[1].real() * sy;
    s.fy = sz;
    return s;
}

KLoop KLoop::circle(Momentum center, double radius, int n_segments) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("KLoop::circle: radius must be positive");
    if (n_segments < 3) throw std::invalid_argument("KLoop::circle: need at least 3 segments");
    if (!std::isfinite(center.kx) || !std::isfinite(center.ky))
        throw std::invalid_argument("KLoop::circle: center must be finite");
    KLoop loop;
    loop.pts.reserve(static_cast<size_t>(n_segments) + 1);
    for (int t = 0; t <= n_segments; ++t) {
        const double th = 2.0 * pi * t / n_segments;
        loop.pts.push_back({center.kx + radius * std::cos(th), center.ky + radius * std::sin(th)});
    }
    loop.pts.back() = loop.pts.front(); // exact closure
    return loop;
}

namespace {

cplx doubled(const FieldSample& s) {
    const cplx f(s.fx, s.fy);
    return f * f;
}

// Accumulate the doubled-angle increment over one segment, bisecting until
// each step is below pi/2 so the branch is tracked unambiguously.
double segment_angle(const ModelParams& p, Momentum q0, const FieldSample& f0, Momentum q1,
                     const FieldSample& f1, int depth) {
    const cplx z0 = doubled(f0), z1 = doubled(f1);
    if (std::abs(z0) < 1e-16 || std::abs(z1) < 1e-16)
        throw LoopThroughEPError("winding_number: |F| below 1e-8 on the loop");
    const double d = std::arg(z1 / z0);
    if (std::abs(d) < pi / 2.0) return d;
    if (depth >= 20)
        throw NonQuantizedError("winding_number: angle accumulation did not converge");
    const Momentum qm{(q0.kx + q1.kx) / 2.0, (q0.ky + q1.ky) / 2.0};
    const FieldSample fm = field_f(p, qm);
    return segment_angle(p, q0, f0, qm, fm, depth + 1) +
           segment_angle(p, qm, fm, q1, f1, depth + 1);
}

} // namespace

double winding_number(const ModelParams& p, const KLoop& loop) {
    p.validate();
    if (loop.pts.size() < 4) throw std::invalid_argument("winding_number: loop needs >= 3 segments");
    const Momentum a = loop.pts.front(), b = loop.pts.back();
    if (std::abs(a.kx - b.kx) > 1e-12 || std::abs(a.ky - b.ky) > 1e-12)
        throw std::invalid_argument("winding_number: loop must be closed (first point repeated)");
    for (const auto& q : loop.pts)
        if (!std::isfinite(q.kx) || !std::isfinite(q.ky))
            throw std::invalid_argument("winding_number: loop momenta must be finite");

    std::vector<FieldSample> fs;
    fs.reserve(loop.pts.size());
    for (const auto& q : loop.pts) fs.push_back(field_f(p, q));

    double total = 0.0;
    for (size_t i = 0; i + 1 < loop.pts.size(); ++i)
        total += segment_angle(p, loop.pts[i], fs[i], loop.pts[i + 1], fs[i + 1], 0);

    const double w = -total / (4.0 * pi);
    if (std::abs(2.0 * w - std::round(2.0 * w)) > 1e-6)
        throw NonQuantizedError("winding_number: result is not half-integer quantized");
    return w;
}

std::array<double, 2> near_ep_asymptote(const ModelParams& p, Momentum k_c,
                                        std::array<double, 2> dk) {
    p.validate();
    if (p.gamma <= 0.0)
        throw std::invalid_argument("near_ep_asymptote: gamma must be positive");
    if (!std::isfinite(dk[0]) || !std::isfinite(dk[1]))
        throw std::invalid_argument("near_ep_asymptote: dk must be finite");
    const double w = 1.0 - p.delta;
    const double v = p.v_eff();
    const double g = p.variant == VariantKind::Chain ? 0.0 : p.g;
    const cplx de2 = cplx(-2.0 * p.j * p.j * v * w * std::sin(k_c.kx) * dk[0], 0.0) +
                     cplx(0.0, -4.0 * g * p.gamma * std::sin(k_c.ky) * dk[1]);
    const cplx e = principal_sqrt(de2);
    return {-e.real(), e.imag() / p.gamma};
}

KinkReport kink_profile(const ModelParams& p, int n_samples) {
    p.validate();
    if (p.variant != VariantKind::Chain)
        throw std::invalid_argument("kink_profile: Chain variant only");
    if (n_samples < 2) throw std::invalid_argument("kink_profile: need at least 2 samples");
    KinkReport rep;
    rep.samples.reserve(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double kx = -pi + 2.0 * pi * i / n_samples;
        rep.samples.push_back(field_f(p, {kx, 0.0}));
    }
    for (const auto& rec : ep_finder::locate_eps(p)) rep.kink_positions.push_back(rec.k_c.kx);
    return rep;
}

void fill_charges(const ModelParams& p, std::vector<ep_finder::EPRecord>& eps) {
    for (auto& rec : eps) {
        rec.charge = winding_number(p, KLoop::circle(rec.k_c, 0.05));
        rec.charge_set = true;
    }
}

} // namespace epband::topo_field
