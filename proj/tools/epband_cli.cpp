// epband command-line tool: phase scans, EP location, field maps, winding,
// spectra, kink profiles, perturbation reports, and dense-oracle crosschecks.
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "epband/ep_finder.hpp"
#include "epband/errors.hpp"
#include "epband/lattice_model.hpp"
#include "epband/oracle.hpp"
#include "epband/spectrum.hpp"
#include "epband/symmetry.hpp"
#include "epband/topo_field.hpp"

namespace epband::cli {

using ojson = nlohmann::ordered_json;
using core_algebra::cplx;
using lattice_model::BoundaryY;
using lattice_model::ModelParams;
using lattice_model::Momentum;
using lattice_model::VariantKind;

constexpr double pi = std::numbers::pi;

struct RunConfig {
    std::string subcommand;
    std::string variant = "base2d";
    double j = 1.0;
    double delta = 0.7071067811865476; // 1/sqrt(2), the reference figure value
    double gamma = 1.7320508075688772; // sqrt(3)
    double g = 1.0;
    double td = 0.0;
    double vpot = 0.0;
    int nx = 8;
    int ny = 4;
    std::string boundary = "pbc";

    int grid_n = 0; // per-subcommand default applied at registration
    std::string center = "1.5708,1.5708";
    double radius = 0.2;
    int segments = 64;
    int samples = 256;

    std::string out;    // empty = stdout
    std::string format; // csv or json, defaulted per subcommand
    std::string svg;    // field-map only
};

VariantKind variant_of(const std::string& s) {
    if (s == "base2d") return VariantKind::Base2D;
    if (s == "chain") return VariantKind::Chain;
    if (s == "hopping") return VariantKind::HoppingPerturbed;
    if (s == "potential") return VariantKind::PotentialPerturbed;
    throw std::invalid_argument("--variant must be base2d|chain|hopping|potential");
}

ModelParams params_of(const RunConfig& rc) {
    ModelParams p;
    p.variant = variant_of(rc.variant);
    p.j = rc.j;
    p.delta = rc.delta;
    p.gamma = rc.gamma;
    p.g = rc.g;
    p.t_d = rc.td;
    p.v_pot = rc.vpot;
    p.n_cells = rc.nx;
    p.n_chains = rc.ny;
    if (rc.boundary == "pbc")
        p.boundary_y = BoundaryY::Periodic;
    else if (rc.boundary == "obc")
        p.boundary_y = BoundaryY::Open;
    else
        throw std::invalid_argument("--boundary must be pbc|obc");
    p.validate();
    return p;
}

std::string fmt(double x) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", x);
    return b;
}

Momentum parse_center(const std::string& s) {
    double x = 0.0, y = 0.0;
    char trail = 0;
    if (std::sscanf(s.c_str(), "%lf,%lf%c", &x, &y, &trail) != 2)
        throw std::invalid_argument("--center expects kx,ky (two comma-separated numbers)");
    return {x, y};
}

const char* region_name(ep_finder::PhaseRegion r) {
    switch (r) {
        case ep_finder::PhaseRegion::Broken: return "Broken";
        case ep_finder::PhaseRegion::RealGapped: return "RealGapped";
        case ep_finder::PhaseRegion::ImaginaryGapped: return "ImaginaryGapped";
        case ep_finder::PhaseRegion::Boundary: return "Boundary";
    }
    return "?";
}

// Bounded worker pool over [0, n); each task writes its own preallocated slot,
// so the assembled output does not depend on scheduling.
template <class F>
void parallel_for(int n, F&& f) {
    const unsigned hw = std::thread::hardware_concurrency();
    const int nt = std::clamp(static_cast<int>(hw ? hw : 4), 1, 8);
    if (n < 256 || nt == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex err_mtx;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            try {
                for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mtx);
                if (!first_error) first_error = std::current_exception();
                next.store(n);
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

void emit(const RunConfig& rc, const std::string& body) {
    if (rc.out.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
        return;
    }
    std::ofstream f(rc.out, std::ios::binary);
    if (!f) throw std::invalid_argument("--out path is not writable: " + rc.out);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
}

void require_format(const RunConfig& rc, const char* natural) {
    if (!rc.format.empty() && rc.format != natural)
        throw std::invalid_argument(std::string("--format ") + rc.format +
                                    " is not supported by this subcommand (use " + natural + ")");
}

ojson meta_of(const RunConfig& rc) {
    ojson m;
    m["subcommand"] = rc.subcommand;
    m["variant"] = rc.variant;
    m["j"] = rc.j;
    m["delta"] = rc.delta;
    m["gamma"] = rc.gamma;
    m["g"] = rc.g;
    m["t_d"] = rc.td;
    m["v_pot"] = rc.vpot;
    m["n_cells"] = rc.nx;
    m["n_chains"] = rc.ny;
    m["boundary_y"] = rc.boundary;
    return m;
}

ojson eps_to_json(const std::vector<ep_finder::EPRecord>& eps) {
    ojson arr = ojson::array();
    for (const auto& r : eps) {
        ojson e;
        e["kx"] = r.k_c.kx;
        e["ky"] = r.k_c.ky;
        if (r.charge_set)
            e["charge"] = r.charge;
        else
            e["charge"] = nullptr;
        e["residual"] = r.residual;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::vector<ep_finder::EPRecord> located_with_charges(const ModelParams& p) {
    auto eps = ep_finder::locate_eps(p);
    // Chain EPs extend along ky, so no circle avoids them; leave charges unset.
    if (p.variant != VariantKind::Chain) topo_field::fill_charges(p, eps);
    return eps;
}

int cmd_phase_scan(const RunConfig& rc) {
    require_format(rc, "csv");
    const int n = rc.grid_n;
    if (n < 2) throw std::invalid_argument("--grid-n must be >= 2");
    std::vector<ep_finder::PhaseRegion> regions(static_cast<size_t>(n) * n);
    parallel_for(n * n, [&](int i) {
        const int iy = i / n, ix = i % n;
        const double d = -1.5 + 3.0 * ix / (n - 1);
        const double u = -1.5 + 3.0 * iy / (n - 1);
        regions[static_cast<size_t>(i)] = ep_finder::classify_phase(d, u);
    });
    std::string body = "delta,gamma_over_2j,region\n";
    for (int i = 0; i < n * n; ++i) {
        const int iy = i / n, ix = i % n;
        body += fmt(-1.5 + 3.0 * ix / (n - 1));
        body += ',';
        body += fmt(-1.5 + 3.0 * iy / (n - 1));
        body += ',';
        body += region_name(regions[static_cast<size_t>(i)]);
        body += '\n';
    }
    emit(rc, body);
    return 0;
}

int cmd_ep_locate(const RunConfig& rc) {
    require_format(rc, "json");
    const ModelParams p = params_of(rc);
    const auto eps = located_with_charges(p);
    ojson out;
    out["meta"] = meta_of(rc);
    out["count"] = eps.size();
    out["eps"] = eps_to_json(eps);
    double sum = 0.0;
    bool all_set = !eps.empty();
    for (const auto& r : eps) {
        sum += r.charge;
        all_set = all_set && r.charge_set;
    }
    if (all_set)
        out["charge_sum"] = sum;
    else
        out["charge_sum"] = nullptr;
    emit(rc, out.dump(2) + "\n");
    return 0;
}

std::string svg_quiver(const std::vector<topo_field::FieldSample>& smp,
                       const std::vector<ep_finder::EPRecord>& eps, int gnx, int gny) {
    const double margin = 40.0, plot = 720.0, size = plot + 2 * margin;
    auto mapx = [&](double kx) { return margin + (kx + pi) / (2.0 * pi) * plot; };
    auto mapy = [&](double ky) { return margin + (pi - ky) / (2.0 * pi) * plot; };

    std::vector<double> mags;
    mags.reserve(smp.size());
    for (const auto& s : smp)
        if (!s.at_ep) mags.push_back(std::hypot(s.fx, s.fy));
    double p95 = 1.0;
    if (!mags.empty()) {
        std::sort(mags.begin(), mags.end());
        p95 = mags[static_cast<size_t>(0.95 * (mags.size() - 1))];
        if (p95 <= 0.0) p95 = 1.0;
    }
    const double cell = plot / std::max(gnx, gny);
    const double scale = 0.9 * cell / p95;

    char buf[256];
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
    s += "<defs><marker id=\"a\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"4\" markerHeight=\"4\" orient=\"auto-start-reverse\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#1a4f8a\"/></marker></defs>\n";
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"white\" "
                  "stroke=\"#444\"/>\n",
                  margin, margin, plot, plot);
    s += buf;
    (void)size;
    for (const auto& f : smp) {
        if (f.at_ep) continue;
        const double cx = mapx(f.k.kx), cy = mapy(f.k.ky);
        const double dx = f.fx * scale, dy = -f.fy * scale;
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#1a4f8a\" "
                      "stroke-width=\"1.2\" marker-end=\"url(#a)\"/>\n",
                      cx - dx / 2, cy - dy / 2, cx + dx / 2, cy + dy / 2);
        s += buf;
    }
    for (const auto& r : eps) {
        const double cx = mapx(r.k_c.kx), cy = mapy(r.k_c.ky);
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%.2f\" y=\"%.2f\" width=\"10\" height=\"10\" fill=\"#c62828\"/>\n",
                      cx - 5.0, cy - 5.0);
        s += buf;
    }
    s += "</svg>\n";
    return s;
}

int cmd_field_map(const RunConfig& rc) {
    require_format(rc, "csv");
    const ModelParams p = params_of(rc);
    const int n = rc.grid_n;
    if (n < 2) throw std::invalid_argument("--grid-n must be >= 2");
    const bool has_ky = p.variant != VariantKind::Chain;
    const int ny = has_ky ? n : 1;

    std::vector<topo_field::FieldSample> smp(static_cast<size_t>(n) * ny);
    parallel_for(n * ny, [&](int i) {
        const int iy = i / n, ix = i % n;
        const double kx = -pi + 2.0 * pi * ix / n;
        const double ky = has_ky ? -pi + 2.0 * pi * iy / n : 0.0;
        smp[static_cast<size_t>(i)] = topo_field::field_f(p, {kx, ky});
    });

    std::string body = "kx,ky,bx,by,bz_re,bz_im,fx,fy,at_ep\n";
    for (const auto& f : smp) {
        body += fmt(f.k.kx);
        body += ',';
        body += fmt(f.k.ky);
        body += ',';
        body += fmt(f.b[0].real());
        body += ',';
        body += fmt(f.b[1].real());
        body += ',';
        body += fmt(f.b[2].real());
        body += ',';
        body += fmt(f.b[2].imag());
        body += ',';
        body += fmt(f.fx);
        body += ',';
        body += fmt(f.fy);
        body += ',';
        body += f.at_ep ? '1' : '0';
        body += '\n';
    }
    emit(rc, body);

    if (!rc.svg.empty()) {
        std::vector<ep_finder::EPRecord> eps;
        try {
            eps = ep_finder::locate_eps(p);
        } catch (const DegenerateParamsError&) {
            // decorations only; leave the quiver unmarked
        }
        std::ofstream f(rc.svg, std::ios::binary);
        if (!f) throw std::invalid_argument("--svg path is not writable: " + rc.svg);
        const std::string svg = svg_quiver(smp, eps, n, ny);
        f.write(svg.data(), static_cast<std::streamsize>(svg.size()));
    }
    return 0;
}

int cmd_winding(const RunConfig& rc) {
    require_format(rc, "json");
    const ModelParams p = params_of(rc);
    if (rc.radius <= 0.0) throw std::invalid_argument("--radius must be > 0");
    if (rc.segments < 3) throw std::invalid_argument("--segments must be >= 3");
    const Momentum c = parse_center(rc.center);
    const double w =
        topo_field::winding_number(p, topo_field::KLoop::circle(c, rc.radius, rc.segments));
    ojson out;
    out["meta"] = meta_of(rc);
    out["meta"]["center"] = {c.kx, c.ky};
    out["meta"]["radius"] = rc.radius;
    out["meta"]["segments"] = rc.segments;
    out["w"] = w;
    emit(rc, out.dump(2) + "\n");
    return 0;
}

int cmd_spectrum(const RunConfig& rc) {
    require_format(rc, "csv");
    const ModelParams p = params_of(rc);
    std::string body = "kx,ky,eps_plus_re,eps_plus_im,eps_minus_re,eps_minus_im\n";
    for (const auto& k : lattice_model::momentum_grid(p)) {
        const cplx e = core_algebra::principal_sqrt(spectrum::eps_squared(p, k));
        body += fmt(k.kx);
        body += ',';
        body += fmt(k.ky);
        body += ',';
        body += fmt(e.real());
        body += ',';
        body += fmt(e.imag());
        body += ',';
        body += fmt(-e.real());
        body += ',';
        body += fmt(-e.imag());
        body += '\n';
    }
    emit(rc, body);
    return 0;
}

int cmd_kink(const RunConfig& rc) {
    require_format(rc, "json");
    if (rc.variant != "chain")
        throw std::invalid_argument("kink requires --variant chain");
    const ModelParams p = params_of(rc);
    if (rc.samples < 2) throw std::invalid_argument("--samples must be >= 2");
    const auto rep = topo_field::kink_profile(p, rc.samples);
    ojson out;
    out["meta"] = meta_of(rc);
    out["meta"]["samples"] = rc.samples;
    out["kinks"] = rep.kink_positions;
    ojson arr = ojson::array();
    for (const auto& f : rep.samples) {
        ojson e;
        e["kx"] = f.k.kx;
        e["fx"] = f.fx;
        e["fy"] = f.fy;
        e["at_ep"] = f.at_ep;
        arr.push_back(std::move(e));
    }
    out["profile"] = std::move(arr);
    emit(rc, out.dump(2) + "\n");
    return 0;
}

int cmd_perturb_report(const RunConfig& rc) {
    require_format(rc, "json");
    ojson out;
    out["meta"] = meta_of(rc);

    // Hopping perturbation: EPs shift but keep their charges.
    RunConfig rh = rc;
    rh.variant = "hopping";
    const ModelParams ph = params_of(rh);
    RunConfig rb = rc;
    rb.variant = "base2d";
    rb.td = 0.0;
    const ModelParams pb = params_of(rb);
    ojson hop;
    hop["t_d"] = rc.td;
    hop["eps"] = eps_to_json(located_with_charges(ph));
    hop["base_eps"] = eps_to_json(located_with_charges(pb));
    const auto domain = ep_finder::ep_domain_perturbed(rc.td);
    ojson lines = ojson::array();
    for (const auto& pl : domain.boundary_polylines()) {
        ojson line = ojson::array();
        for (const auto& pt : pl) line.push_back({pt[0], pt[1]});
        lines.push_back(std::move(line));
    }
    hop["domain_boundaries"] = std::move(lines);
    out["hopping"] = std::move(hop);

    // Potential perturbation: the gap floor opens and the defect norm is set
    // by the staggered potential alone (evaluated where V_k vanishes).
    RunConfig rv = rc;
    rv.variant = "potential";
    const ModelParams pv = params_of(rv);
    const auto gap = oracle::min_gap_scan(pv, 256);
    ojson pot;
    pot["v_pot"] = rc.vpot;
    pot["min_gap"] = gap.value;
    pot["argmin"] = {gap.argmin.kx, gap.argmin.ky};
    pot["defect_norm"] = symmetry::symmetry_defect(lattice_model::build_bloch(pv, {0.0, pi / 2}));
    out["potential"] = std::move(pot);

    emit(rc, out.dump(2) + "\n");
    return 0;
}

int cmd_crosscheck(const RunConfig& rc) {
    require_format(rc, "json");
    const ModelParams p = params_of(rc);
    const auto rep = oracle::crosscheck_spectra(p);
    ojson out;
    out["meta"] = meta_of(rc);
    out["matched"] = rep.matched;
    out["max_pairing_distance"] = rep.max_pairing_distance;
    out["n_levels"] = rep.n_levels;
    emit(rc, out.dump(2) + "\n");
    return 0;
}

int run_command(const RunConfig& rc) {
    if (rc.subcommand == "phase-scan") return cmd_phase_scan(rc);
    if (rc.subcommand == "ep-locate") return cmd_ep_locate(rc);
    if (rc.subcommand == "field-map") return cmd_field_map(rc);
    if (rc.subcommand == "winding") return cmd_winding(rc);
    if (rc.subcommand == "spectrum") return cmd_spectrum(rc);
    if (rc.subcommand == "kink") return cmd_kink(rc);
    if (rc.subcommand == "perturb-report") return cmd_perturb_report(rc);
    if (rc.subcommand == "crosscheck") return cmd_crosscheck(rc);
    throw std::invalid_argument("unknown subcommand " + rc.subcommand);
}

// JSON config files whose keys mirror the long flags; command line wins.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }
    std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
        nlohmann::json doc = nlohmann::json::parse(in);
        if (!doc.is_object())
            throw CLI::ConfigError("config root must be a JSON object of flag:value pairs");
        std::vector<CLI::ConfigItem> items;
        for (const auto& [key, val] : doc.items()) {
            CLI::ConfigItem item;
            item.name = key;
            auto push = [&item](const nlohmann::json& v) {
                if (v.is_string())
                    item.inputs.push_back(v.get<std::string>());
                else
                    item.inputs.push_back(v.dump());
            };
            if (val.is_array())
                for (const auto& v : val) push(v);
            else
                push(val);
            items.push_back(std::move(item));
        }
        return items;
    }
};

} // namespace epband::cli

int main(int argc, char** argv) {
    using namespace epband::cli;

    CLI::App app{"epband: band structure, exceptional points, and half-integer winding "
                 "for a gain/loss dimerized lattice.\n"
                 "Defaults: j=1, g=1, delta=1/sqrt(2), gamma=sqrt(3) (the reference "
                 "figure parameters).\n"
                 "Exit codes: 0 success, 2 invalid configuration, 3 internal check failure."};
    app.require_subcommand(1);

    RunConfig rc;

    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--variant", rc.variant, "model variant")
            ->check(CLI::IsMember({"base2d", "chain", "hopping", "potential"}))
            ->capture_default_str();
        sub->add_option("--j", rc.j, "hopping scale J > 0")->capture_default_str();
        sub->add_option("--delta", rc.delta, "dimerization")->capture_default_str();
        sub->add_option("--gamma", rc.gamma, "gain/loss magnitude >= 0")->capture_default_str();
        sub->add_option("--g", rc.g, "inter-chain tunneling")->capture_default_str();
        sub->add_option("--td", rc.td, "extra hopping (hopping variant)")->capture_default_str();
        sub->add_option("--vpot", rc.vpot, "staggered potential (potential variant)")
            ->capture_default_str();
        sub->add_option("--nx", rc.nx, "unit cells N")->capture_default_str();
        sub->add_option("--ny", rc.ny, "chains M (forced 1 for chain)")->capture_default_str();
        sub->add_option("--boundary", rc.boundary, "y boundary")
            ->check(CLI::IsMember({"pbc", "obc"}))
            ->capture_default_str();
        sub->add_option("--out", rc.out, "output path (default: stdout)");
        sub->set_config("--config", "", "JSON file with keys mirroring the long flags");
        sub->config_formatter(std::make_shared<JsonConfig>());
        return sub;
    };
    auto add_format = [&](CLI::App* sub, const char* natural) {
        rc.format.clear();
        sub->add_option("--format", rc.format, std::string("output format (") + natural + ")");
        return sub;
    };

    auto* sc_phase = add_model(app.add_subcommand("phase-scan", "phase diagram over (delta, gamma/2J)"));
    add_format(sc_phase, "csv");
    sc_phase->add_option("--grid-n", rc.grid_n, "grid points per axis (default 200)");

    auto* sc_ep = add_model(app.add_subcommand("ep-locate", "exceptional points with charges"));
    add_format(sc_ep, "json");

    auto* sc_field = add_model(app.add_subcommand("field-map", "auxiliary field F on a k-grid"));
    add_format(sc_field, "csv");
    sc_field->add_option("--grid-n", rc.grid_n, "grid points per axis (default 32)");
    sc_field->add_option("--svg", rc.svg, "also write an SVG quiver plot here");

    auto* sc_wind = add_model(app.add_subcommand("winding", "winding number of a circular loop"));
    add_format(sc_wind, "json");
    sc_wind->add_option("--center", rc.center, "loop center kx,ky")->capture_default_str();
    sc_wind->add_option("--radius", rc.radius, "loop radius")->capture_default_str();
    sc_wind->add_option("--segments", rc.segments, "polyline segments")->capture_default_str();

    auto* sc_spec = add_model(app.add_subcommand("spectrum", "Bloch bands on the lattice momentum grid"));
    add_format(sc_spec, "csv");

    auto* sc_kink = add_model(app.add_subcommand("kink", "F profile and kink positions (chain)"));
    add_format(sc_kink, "json");
    sc_kink->add_option("--samples", rc.samples, "kx samples")->capture_default_str();

    auto* sc_pert = add_model(app.add_subcommand("perturb-report", "t_d and v_pot perturbation summaries"));
    add_format(sc_pert, "json");

    auto* sc_cross = add_model(app.add_subcommand("crosscheck", "Bloch vs dense real-space spectra"));
    add_format(sc_cross, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) { // config file syntax errors
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    rc.subcommand = sub->get_name();
    // Per-subcommand defaults for options bound to the shared config struct.
    if (rc.subcommand == "phase-scan" && sub->count("--grid-n") == 0) rc.grid_n = 200;
    if (rc.subcommand == "field-map" && sub->count("--grid-n") == 0) rc.grid_n = 32;
    if (rc.subcommand == "kink" && sub->count("--variant") == 0) rc.variant = "chain";
    if (rc.variant == "chain" && sub->count("--ny") == 0) rc.ny = 1;

    try {
        return run_command(rc);
    } catch (const epband::DegenerateParamsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const epband::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const epband::LoopThroughEPError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const epband::CoalescentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const epband::Error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    }
}
