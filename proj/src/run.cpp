#include "cavent/run.hpp"
#include "cavent/dynamics.hpp"
#include "cavent/oracle.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace cavent {

namespace {

constexpr double kPi = std::numbers::pi;
using json = nlohmann::json;
using cplx = std::complex<double>;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// inclusive time grid t0 + i dt, i = 0..round((t1-t0)/dt)
std::vector<double> time_grid(double t0, double t1, double dt) {
    const auto n = static_cast<std::size_t>(std::llround((t1 - t0) / dt));
    std::vector<double> grid(n + 1);
    for (std::size_t i = 0; i <= n; ++i) grid[i] = t0 + static_cast<double>(i) * dt;
    return grid;
}

class OutputFile {
public:
    explicit OutputFile(const std::string& path) : path_(path), out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
    }
    ~OutputFile() {
        if (!committed_) {
            out_.close();
            std::error_code ec;
            std::filesystem::remove(path_, ec);
        }
    }
    void line(const std::string& s) { out_ << s << '\n'; }
    void commit() {
        out_.flush();
        if (!out_) throw std::runtime_error("write failure: " + path_);
        committed_ = true;
    }

private:
    std::string path_;
    std::ofstream out_;
    bool committed_ = false;
};

void write_sidecar(const std::string& csv_path, const json& meta) {
    OutputFile f(csv_path + ".json");
    f.line(meta.dump(2));
    f.commit();
}

json base_meta(const RunConfig& cfg) {
    json j;
    j["tool"] = "cavent";
    j["version"] = kToolVersion;
    j["free_space"] = cfg.free_space;
    if (cfg.free_space) {
        j["params"] = {{"omega0", cfg.params.omega0}, {"g", cfg.params.g}};
        j["quadrature"] = {{"abs_tol", cfg.quadrature.abs_tol},
                           {"t_min", cfg.quadrature.t_min}};
    } else {
        j["params"] = {{"omega0", cfg.params.omega0},
                       {"g", cfg.params.g},
                       {"radius", cfg.params.radius}};
        j["truncation_eps"] = cfg.truncation_eps;
        j["root_rel_tol"] = cfg.root_rel_tol;
    }
    return j;
}

SurvivalAmplitudeFn make_f00_fn(const RunConfig& cfg, const ModeSpectrum* spectrum) {
    if (cfg.free_space) {
        const double w0 = cfg.params.omega0, g = cfg.params.g;
        const QuadratureConfig quad = cfg.quadrature;
        return [w0, g, quad](double t) { return f00_free(w0, g, t, quad); };
    }
    return [spectrum](double t) { return f00(*spectrum, t); };
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const RunConfig& cfg) {
    SpectrumOptions opt{cfg.truncation_eps, cfg.root_rel_tol};
    const ModeSpectrum spec = build_spectrum(cfg.params, opt);
    OutputFile csv(cfg.output_path);
    csv.line("r,omega,weight");
    for (int r = 0; r <= spec.r_max(); ++r)
        csv.line(std::to_string(r) + "," + fmt(spec.frequencies()[r]) + "," +
                 fmt(spec.weights()[r]));
    csv.commit();

    json meta = base_meta(cfg);
    meta["mode"] = "spectrum";
    meta["columns"] = {"r", "omega", "weight"};
    meta["r_max"] = spec.r_max();
    meta["tail_mass"] = spec.tail_mass();
    write_sidecar(cfg.output_path, meta);
    return 0;
}

// --------------------------------------------------------------------- f00

int run_f00(const RunConfig& cfg) {
    const auto grid = time_grid(0.0, cfg.t_max, cfg.dt);
    json meta = base_meta(cfg);
    meta["mode"] = "f00";
    meta["columns"] = {"t", "re", "im", "abs"};
    meta["grid"] = {{"t_min", 0.0}, {"t_max", cfg.t_max}, {"dt", cfg.dt}};

    OutputFile csv(cfg.output_path);
    csv.line("t,re,im,abs");
    if (cfg.free_space) {
        for (double t : grid) {
            const cplx f = f00_free(cfg.params.omega0, cfg.params.g, t, cfg.quadrature);
            csv.line(fmt(t) + "," + fmt(f.real()) + "," + fmt(f.imag()) + "," + fmt(std::abs(f)));
        }
    } else {
        SpectrumOptions opt{cfg.truncation_eps, cfg.root_rel_tol};
        const ModeSpectrum spec = build_spectrum(cfg.params, opt);
        meta["r_max"] = spec.r_max();
        meta["tail_mass"] = spec.tail_mass();
        for (double t : grid) {
            const cplx f = f00(spec, t);
            csv.line(fmt(t) + "," + fmt(f.real()) + "," + fmt(f.imag()) + "," + fmt(std::abs(f)));
        }
    }
    csv.commit();
    write_sidecar(cfg.output_path, meta);
    return 0;
}

// ------------------------------------------------------------- concurrence

void write_concurrence_csv(const RunConfig& cfg, const std::string& path,
                           const InitialState& state, double t0, double t1,
                           json extra_meta) {
    const auto grid = time_grid(t0, t1, cfg.dt);
    json meta = base_meta(cfg);
    meta["mode"] = "concurrence";
    meta["columns"] = {"t", "concurrence"};
    meta["state"] = {{"xi", state.xi}, {"phi", state.phi}};
    meta["grid"] = {{"t_min", t0}, {"t_max", t1}, {"dt", cfg.dt}};
    meta.update(extra_meta);

    OutputFile csv(path);
    csv.line("t,concurrence");
    if (cfg.free_space) {
        auto fn = make_f00_fn(cfg, nullptr);
        for (auto [t, c] : concurrence_series(fn, cfg.params.omega0, state, grid))
            csv.line(fmt(t) + "," + fmt(c));
    } else {
        SpectrumOptions opt{cfg.truncation_eps, cfg.root_rel_tol};
        const ModeSpectrum spec = build_spectrum(cfg.params, opt);
        meta["r_max"] = spec.r_max();
        meta["tail_mass"] = spec.tail_mass();
        auto fn = make_f00_fn(cfg, &spec);
        for (auto [t, c] : concurrence_series(fn, cfg.params.omega0, state, grid))
            csv.line(fmt(t) + "," + fmt(c));
    }
    csv.commit();
    write_sidecar(path, meta);
}

int run_concurrence(const RunConfig& cfg) {
    write_concurrence_csv(cfg, cfg.output_path, cfg.state, 0.0, cfg.t_max, json::object());
    return 0;
}

// ------------------------------------------------------------------ figure

struct FigureCurve {
    std::string label;
    bool free_space;
    CavityParams params;
    InitialState state;
    double t0, t1;
    double root_rel_tol;
};

std::vector<FigureCurve> figure_curves(const std::string& id, const CavityParams& base) {
    const double w0 = base.omega0;
    std::vector<FigureCurve> out;
    auto cavity = [&](std::string label, double g, double radius, InitialState st,
                      double t0, double t1, double rtol = 1e-12) {
        out.push_back({std::move(label), false, {w0, g, radius}, st, t0, t1, rtol});
    };
    auto freespace = [&](std::string label, double g, InitialState st) {
        out.push_back({std::move(label), true, {w0, g, 1.0}, st, 0.0, 10.0, 1e-12});
    };

    if (id == "fig1a") {
        for (auto [label, phi] : {std::pair{"phi0", 0.0}, {"phi_pi6", kPi / 6},
                                  {"phi_pi4", kPi / 4}, {"phi_pi3", kPi / 3}})
            freespace(label, w0, {0.5, phi});
    } else if (id == "fig1b") {
        for (auto [label, xi] : {std::pair{"xi0", 0.0}, {"xi01", 0.1},
                                 {"xi02", 0.2}, {"xi04", 0.4}})
            freespace(label, w0, {xi, 0.0});
    } else if (id == "fig2") {
        for (auto [label, g] : {std::pair{"g001", 0.01}, {"g01", 0.1}, {"g05", 0.5},
                                {"g1", 1.0}, {"g2", 2.0}})
            cavity(label, g * w0, 1.0 / w0, {0.0, 0.0}, 0.0, 10.0);
    } else if (id == "fig3a" || id == "fig3b" || id == "fig3c" || id == "fig3d") {
        const double radius = id == "fig3a" ? 0.01 : id == "fig3b" ? 0.1
                            : id == "fig3c" ? 0.5 : 1.0;
        cavity("t0", w0, radius / w0, {0.0, 0.0}, 0.0, 10.0);
        cavity("t1e2", w0, radius / w0, {0.0, 0.0}, 1e2, 1e2 + 10.0);
        // phase accuracy at t ~ 1e9 degrades as t * root_tol * Omega; tighten
        cavity("t1e9", w0, radius / w0, {0.0, 0.0}, 1e9, 1e9 + 10.0, 1e-14);
    } else if (id == "fig4a" || id == "fig4b") {
        const double phi = id == "fig4a" ? 0.0 : kPi / 5;
        for (auto [label, radius] : {std::pair{"R02", 0.2}, {"R1", 1.0}, {"R5", 5.0}})
            cavity(label, w0, radius / w0, {0.5, phi}, 0.0, 10.0);
    } else {
        throw std::invalid_argument("unknown figure id: " + id);
    }
    return out;
}

int run_figure(const RunConfig& cfg) {
    const auto curves = figure_curves(cfg.figure_id, cfg.params);
    for (const auto& curve : curves) {
        RunConfig sub = cfg;
        sub.free_space = curve.free_space;
        sub.params = curve.params;
        sub.root_rel_tol = curve.root_rel_tol;
        json extra;
        extra["figure"] = cfg.figure_id;
        extra["curve"] = curve.label;
        write_concurrence_csv(sub, cfg.output_path + "_" + curve.label + ".csv",
                              curve.state, curve.t0, curve.t1, extra);
    }
    return 0;
}

// ---------------------------------------------------------------- validate

struct Check {
    const char* name;
    bool pass;
    std::string detail;
};

int run_validate(const RunConfig& cfg) {
    std::vector<Check> checks;
    const CavityParams p = cfg.params;
    SpectrumOptions opt{1e-4, 1e-12};
    const ModeSpectrum spec = build_spectrum(p, opt);

    {  // completeness
        const double sum = spec.weight_sum();
        checks.push_back({"completeness", sum >= 1.0 - opt.truncation_eps && sum <= 1.0,
                          "sum(t0r^2) = " + fmt(sum)});
    }
    {  // interlacing: one root per interval by construction; verify ordering vs poles
        bool ok = true;
        const double dp = p.mode_spacing();
        for (int r = 0; r <= spec.r_max(); ++r) {
            const double w = spec.frequencies()[r];
            if (!(w > r * dp && w < (r + 1) * dp)) { ok = false; break; }
        }
        checks.push_back({"interlacing", ok, "one root per (k pi/R, (k+1) pi/R)"});
    }
    {  // oracle eigenfrequencies
        const auto sys = finite_n_diagonalize(p, 1200, false);
        double worst = 0.0;
        for (int r = 0; r < 30; ++r)
            worst = std::max(worst, std::fabs(sys.frequencies[r] - spec.frequencies()[r]) /
                                        spec.frequencies()[r]);
        checks.push_back({"oracle_roots", worst < 2e-3,
                          "max rel err first 30 roots vs N=1200: " + fmt(worst)});
    }
    {  // oracle orthonormality + f00 agreement
        const auto sys = finite_n_diagonalize(p, 600, true);
        const double ortho =
            (sys.vectors.transpose() * sys.vectors -
             Eigen::MatrixXd::Identity(sys.vectors.cols(), sys.vectors.cols()))
                .cwiseAbs()
                .maxCoeff();
        checks.push_back({"oracle_orthonormal", ortho < 1e-10, "max |VtV - I| = " + fmt(ortho)});
        double worst = 0.0;
        for (double t : {0.5, 1.0, 3.0})
            worst = std::max(worst, std::abs(f00(spec, t) - f00_oracle(sys, t)));
        checks.push_back({"oracle_f00", worst < 5e-3, "max |f00 - oracle(N=600)| = " + fmt(worst)});
    }
    {  // probability conservation with matched truncation
        double worst = 0.0;
        for (double t : {0.5, 1.0, 5.0}) {
            const auto amps = amplitudes(spec, t, true);
            double total = std::norm(amps.stay) + std::norm(amps.swap);
            for (const auto& e : amps.emit) total += std::norm(e);
            worst = std::max(worst, std::fabs(1.0 - total));
        }
        checks.push_back({"conservation", worst < 2.0 * opt.truncation_eps,
                          "max defect = " + fmt(worst)});
    }
    {  // closed-form concurrence vs Wootters eigenvalue route
        std::mt19937 rng(20240811);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            const double ra = 0.9 * uni(rng), rb = (1.0 - ra) * uni(rng);
            AtomPairAmplitudes amps{std::polar(std::sqrt(ra), 2 * kPi * uni(rng)),
                                    std::polar(std::sqrt(rb), 2 * kPi * uni(rng)),
                                    1.0 - ra - rb};
            worst = std::max(worst, std::fabs(concurrence(amps) -
                                              concurrence_wootters(reduced_density(amps))));
        }
        checks.push_back({"wootters_identity", worst < 1e-10, "max |2|AB| - C_w| = " + fmt(worst)});
    }
    {  // special-case identities
        double worst = 0.0;
        for (double t : {0.3, 1.0, 2.7, 8.1}) {
            const cplx f = f00(spec, t);
            const double w0t = p.omega0 * t;
            const double c70 = concurrence(atom_amplitudes(f, t, p.omega0, {0.5, 0.0}));
            const double c71 = concurrence(atom_amplitudes(f, t, p.omega0, {0.5, kPi}));
            const double c72 = concurrence(atom_amplitudes(f, t, p.omega0, {0.0, 0.0}));
            worst = std::max({worst, std::fabs(c70 - std::norm(f)), std::fabs(c71 - 1.0),
                              std::fabs(c72 - 0.5 * std::abs(f * f - std::polar(1.0, -2 * w0t)))});
        }
        checks.push_back({"special_cases", worst < 1e-12, "max identity defect = " + fmt(worst)});
    }

    bool all = true;
    for (const auto& c : checks) {
        std::printf("%-20s %s  %s\n", c.name, c.pass ? "PASS" : "FAIL", c.detail.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 2;
}

} // namespace

void RunConfig::validate() const {
    params.validate();
    state.validate();
    quadrature.validate();
    if (!(t_max > 0.0)) throw std::invalid_argument("RunConfig: t_max must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("RunConfig: dt must be positive");
    if (!(truncation_eps > 0.0) || truncation_eps > 1e-2)
        throw std::invalid_argument("RunConfig: truncation_eps must lie in (0, 1e-2]");
    if (!(root_rel_tol > 0.0) || root_rel_tol > 1e-6)
        throw std::invalid_argument("RunConfig: root_rel_tol must lie in (0, 1e-6]");
    if (mode != RunMode::validate && output_path.empty())
        throw std::invalid_argument("RunConfig: output_path required");
    if (mode == RunMode::figure && figure_id.empty())
        throw std::invalid_argument("RunConfig: figure_id required in figure mode");
}

int run(const RunConfig& config) {
    try {
        config.validate();
        if (config.mode == RunMode::figure)
            figure_curves(config.figure_id, config.params);  // id check before any output
    } catch (const std::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    }
    try {
        switch (config.mode) {
            case RunMode::spectrum: return run_spectrum(config);
            case RunMode::f00: return run_f00(config);
            case RunMode::concurrence: return run_concurrence(config);
            case RunMode::figure: return run_figure(config);
            case RunMode::validate: return run_validate(config);
        }
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    }
}

} // namespace cavent
