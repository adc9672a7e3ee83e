// Experiment runner: each subcommand reproduces one spectral claim and
// writes a CSV/JSON report (optionally with an SVG plot) into --out.
// Exit code: 0 all verdicts Confirmed, 2 any Refuted, 3 any Inconclusive,
// 1 runtime error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "deltabias/config.hpp"
#include "deltabias/experiments.hpp"
#include "deltabias/geometry.hpp"
#include "deltabias/report.hpp"

namespace {

using namespace deltabias;

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::string format = "csv";
    bool plot = false;
    unsigned long long seed = 0;  // 0: use the config's seed
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "plain-text key=value config file");
    cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_flag("--plot", opts.plot, "also write an SVG chart");
    cmd->add_option("--seed", opts.seed, "override the config seed");
}

ExperimentConfig load(const CommonOpts& opts) {
    ExperimentConfig cfg =
        opts.config_path.empty() ? ExperimentConfig{} : load_config(opts.config_path);
    if (opts.seed != 0) cfg.seed = opts.seed;
    if (cfg.v0_list.empty()) cfg.v0_list = default_v0_scan(cfg.alpha);
    return cfg;
}

void write_report(const ScanReport& rep, const CommonOpts& opts) {
    namespace fs = std::filesystem;
    fs::create_directories(opts.out_dir);
    const fs::path base = fs::path(opts.out_dir) / rep.experiment_id;
    if (opts.format == "json") {
        std::ofstream os(base.string() + ".json");
        os << to_json(rep).dump(2) << "\n";
    } else {
        std::ofstream os(base.string() + ".csv");
        write_csv(rep, os);
    }
    if (opts.plot) {
        std::vector<PlotSeries> series;
        PlotSeries lowest{"lowest eigenvalue", {}};
        for (const auto& r : rep.rows)
            if (r.index == 0 && rep.axis_labels.size() == 1) {
                const double x = rep.axis_labels[0] == "m" ? r.m
                                 : rep.axis_labels[0] == "v0" ? r.v0
                                                              : r.box;
                lowest.points.emplace_back(x, r.eigenvalue);
            }
        if (!lowest.points.empty()) series.push_back(lowest);
        if (!rep.threshold_curve.empty() && rep.threshold_curve.size() > 1) {
            PlotSeries mu{"mu(v0)", {}};
            for (const auto& [v0, m] : rep.threshold_curve) mu.points.emplace_back(v0, m);
            series.push_back(mu);
        }
        if (!series.empty()) {
            std::ofstream os(base.string() + ".svg");
            write_svg_chart(series, rep.experiment_id,
                            rep.axis_labels.empty() ? "x" : rep.axis_labels[0], "eigenvalue", os);
        }
    }
}

int finish(ScanReport rep, const ExperimentConfig& cfg, const CommonOpts& opts) {
    rep.config_echo = cfg.echo;
    write_report(rep, opts);
    for (const auto& v : rep.verdicts)
        std::cout << rep.experiment_id << ": " << v.claim << " -> " << to_string(v.verdict)
                  << "   [" << v.inequality << "]\n";
    for (const auto& n : rep.notes) std::cout << rep.experiment_id << ": note: " << n << "\n";
    switch (rep.overall()) {
        case Verdict::Confirmed: return 0;
        case Verdict::Refuted: return 2;
        case Verdict::Inconclusive: return 3;
    }
    return 1;
}

int run_verify_surface(const CommonOpts& opts) {
    const ExperimentConfig cfg = load(opts);
    const SurfaceGeometry surf = make_surface(cfg);
    SamplingPlan plan;
    plan.seed = static_cast<unsigned>(cfg.seed);
    const AssumptionReport rep = verify_assumptions(surf, plan);

    nlohmann::json j;
    j["surface"] = rep.surface;
    j["bilipschitz_c"] = rep.bilipschitz_c;
    j["bilipschitz_ok"] = rep.bilipschitz_ok;
    j["probe_radii"] = rep.probe_radii;
    j["curvature_sup"] = rep.curvature_sup;
    j["asymptotically_planar"] = rep.asymptotically_planar;
    j["ellipticity"] = {rep.ellipticity_lower, rep.ellipticity_upper};
    j["elliptic_ok"] = rep.elliptic_ok;
    j["unchecked"] = rep.unchecked;
    j["config"] = cfg.echo;

    namespace fs = std::filesystem;
    fs::create_directories(opts.out_dir);
    std::ofstream os((fs::path(opts.out_dir) / "verify-surface.json").string());
    os << j.dump(2) << "\n";

    ScanReport sr;
    sr.experiment_id = "verify-surface";
    sr.verdicts.push_back({"bi-lipschitz", "0 < c = " + std::to_string(rep.bilipschitz_c) + " < 1",
                           rep.bilipschitz_ok ? Verdict::Confirmed : Verdict::Refuted});
    sr.verdicts.push_back({"asymptotically-planar", "curvature sup decays along probe radii",
                           rep.asymptotically_planar ? Verdict::Confirmed : Verdict::Refuted});
    sr.verdicts.push_back({"uniform-ellipticity",
                           "metric eigenvalues within [" + std::to_string(rep.ellipticity_lower) +
                               ", " + std::to_string(rep.ellipticity_upper) + "]",
                           rep.elliptic_ok ? Verdict::Confirmed : Verdict::Refuted});
    sr.notes.push_back("unchecked: " + rep.unchecked);
    for (const auto& v : sr.verdicts)
        std::cout << "verify-surface: " << v.claim << " -> " << to_string(v.verdict) << "   ["
                  << v.inequality << "]\n";
    switch (sr.overall()) {
        case Verdict::Confirmed: return 0;
        case Verdict::Refuted: return 2;
        case Verdict::Inconclusive: return 3;
    }
    return 1;
}

int run_rooftop(const CommonOpts& opts) {
    const ExperimentConfig cfg = load(opts);
    ScanReport rep = rooftop_lambda(cfg.theta, cfg.alpha, cfg.v0, cfg.ladder);
    const auto lambdas = discrete_lambdas(rep);
    if (!lambdas.empty()) {
        const double lambda = lambdas.front();
        const double gp2 = mollifier_bump().gprime_norm_sq;
        const double eps = std::abs(lambda) / (2.0 * gp2);
        const double q = rooftop_trial_energy({lambda, eps, gp2, 1.0});
        std::ostringstream note;
        note << "trial energy with epsilon = |lambda|/(2 ||g'||^2) = " << eps << ": q = " << q
             << "; discrete spectrum nonempty for ridge length L > " << 2.0 / eps;
        rep.notes.push_back(note.str());
        std::ostringstream iq;
        iq << "q = " << q << " = lambda/2 < 0";
        rep.verdicts.push_back({"trial-energy-negative", iq.str(),
                                q < 0.0 ? Verdict::Confirmed : Verdict::Refuted});
    }
    return finish(std::move(rep), cfg, opts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral experiments for delta-interactions with one-sided bias"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* c_transverse = app.add_subcommand("transverse", "1D transverse operator summary");
    auto* c_cone = app.add_subcommand("cone-scan", "m=0 cone eigenvalues vs bias height");
    auto* c_mode = app.add_subcommand("mode-scan", "per-channel lowest eigenvalues");
    auto* c_ext = app.add_subcommand("exterior-check", "exterior bias positivity check");
    auto* c_roof = app.add_subcommand("rooftop", "broken-line eigenvalues and trial energy");
    auto* c_verify = app.add_subcommand("verify-surface", "empirical surface assumption report");
    for (auto* c : {c_transverse, c_cone, c_mode, c_ext, c_roof, c_verify}) add_common(c, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_verify->parsed()) return run_verify_surface(opts);
        if (c_roof->parsed()) return run_rooftop(opts);

        const ExperimentConfig cfg = load(opts);
        if (c_transverse->parsed())
            return finish(transverse_report(cfg.alpha, cfg.v0_list, cfg.d_list,
                                            static_cast<unsigned>(cfg.seed)),
                          cfg, opts);
        if (c_cone->parsed())
            return finish(cone_bias_scan(cfg.theta, cfg.alpha, cfg.v0_list, cfg.bias_side,
                                         cfg.ladder),
                          cfg, opts);
        if (c_mode->parsed())
            return finish(mode_scan(cfg.theta, cfg.alpha, cfg.v0, cfg.m_list, cfg.ladder), cfg,
                          opts);
        if (c_ext->parsed())
            return finish(exterior_positivity_check(cfg.theta, cfg.alpha, cfg.v0, cfg.ladder),
                          cfg, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
