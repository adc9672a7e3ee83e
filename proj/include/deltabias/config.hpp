#pragma once

// Plain-text key=value experiment config.  Lines are `key = value`; `#`
// starts a comment; list values are comma separated.  Unknown keys are an
// error so typos fail loudly instead of silently using a default.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "deltabias/experiments.hpp"
#include "deltabias/geometry.hpp"
#include "deltabias/transverse.hpp"

namespace deltabias {

struct ExperimentConfig {
    // surface
    std::string kind = "cone";  // cone | rooftop
    double theta = M_PI / 4.0;
    double L = 10.0;
    double smoothing_radius = 0.0;
    // coupling
    double alpha = 1.0;
    double v0 = 0.0;
    BiasSide bias_side = BiasSide::Interior;
    // grid ladder
    GridLadder ladder;
    // scan lists
    std::vector<double> v0_list;
    std::vector<int> m_list = {0, 1, 2};
    std::vector<double> d_list = {5.0, 10.0, 20.0, 40.0};
    unsigned long long seed = 1;

    std::string echo;  // normalized round-trippable text
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline double parse_angle(const std::string& v) {
    // accepts plain numbers (radians) and the forms "pi/4", "pi", "2pi/3"
    const auto pos = v.find("pi");
    if (pos == std::string::npos) return std::stod(v);
    const std::string pre = trim(v.substr(0, pos));
    const std::string post = trim(v.substr(pos + 2));
    double val = pre.empty() ? M_PI : std::stod(pre) * M_PI;
    if (!post.empty()) {
        if (post[0] != '/') throw std::invalid_argument("bad angle: " + v);
        val /= std::stod(trim(post.substr(1)));
    }
    return val;
}

} // namespace detail

inline ExperimentConfig parse_config(std::istream& is) {
    ExperimentConfig cfg;
    std::ostringstream echo;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        echo << key << " = " << val << "\n";

        if (key == "kind") {
            if (val != "cone" && val != "rooftop")
                throw std::invalid_argument("config: kind must be cone or rooftop");
            cfg.kind = val;
        } else if (key == "theta") {
            cfg.theta = detail::parse_angle(val);
        } else if (key == "L") {
            cfg.L = std::stod(val);
        } else if (key == "smoothing_radius") {
            cfg.smoothing_radius = std::stod(val);
        } else if (key == "alpha") {
            cfg.alpha = std::stod(val);
        } else if (key == "v0") {
            cfg.v0 = std::stod(val);
        } else if (key == "bias_side") {
            if (val == "interior") cfg.bias_side = BiasSide::Interior;
            else if (val == "exterior") cfg.bias_side = BiasSide::Exterior;
            else throw std::invalid_argument("config: bias_side must be interior or exterior");
        } else if (key == "boxes") {
            cfg.ladder.boxes.clear();
            for (const auto& s : detail::split_list(val)) cfg.ladder.boxes.push_back(std::stod(s));
        } else if (key == "spacing") {
            cfg.ladder.spacing = std::stod(val);
        } else if (key == "v0_list") {
            cfg.v0_list.clear();
            for (const auto& s : detail::split_list(val)) cfg.v0_list.push_back(std::stod(s));
        } else if (key == "m_list") {
            cfg.m_list.clear();
            for (const auto& s : detail::split_list(val)) cfg.m_list.push_back(std::stoi(s));
        } else if (key == "d_list") {
            cfg.d_list.clear();
            for (const auto& s : detail::split_list(val)) cfg.d_list.push_back(std::stod(s));
        } else if (key == "seed") {
            cfg.seed = std::stoull(val);
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    cfg.echo = echo.str();
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return parse_config(in);
}

// Default V0 scan: 21 points in [0, alpha^2].
inline std::vector<double> default_v0_scan(double alpha) {
    std::vector<double> out;
    for (int i = 0; i <= 20; ++i) out.push_back(alpha * alpha * i / 20.0);
    return out;
}

inline SurfaceGeometry make_surface(const ExperimentConfig& cfg) {
    if (cfg.kind == "cone") return cone_surface(ConeSpec{cfg.theta});
    return rooftop_surface(RooftopSpec{cfg.L, cfg.theta, cfg.smoothing_radius});
}

} // namespace deltabias
