#pragma once

// Scan reports: eigenvalue rows with full grid metadata, tri-state claim
// verdicts, CSV/JSON serialization and a minimal static SVG line chart.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace deltabias {

enum class Verdict { Confirmed, Refuted, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::Refuted: return "Refuted";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct EigRow {
    std::string experiment_id;
    int m = 0;
    double v0 = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
    double box = 0.0;      // full box side, natural units
    double spacing = 0.0;  // grid spacing
    int index = 0;         // eigenvalue index within the problem
    double eigenvalue = 0.0;
    double residual = 0.0;
    std::string classification;  // Discrete | EssentialEdgeArtifact | scan
};

struct ClaimVerdict {
    std::string claim;       // short claim identifier
    std::string inequality;  // the inequality actually tested, with numbers
    Verdict verdict = Verdict::Inconclusive;
};

struct ScanReport {
    std::string experiment_id;
    std::vector<std::string> axis_labels;   // parameter axis description
    std::vector<double> axis;               // V0 grid, m list or d grid
    std::vector<EigRow> rows;
    std::vector<std::pair<double, double>> threshold_curve;  // (v0, mu)
    std::vector<ClaimVerdict> verdicts;
    std::vector<std::string> notes;
    std::string config_echo;                // embedded config for reproducibility

    Verdict overall() const {
        Verdict out = Verdict::Confirmed;
        for (const auto& v : verdicts) {
            if (v.verdict == Verdict::Refuted) return Verdict::Refuted;
            if (v.verdict == Verdict::Inconclusive) out = Verdict::Inconclusive;
        }
        return out;
    }
};

inline void write_csv(const ScanReport& rep, std::ostream& os) {
    os << "experiment_id,m,v0,alpha,theta,box,spacing,index,eigenvalue,residual,"
          "classification\n";
    os.precision(17);
    for (const auto& r : rep.rows)
        os << r.experiment_id << ',' << r.m << ',' << r.v0 << ',' << r.alpha << ','
           << r.theta << ',' << r.box << ',' << r.spacing << ',' << r.index << ','
           << r.eigenvalue << ',' << r.residual << ',' << r.classification << '\n';
}

inline nlohmann::json to_json(const ScanReport& rep) {
    nlohmann::json j;
    j["experiment_id"] = rep.experiment_id;
    j["axis"] = rep.axis;
    j["axis_labels"] = rep.axis_labels;
    j["config"] = rep.config_echo;
    j["notes"] = rep.notes;
    j["threshold_curve"] = nlohmann::json::array();
    for (const auto& [v0, mu] : rep.threshold_curve)
        j["threshold_curve"].push_back({{"v0", v0}, {"mu", mu}});
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rep.rows)
        j["rows"].push_back({{"experiment_id", r.experiment_id},
                             {"m", r.m},
                             {"v0", r.v0},
                             {"alpha", r.alpha},
                             {"theta", r.theta},
                             {"box", r.box},
                             {"spacing", r.spacing},
                             {"index", r.index},
                             {"eigenvalue", r.eigenvalue},
                             {"residual", r.residual},
                             {"classification", r.classification}});
    j["verdicts"] = nlohmann::json::array();
    for (const auto& v : rep.verdicts)
        j["verdicts"].push_back(
            {{"claim", v.claim}, {"inequality", v.inequality}, {"verdict", to_string(v.verdict)}});
    j["overall"] = to_string(rep.overall());
    return j;
}

// Static SVG line chart: one polyline per named series plus axes.
struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

inline void write_svg_chart(const std::vector<PlotSeries>& series, const std::string& title,
                            const std::string& x_label, const std::string& y_label,
                            std::ostream& os) {
    const int W = 720, H = 480, ML = 70, MR = 20, MT = 40, MB = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmax > xmin)) { xmax = xmin + 1.0; }
    if (!(ymax > ymin)) { ymax = ymin + 1.0; }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
       << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
    os << "<text x='" << W / 2 << "' y='22' text-anchor='middle' font-size='15'>" << title
       << "</text>\n";
    os << "<line x1='" << ML << "' y1='" << H - MB << "' x2='" << W - MR << "' y2='" << H - MB
       << "' stroke='black'/>\n";
    os << "<line x1='" << ML << "' y1='" << MT << "' x2='" << ML << "' y2='" << H - MB
       << "' stroke='black'/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double x = xmin + (xmax - xmin) * t / 5.0;
        const double y = ymin + (ymax - ymin) * t / 5.0;
        os << "<text x='" << px(x) << "' y='" << H - MB + 18
           << "' text-anchor='middle' font-size='11'>" << x << "</text>\n";
        os << "<text x='" << ML - 8 << "' y='" << py(y) + 4
           << "' text-anchor='end' font-size='11'>" << y << "</text>\n";
    }
    os << "<text x='" << W / 2 << "' y='" << H - 12 << "' text-anchor='middle' font-size='12'>"
       << x_label << "</text>\n";
    os << "<text x='16' y='" << H / 2 << "' text-anchor='middle' font-size='12' transform='rotate(-90 16 "
       << H / 2 << ")'>" << y_label << "</text>\n";
    int ci = 0;
    for (const auto& s : series) {
        os << "<polyline fill='none' stroke='" << colors[ci % 5] << "' stroke-width='1.5' points='";
        for (const auto& [x, y] : s.points) os << px(x) << "," << py(y) << " ";
        os << "'/>\n";
        os << "<text x='" << W - MR - 6 << "' y='" << MT + 16 * (ci + 1)
           << "' text-anchor='end' font-size='12' fill='" << colors[ci % 5] << "'>" << s.label
           << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
}

} // namespace deltabias
