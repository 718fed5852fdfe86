#include "su11kc/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace su11kc {

using ordered_json = nlohmann::ordered_json;

std::string format_sig9(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

double round_sig9(double value) {
    return std::strtod(format_sig9(value).c_str(), nullptr);
}

namespace {

ordered_json params_json(const std::map<std::string, double>& parameters) {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : parameters) {
        if (value == static_cast<long long>(value) && std::abs(value) < 1e15)
            out[key] = static_cast<long long>(value);
        else
            out[key] = round_sig9(value);
    }
    return out;
}

}  // namespace

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
    std::ostringstream os;
    os << "n,N,s,xi,E_over_m\n";
    for (const SpectrumRow& r : rows)
        os << r.n << ',' << r.N << ',' << format_sig9(r.s) << ','
           << format_sig9(r.xi) << ',' << format_sig9(r.e_over_m) << '\n';
    return os.str();
}

std::string spectrum_json(const std::map<std::string, double>& parameters,
                          const std::vector<SpectrumRow>& rows) {
    ordered_json doc;
    doc["parameters"] = params_json(parameters);
    doc["rows"] = ordered_json::array();
    for (const SpectrumRow& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["N"] = r.N;
        row["s"] = round_sig9(r.s);
        row["xi"] = round_sig9(r.xi);
        row["E_over_m"] = round_sig9(r.e_over_m);
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string wavefunction_csv(const std::vector<double>& rho,
                             const std::vector<double>* f1,
                             const std::vector<double>* f2) {
    std::ostringstream os;
    os << "rho";
    if (f1) os << ",F1";
    if (f2) os << ",F2";
    os << '\n';
    for (size_t i = 0; i < rho.size(); ++i) {
        os << format_sig9(rho[i]);
        if (f1) os << ',' << format_sig9((*f1)[i]);
        if (f2) os << ',' << format_sig9((*f2)[i]);
        os << '\n';
    }
    return os.str();
}

std::string wavefunction_json(const std::map<std::string, double>& parameters,
                              const std::vector<double>& rho,
                              const std::vector<double>* f1,
                              const std::vector<double>* f2) {
    ordered_json doc;
    doc["parameters"] = params_json(parameters);
    auto column = [](const std::vector<double>& v) {
        ordered_json arr = ordered_json::array();
        for (double x : v) arr.push_back(round_sig9(x));
        return arr;
    };
    doc["rho"] = column(rho);
    if (f1) doc["F1"] = column(*f1);
    if (f2) doc["F2"] = column(*f2);
    return doc.dump(2) + "\n";
}

std::string report_json(const VerificationReport& report,
                        const std::map<std::string, double>& parameters) {
    ordered_json doc;
    doc["version"] = "1.0";
    doc["parameters"] = params_json(parameters);
    doc["entries"] = ordered_json::array();
    for (const CheckEntry& entry : report.entries) {
        ordered_json e;
        e["check_name"] = entry.check_name;
        e["parameters"] = params_json(entry.parameters);
        e["measured_error"] = round_sig9(entry.measured_error);
        e["tolerance"] = round_sig9(entry.tolerance);
        e["passed"] = entry.passed;
        doc["entries"].push_back(std::move(e));
    }
    doc["passed"] = report.passed();
    return doc.dump(2) + "\n";
}

std::string diagram_csv(const DiagramData& data) {
    std::ostringstream os;
    os << "k,N,n,E_over_m,dashed\n";
    for (const DiagramLevel& level : data.levels)
        os << level.k << ',' << level.N << ',' << level.n << ','
           << format_sig9(level.e_over_m) << ',' << (level.dashed ? 1 : 0) << '\n';
    return os.str();
}

namespace {

struct SvgLayout {
    double margin = 50.0;
    double column_width = 56.0;
    double pair_gap = 26.0;
    double level_width = 40.0;
    double top = 40.0;
    double plot_height = 420.0;

    double column_x(int k) const {
        const int pair = std::abs(k) - 1;
        const double x0 = margin + pair * (2.0 * column_width + pair_gap);
        return k < 0 ? x0 : x0 + column_width;
    }
    double level_y(double e_over_m, double e_min) const {
        const double span = std::max(1.0 - e_min, 1e-12);
        return top + (1.0 - e_over_m) / span * plot_height;
    }
};

}  // namespace

std::string diagram_svg(const DiagramData& data) {
    SvgLayout layout;
    double e_min = 1.0;
    for (const DiagramLevel& level : data.levels)
        e_min = std::min(e_min, level.e_over_m);

    const double width =
        2.0 * layout.margin + data.k_max * (2.0 * layout.column_width + layout.pair_gap);
    const double height = layout.top + layout.plot_height + 60.0;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_sig9(width)
       << "\" height=\"" << format_sig9(height) << "\" viewBox=\"0 0 "
       << format_sig9(width) << ' ' << format_sig9(height) << "\">\n";
    os << "  <defs>\n"
          "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
          "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\n"
          "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555\"/>\n"
          "    </marker>\n"
          "  </defs>\n";

    // One line element per level; n = 0 levels are dashed.
    for (const DiagramLevel& level : data.levels) {
        const double x = layout.column_x(level.k);
        const double y = layout.level_y(level.e_over_m, e_min);
        os << "  <line class=\"level\" data-k=\"" << level.k << "\" data-n=\""
           << level.n << "\" data-e=\"" << format_sig9(level.e_over_m) << "\" x1=\""
           << format_sig9(x) << "\" y1=\"" << format_sig9(y) << "\" x2=\""
           << format_sig9(x + layout.level_width) << "\" y2=\"" << format_sig9(y)
           << "\" stroke=\"#000\" stroke-width=\"2\""
           << (level.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
    }

    // Ladder-action arrows between level midpoints.
    auto find_level = [&data](int k, int N) -> const DiagramLevel* {
        for (const DiagramLevel& level : data.levels)
            if (level.k == k && level.N == N) return &level;
        return nullptr;
    };
    for (const DiagramArrow& arrow : data.arrows) {
        const DiagramLevel* from = find_level(arrow.k_from, arrow.N_from);
        const DiagramLevel* to = find_level(arrow.k_to, arrow.N_to);
        if (!from || !to) continue;
        const bool horizontal = arrow.k_from != arrow.k_to;
        const double offset = horizontal ? 0.0 : (arrow.label.back() == '+' ? 12.0 : 28.0);
        const double x1 = layout.column_x(from->k) + offset + (horizontal ? layout.level_width : 0.0);
        const double x2 = layout.column_x(to->k) + offset;
        const double y1 = layout.level_y(from->e_over_m, e_min) + (horizontal ? -4.0 : 0.0);
        const double y2 = layout.level_y(to->e_over_m, e_min) + (horizontal ? -4.0 : 0.0);
        os << "  <line class=\"arrow\" x1=\"" << format_sig9(x1) << "\" y1=\""
           << format_sig9(y1) << "\" x2=\"" << format_sig9(x2) << "\" y2=\""
           << format_sig9(y2)
           << "\" stroke=\"#555\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n";
        os << "  <text class=\"arrow-label\" x=\"" << format_sig9((x1 + x2) / 2.0 + 4.0)
           << "\" y=\"" << format_sig9((y1 + y2) / 2.0 - 4.0)
           << "\" font-size=\"11\" fill=\"#555\">" << arrow.label << "</text>\n";
    }

    // Column labels.
    for (int abs_k = 1; abs_k <= data.k_max; ++abs_k) {
        for (int k : {-abs_k, abs_k}) {
            os << "  <text class=\"column-label\" x=\""
               << format_sig9(layout.column_x(k) + layout.level_width / 2.0) << "\" y=\""
               << format_sig9(layout.top + layout.plot_height + 30.0)
               << "\" font-size=\"12\" text-anchor=\"middle\">k=" << k << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace su11kc
