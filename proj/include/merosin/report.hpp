#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "merosin/catalog.hpp"
#include "merosin/orbit.hpp"
#include "merosin/render.hpp"

namespace merosin {

using json = nlohmann::json;

/// All floating output carries 15 significant digits: round the double to
/// its 15-digit decimal form so the JSON writer reproduces exactly that.
inline double round15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

inline std::string format15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline json to_json(const BifurcationConstants& c) {
    return json{{"lambda_2star", round15(c.lambda_2star)},
                {"lambda_star", round15(c.lambda_star)},
                {"lambda_hat", round15(c.lambda_hat)},
                {"lambda_1", round15(c.lambda_1)},
                {"lambda_2", round15(c.lambda_2)},
                {"witnesses",
                 json{{"x_star", round15(c.witness_x_star)},
                      {"p_2star", round15(c.witness_p_2star)},
                      {"y1", round15(c.witness_y1)},
                      {"y2", round15(c.witness_y2)}}}};
}

inline BifurcationConstants constants_from_json(const json& j) {
    BifurcationConstants c;
    c.lambda_2star = j.at("lambda_2star").get<double>();
    c.lambda_star = j.at("lambda_star").get<double>();
    c.lambda_hat = j.at("lambda_hat").get<double>();
    c.lambda_1 = j.at("lambda_1").get<double>();
    c.lambda_2 = j.at("lambda_2").get<double>();
    const json& w = j.at("witnesses");
    c.witness_x_star = w.at("x_star").get<double>();
    c.witness_p_2star = w.at("p_2star").get<double>();
    c.witness_y1 = w.at("y1").get<double>();
    c.witness_y2 = w.at("y2").get<double>();
    return c;
}

inline json to_json(const FixedPointRecord& r) {
    json j;
    switch (r.axis) {
        case AxisTag::RealAxis: j["location_kind"] = "real_axis"; break;
        case AxisTag::ImagAxis: j["location_kind"] = "imag_axis"; break;
        case AxisTag::OffAxis: j["location_kind"] = "complex"; break;
    }
    j["ordinate"] = round15(r.ordinate);
    j["location"] = {round15(r.location.real()), round15(r.location.imag())};
    j["multiplier"] = round15(r.multiplier);
    j["stability"] = to_string(r.stability);
    j["cycle_length"] = r.cycle_length;
    return j;
}

inline json to_json(const SingularValueCatalog& c) {
    json pts = json::array(), vals = json::array();
    for (double q : c.real_critical_points) pts.push_back(round15(q));
    for (double q : c.real_critical_values) vals.push_back(round15(q));
    return json{{"real_critical_points", pts},
                {"real_critical_values", vals},
                {"imag_critical_points", {round15(c.imag_critical_points[0]),
                                          round15(c.imag_critical_points[1])}},
                {"imag_critical_values", {round15(c.imag_critical_values[0]),
                                          round15(c.imag_critical_values[1])}},
                {"asymptotic_values", c.asymptotic_values}};
}

inline json to_json(const RegimeDescriptor& d) {
    json attrs = json::array();
    for (const auto& r : d.expected_attractors) attrs.push_back(to_json(r));
    return json{{"regime_id", to_string(d.id)}, {"notes", d.notes}, {"expected_attractors", attrs}};
}

inline json to_json(const OrbitOutcome& o) {
    json j;
    j["status"] = to_string(o.status);
    if (o.status == OrbitStatus::Converged) j["attractor"] = to_string(o.attractor);
    j["iterations"] = o.iterations;
    j["final_value"] = {round15(o.final_value.real()), round15(o.final_value.imag())};
    return j;
}

inline json to_json(const ChaosCertificate& c) {
    return json{{"lambda", round15(c.lambda)},
                {"p_lambda", round15(c.p_lambda)},
                {"f_at_p", round15(c.f_at_p)},
                {"J", {round15(c.interval_j[0]), round15(c.interval_j[1])}},
                {"K", {round15(c.interval_k[0]), round15(c.interval_k[1])}},
                {"covered", c.covered}};
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// One row per retained sample; scan rows that escaped or hit a pole
/// contribute no lines.
inline void write_bifurcation_csv(const BifurcationTable& t, std::ostream& out) {
    out << "lambda,ordinate\n";
    for (const auto& row : t.rows)
        for (double v : row.ordinates) out << format15(row.lambda) << ',' << format15(v) << '\n';
}

inline void write_bifurcation_csv(const BifurcationTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_bifurcation_csv: cannot open '" + path + "'");
    write_bifurcation_csv(t, out);
    if (!out) throw std::runtime_error("write_bifurcation_csv: write failed for '" + path + "'");
}

inline std::vector<std::pair<double, double>> read_bifurcation_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "lambda,ordinate")
        throw std::runtime_error("read_bifurcation_csv: missing 'lambda,ordinate' header");
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("read_bifurcation_csv: malformed row '" + line + "'");
        rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    return rows;
}

inline std::vector<std::pair<double, double>> read_bifurcation_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_bifurcation_csv: cannot open '" + path + "'");
    return read_bifurcation_csv(in);
}

/// Optional grid dump: i,j,label,iterations.
inline void write_grid_csv(const ClassifiedGrid& g, std::ostream& out) {
    out << "i,j,label,iterations\n";
    for (int j = 0; j < g.window.height; ++j)
        for (int i = 0; i < g.window.width; ++i)
            out << i << ',' << j << ',' << to_string(g.label(i, j)) << ','
                << g.iterations[static_cast<size_t>(j) * g.window.width + i] << '\n';
}

inline void write_grid_csv(const ClassifiedGrid& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_grid_csv: cannot open '" + path + "'");
    write_grid_csv(g, out);
}

}  // namespace merosin
