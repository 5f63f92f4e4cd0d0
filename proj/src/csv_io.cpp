#include "qwom/csv_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qwom/error.hpp"
#include "qwom/scenario_io.hpp"
#include "qwom/version.hpp"

namespace qwom {

namespace {

constexpr const char* kHeader = "t,re_a,im_a,re_b,im_b,q,p,A,B,residual";

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_atomically(const std::filesystem::path& path,
                      const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "'");
        out << content;
        if (!out) throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("rename to '" + path.string() + "' failed: " +
                      ec.message());
    }
}

nlohmann::json scenario_to_json(const Scenario& sc) {
    // Mirror the scenario-file keys so the sidecar alone reproduces the run.
    nlohmann::json j;
    std::istringstream in(write_scenario(sc));
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t eq = line.find('=');
        const std::string key = line.substr(0, eq - 1);
        const std::string value = line.substr(eq + 2);
        j[key] = value;
    }
    return j;
}

}  // namespace

void write_csv(const TimeSeries& series, const Scenario& sc,
               const std::filesystem::path& csv_path) {
    std::ostringstream out;
    out << kHeader << "\n";
    for (Eigen::Index i = 0; i < series.size(); ++i) {
        out << fmt12(series.t[i]) << ',' << fmt12(series.re_a[i]) << ','
            << fmt12(series.im_a[i]) << ',' << fmt12(series.re_b[i]) << ','
            << fmt12(series.im_b[i]) << ',' << fmt12(series.q[i]) << ','
            << fmt12(series.p[i]) << ',' << fmt12(series.photon[i]) << ','
            << fmt12(series.exciton[i]) << ','
            << fmt12(series.residual.size() == series.size()
                         ? series.residual[i]
                         : std::numeric_limits<double>::quiet_NaN())
            << "\n";
    }
    write_atomically(csv_path, out.str());

    nlohmann::json side;
    side["artifact"] = {{"name", "qwom"}, {"version", kVersion}};
    side["backend"] = series.backend;
    side["estimator"] = series.estimator;
    side["step_count"] = series.step_count;
    side["scenario"] = scenario_to_json(sc);
    std::filesystem::path json_path = csv_path;
    json_path.replace_extension(".json");
    write_atomically(json_path, side.dump(2) + "\n");
}

TimeSeries read_csv(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + csv_path.string() + "'");
    std::string header;
    if (!std::getline(in, header) || header != kHeader) {
        throw IoError("'" + csv_path.string() + "': unexpected CSV header");
    }
    std::vector<std::array<double, 10>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, 10> row{};
        std::istringstream ls(line);
        std::string cell;
        for (int c = 0; c < 10; ++c) {
            if (!std::getline(ls, cell, ',')) {
                throw IoError("'" + csv_path.string() + "': short row '" +
                              line + "'");
            }
            row[static_cast<std::size_t>(c)] = std::strtod(cell.c_str(),
                                                           nullptr);
        }
        rows.push_back(row);
    }

    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    TimeSeries s;
    for (Eigen::ArrayXd* ch :
         {&s.t, &s.re_a, &s.im_a, &s.re_b, &s.im_b, &s.q, &s.p, &s.photon,
          &s.exciton, &s.residual}) {
        ch->resize(n);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        s.t[i] = r[0];
        s.re_a[i] = r[1];
        s.im_a[i] = r[2];
        s.re_b[i] = r[3];
        s.im_b[i] = r[4];
        s.q[i] = r[5];
        s.p[i] = r[6];
        s.photon[i] = r[7];
        s.exciton[i] = r[8];
        s.residual[i] = r[9];
    }
    return s;
}

Scenario scenario_from_sidecar(const std::filesystem::path& json_path) {
    std::ifstream in(json_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + json_path.string() + "'");
    nlohmann::json side;
    try {
        in >> side;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("'" + json_path.string() + "': " + e.what());
    }
    if (!side.contains("scenario")) {
        throw IoError("'" + json_path.string() + "' has no scenario section");
    }
    std::string text;
    for (const auto& [key, value] : side["scenario"].items()) {
        text += key + " = " + value.get<std::string>() + "\n";
    }
    return parse_scenario(text);
}

}  // namespace qwom
