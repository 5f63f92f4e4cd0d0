#include "qwom/scenario_io.hpp"

#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qwom/error.hpp"
#include "qwom/presets.hpp"

namespace qwom {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + " " + fmt(z.imag()); }

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (trim(v.substr(pos)).empty()) return x;
    } catch (const std::exception&) {
    }
    throw ScenarioError("key '" + key + "': '" + v + "' is not a number");
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(v, &pos);
        if (trim(v.substr(pos)).empty()) return x;
    } catch (const std::exception&) {
    }
    throw ScenarioError("key '" + key + "': '" + v +
                        "' is not a non-negative integer");
}

Complex parse_complex(const std::string& key, const std::string& v) {
    std::istringstream in(v);
    double re = 0.0, im = 0.0;
    if (!(in >> re)) {
        throw ScenarioError("key '" + key + "': '" + v +
                            "' is not a complex value ('re im')");
    }
    if (!(in >> im)) im = 0.0;
    std::string rest;
    if (in >> rest) {
        throw ScenarioError("key '" + key + "': trailing input '" + rest +
                            "'");
    }
    return {re, im};
}

struct KeyDef {
    std::function<void(Scenario&, const std::string&)> set;
    std::function<std::string(const Scenario&)> get;
};

#define QWOM_DOUBLE_KEY(expr)                                            \
    KeyDef{[](Scenario& s, const std::string& v) {                      \
               s.expr = parse_double(#expr, v);                         \
           },                                                            \
           [](const Scenario& s) { return fmt(s.expr); }}

// Ordered key table; the writer emits in this order.
const std::vector<std::pair<std::string, KeyDef>>& key_table() {
    static const std::vector<std::pair<std::string, KeyDef>> table = {
        {"name",
         {[](Scenario& s, const std::string& v) { s.name = v; },
          [](const Scenario& s) { return s.name; }}},
        {"variant",
         {[](Scenario& s, const std::string& v) {
              s.variant = variant_from_string(v);
          },
          [](const Scenario& s) { return to_string(s.variant); }}},
        {"backend",
         {[](Scenario& s, const std::string& v) {
              s.backend = backend_from_string(v);
          },
          [](const Scenario& s) { return to_string(s.backend); }}},
        {"t_end", QWOM_DOUBLE_KEY(t_end)},
        {"sample_dt", QWOM_DOUBLE_KEY(sample_dt)},
        {"seed",
         {[](Scenario& s, const std::string& v) {
              s.seed = parse_u64("seed", v);
          },
          [](const Scenario& s) { return std::to_string(s.seed); }}},
        {"n_traj",
         {[](Scenario& s, const std::string& v) {
              s.n_traj = static_cast<std::size_t>(parse_u64("n_traj", v));
          },
          [](const Scenario& s) { return std::to_string(s.n_traj); }}},
        {"initial_style",
         {[](Scenario& s, const std::string& v) {
              s.initial_style = initial_style_from_string(v);
          },
          [](const Scenario& s) { return to_string(s.initial_style); }}},
        {"chi_mode",
         {[](Scenario& s, const std::string& v) {
              s.chi_mode = chi_mode_from_string(v);
          },
          [](const Scenario& s) { return to_string(s.chi_mode); }}},
        {"optical_noise",
         {[](Scenario& s, const std::string& v) {
              s.optical_noise = optical_noise_from_string(v);
          },
          [](const Scenario& s) { return to_string(s.optical_noise); }}},
        {"omega_b", QWOM_DOUBLE_KEY(params.omega_b)},
        {"omega_c", QWOM_DOUBLE_KEY(params.omega_c)},
        {"omega_m", QWOM_DOUBLE_KEY(params.omega_m)},
        {"omega_p", QWOM_DOUBLE_KEY(params.omega_p)},
        {"delta_b", QWOM_DOUBLE_KEY(params.delta_b)},
        {"delta_c", QWOM_DOUBLE_KEY(params.delta_c)},
        {"g0", QWOM_DOUBLE_KEY(params.g0)},
        {"gm", QWOM_DOUBLE_KEY(params.gm)},
        {"kappa", QWOM_DOUBLE_KEY(params.kappa)},
        {"gamma", QWOM_DOUBLE_KEY(params.gamma)},
        {"gamma_m", QWOM_DOUBLE_KEY(params.gamma_m)},
        {"n_th", QWOM_DOUBLE_KEY(params.n_th)},
        {"eps_p", QWOM_DOUBLE_KEY(params.eps_p)},
        {"reference_rate_label",
         {[](Scenario& s, const std::string& v) {
              s.params.reference_rate_label = v;
          },
          [](const Scenario& s) { return s.params.reference_rate_label; }}},
        {"epsilon", QWOM_DOUBLE_KEY(modulation.epsilon)},
        {"Omega", QWOM_DOUBLE_KEY(modulation.Omega)},
        {"eta", QWOM_DOUBLE_KEY(modulation.eta)},
        {"lambda", QWOM_DOUBLE_KEY(modulation.lambda)},
        {"a",
         {[](Scenario& s, const std::string& v) {
              s.initial.a = parse_complex("a", v);
          },
          [](const Scenario& s) { return fmt(s.initial.a); }}},
        {"b",
         {[](Scenario& s, const std::string& v) {
              s.initial.b = parse_complex("b", v);
          },
          [](const Scenario& s) { return fmt(s.initial.b); }}},
        {"q", QWOM_DOUBLE_KEY(initial.q)},
        {"p", QWOM_DOUBLE_KEY(initial.p)},
        {"method",
         {[](Scenario& s, const std::string& v) {
              s.integrator.method = method_from_string(v);
          },
          [](const Scenario& s) { return to_string(s.integrator.method); }}},
        {"h", QWOM_DOUBLE_KEY(integrator.h)},
        {"rel_tol", QWOM_DOUBLE_KEY(integrator.rel_tol)},
        {"abs_tol", QWOM_DOUBLE_KEY(integrator.abs_tol)},
        {"h_min", QWOM_DOUBLE_KEY(integrator.h_min)},
        {"h_max", QWOM_DOUBLE_KEY(integrator.h_max)},
    };
    return table;
}

#undef QWOM_DOUBLE_KEY

const KeyDef* find_key(const std::string& name) {
    for (const auto& [key, def] : key_table()) {
        if (key == name) return &def;
    }
    return nullptr;
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ScenarioError("line " + std::to_string(line_no) +
                                ": expected 'key = value', got '" + stripped +
                                "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const KeyDef* def = find_key(key);
        if (def == nullptr) {
            throw ScenarioError("unknown key '" + key + "' (line " +
                                std::to_string(line_no) + ")");
        }
        if (!seen.insert(key).second) {
            throw ScenarioError("duplicate key '" + key + "'");
        }
        def->set(sc, value);
    }
    validate(sc);
    return sc;
}

Scenario load_scenario(const std::filesystem::path& file) {
    Scenario sc = parse_scenario(read_file(file));
    if (sc.name == "scenario") sc.name = file.stem().string();
    return sc;
}

std::string write_scenario(const Scenario& sc) {
    std::ostringstream out;
    for (const auto& [key, def] : key_table()) {
        out << key << " = " << def.get(sc) << "\n";
    }
    return out.str();
}

void set_numeric_field(Scenario& sc, const std::string& key, double value) {
    static const std::set<std::string> numeric = {
        "t_end",   "sample_dt", "omega_b", "omega_c", "omega_m", "omega_p",
        "delta_b", "delta_c",   "g0",      "gm",      "kappa",   "gamma",
        "gamma_m", "n_th",      "eps_p",   "epsilon", "Omega",   "eta",
        "lambda",  "q",         "p",       "h",       "rel_tol", "abs_tol",
        "h_min",   "h_max",     "seed",    "n_traj"};
    if (!numeric.count(key)) {
        throw ScenarioError("'" + key + "' is not a sweepable numeric key");
    }
    find_key(key)->set(sc, fmt(value));
}

SweepSpec parse_sweep(const std::string& text,
                      const std::filesystem::path& base_dir) {
    SweepSpec spec;
    bool have_base = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ScenarioError("sweep line " + std::to_string(line_no) +
                                ": expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "base") {
            spec.base = is_preset(value) ? preset(value)
                                         : load_scenario(base_dir / value);
            have_base = true;
        } else if (key == "output") {
            spec.output_dir = value;
        } else if (key == "max_runs") {
            spec.max_runs =
                static_cast<std::size_t>(parse_u64("max_runs", value));
        } else if (key == "axis") {
            std::istringstream av(value);
            std::string param;
            av >> param;
            std::vector<double> values;
            double v = 0.0;
            while (av >> v) values.push_back(v);
            if (param.empty() || values.empty()) {
                throw ScenarioError(
                    "axis needs a key and at least one value (line " +
                    std::to_string(line_no) + ")");
            }
            spec.axes.emplace_back(param, values);
        } else {
            throw ScenarioError("unknown sweep key '" + key + "' (line " +
                                std::to_string(line_no) + ")");
        }
    }
    if (!have_base) throw ScenarioError("sweep file needs a 'base' line");
    if (spec.axes.empty()) {
        throw ScenarioError("sweep file needs at least one 'axis' line");
    }
    return spec;
}

SweepSpec load_sweep(const std::filesystem::path& file) {
    return parse_sweep(read_file(file), file.parent_path());
}

std::vector<SweepEntry> expand_sweep(const SweepSpec& spec) {
    std::size_t total = 1;
    for (const auto& [key, values] : spec.axes) {
        total *= values.size();
        if (total > spec.max_runs) {
            throw ScenarioError("sweep expands to more than " +
                                std::to_string(spec.max_runs) + " runs");
        }
    }

    std::vector<SweepEntry> entries;
    entries.reserve(total);
    std::vector<std::size_t> idx(spec.axes.size(), 0);
    for (std::size_t run = 0; run < total; ++run) {
        SweepEntry entry;
        entry.scenario = spec.base;
        entry.label = spec.base.name;
        for (std::size_t ax = 0; ax < spec.axes.size(); ++ax) {
            const auto& [key, values] = spec.axes[ax];
            const double v = values[idx[ax]];
            set_numeric_field(entry.scenario, key, v);
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.6g", v);
            entry.label += "__" + key + "_" + buf;
        }
        entry.scenario.name = entry.label;
        validate(entry.scenario);
        entries.push_back(std::move(entry));
        // Odometer over the axes, last axis fastest.
        for (std::size_t ax = spec.axes.size(); ax-- > 0;) {
            if (++idx[ax] < spec.axes[ax].second.size()) break;
            idx[ax] = 0;
        }
    }
    return entries;
}

}  // namespace qwom
