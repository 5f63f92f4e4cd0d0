#include "qwom/presets.hpp"

#include <algorithm>

#include "qwom/error.hpp"

namespace qwom {

namespace {

// Common rates of the modulated-cavity runs, in units of gamma.
Scenario modulated_cavity_base() {
    Scenario sc;
    sc.variant = Variant::ClassicalMirror;
    sc.params.gamma = 1.0;
    sc.params.delta_b = 2.0;
    sc.params.delta_c = 4.712;
    sc.params.eps_p = 5.0;
    sc.params.gamma_m = 1e-5;
    sc.params.n_th = 175.0;
    sc.params.omega_c = 1.36;
    sc.params.omega_m = 4.712;
    sc.params.omega_b = 2.0;  // = delta_b with omega_p = 0
    sc.params.omega_p = 0.0;
    sc.params.reference_rate_label = "gamma";
    sc.modulation.epsilon = 0.1;
    sc.modulation.Omega = 1.36;  // resonant with omega_c
    sc.initial.b = Complex(1.0, 0.0);
    return sc;
}

// Common rates of the modulated-pump runs, in units of omega_m.
Scenario modulated_pump_base() {
    Scenario sc;
    sc.variant = Variant::ModulatedPump;
    sc.params.omega_m = 1.0;
    sc.params.delta_b = 0.459;
    sc.params.delta_c = 1.0;
    sc.params.eps_p = 1.5;
    sc.params.gamma_m = 1e-5;
    sc.params.n_th = 175.0;
    sc.params.gamma = 0.212;
    sc.params.gm = 0.1;
    sc.params.omega_c = 1.0;   // = delta_c with omega_p = 0
    sc.params.omega_b = 0.459;
    sc.params.omega_p = 0.0;
    sc.params.reference_rate_label = "omega_m";
    sc.modulation.eta = 0.1;
    sc.modulation.lambda = 1.0;  // resonant with omega_m
    sc.initial.b = Complex(1.0, 0.0);
    return sc;
}

struct Entry {
    const char* name;
    Scenario (*make)();
};

Scenario fig2(double kappa, double g0) {
    Scenario sc = modulated_cavity_base();
    sc.params.kappa = kappa;
    sc.params.g0 = g0;
    return sc;
}

Scenario fig4(double g0) {
    Scenario sc = fig2(1.5, g0);
    sc.variant = Variant::QuantizedMirror;
    sc.modulation.Omega = 4.712;  // resonant with omega_m
    return sc;
}

Scenario fig5(double g0, double Omega) {
    Scenario sc = fig2(0.1, g0);
    sc.variant = Variant::QuantizedMirror;
    sc.modulation.Omega = Omega;
    return sc;
}

Scenario fig6(double kappa, double g0) {
    Scenario sc = modulated_pump_base();
    sc.params.kappa = kappa;
    sc.params.g0 = g0;
    return sc;
}

// The catalog. fig2/fig3 share dynamics (photon vs fluorescence channel), as
// do fig4 a,b vs c,d and fig7 a,b vs c,d.
const Entry kCatalog[] = {
    {"fig2a", [] { return fig2(1.5, 0.005); }},
    {"fig2b", [] { return fig2(1.5, 5.0); }},
    {"fig2c", [] { return fig2(0.1, 0.005); }},
    {"fig2d", [] { return fig2(0.1, 5.0); }},
    {"fig3a", [] { return fig2(1.5, 0.005); }},
    {"fig3b", [] { return fig2(1.5, 5.0); }},
    {"fig3c", [] { return fig2(0.1, 0.005); }},
    {"fig3d", [] { return fig2(0.1, 5.0); }},
    {"fig4a", [] { return fig4(0.005); }},
    {"fig4b", [] { return fig4(5.0); }},
    {"fig4c", [] { return fig4(0.005); }},
    {"fig4d", [] { return fig4(5.0); }},
    {"fig5a", [] { return fig5(0.005, 4.712); }},
    {"fig5b", [] { return fig5(0.005, 9.424); }},
    {"fig5c", [] { return fig5(5.0, 4.712); }},
    {"fig5d", [] { return fig5(5.0, 9.424); }},
    {"fig6a", [] { return fig6(0.1, 1.061); }},
    {"fig6b", [] { return fig6(0.1, 0.005); }},
    {"fig6c", [] { return fig6(1.5, 1.061); }},
    {"fig6d", [] { return fig6(1.5, 0.005); }},
    {"fig7a", [] { return fig6(1.5, 1.061); }},
    {"fig7b", [] { return fig6(1.5, 0.005); }},
    {"fig7c", [] { return fig6(1.5, 1.061); }},
    {"fig7d", [] { return fig6(1.5, 0.005); }},
};

}  // namespace

Scenario preset(const std::string& name) {
    for (const auto& e : kCatalog) {
        if (name == e.name) {
            Scenario sc = e.make();
            sc.name = name;
            validate(sc);
            return sc;
        }
    }
    throw ScenarioError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& e : kCatalog) names.emplace_back(e.name);
    return names;
}

bool is_preset(const std::string& name) {
    return std::any_of(std::begin(kCatalog), std::end(kCatalog),
                       [&](const Entry& e) { return name == e.name; });
}

std::string preset_sweep_key(const std::string& name) {
    return preset(name).variant == Variant::ModulatedPump ? "eta" : "epsilon";
}

std::vector<double> preset_modulation_sweep(const std::string& name) {
    return preset(name).variant == Variant::ModulatedPump
               ? std::vector<double>{0.1, 0.4}
               : std::vector<double>{0.1, 0.2};
}

}  // namespace qwom
