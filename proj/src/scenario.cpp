#include "qwom/scenario.hpp"

#include <cmath>

#include "qwom/error.hpp"

namespace qwom {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ScenarioError(msg);
}

}  // namespace

void validate(const Scenario& s) {
    const auto& p = s.params;
    require(p.kappa >= 0.0, "kappa must be >= 0");
    require(p.gamma >= 0.0, "gamma must be >= 0");
    require(p.gamma_m >= 0.0, "gamma_m must be >= 0");
    require(p.n_th >= 0.0, "n_th must be >= 0");
    require(p.eps_p >= 0.0, "eps_p must be >= 0");
    require(p.reference_rate_label == "gamma" ||
                p.reference_rate_label == "omega_m",
            "reference_rate_label must be gamma or omega_m");

    const auto& m = s.modulation;
    require(std::abs(m.epsilon) < 1.0, "epsilon must satisfy |epsilon| < 1");
    require(m.eta >= 0.0, "eta must be >= 0");
    if (s.variant == Variant::ModulatedPump) {
        // Omega is ignored for this variant; epsilon must stay unused.
        require(m.epsilon == 0.0,
                "epsilon must be 0 for a ModulatedPump scenario");
    } else {
        require(m.eta == 0.0,
                "eta must be 0 for a modulated-cavity scenario");
    }

    require(s.t_end > 0.0, "t_end must be > 0");
    require(s.sample_dt > 0.0, "sample_dt must be > 0");
    if (s.backend == Backend::Moments) {
        require(s.variant == Variant::ClassicalMirror,
                "Moments backend is only valid with variant ClassicalMirror");
    }
    if (s.backend == Backend::Ensemble) {
        require(s.n_traj >= 1, "n_traj must be >= 1 for the Ensemble backend");
        require(s.integrator.method == Method::EulerMaruyama,
                "Ensemble backend requires method EulerMaruyama");
    }

    const auto& i = s.integrator;
    require(i.h > 0.0, "h must be > 0");
    require(i.rel_tol > 0.0, "rel_tol must be > 0");
    require(i.abs_tol > 0.0, "abs_tol must be > 0");
    require(i.h_min <= i.h_max, "h_min must be <= h_max");

    require(std::isfinite(s.initial.a.real()) &&
                std::isfinite(s.initial.a.imag()) &&
                std::isfinite(s.initial.b.real()) &&
                std::isfinite(s.initial.b.imag()) &&
                std::isfinite(s.initial.q) && std::isfinite(s.initial.p),
            "initial state must be finite");
}

std::string to_string(Variant v) {
    switch (v) {
        case Variant::ClassicalMirror: return "ClassicalMirror";
        case Variant::QuantizedMirror: return "QuantizedMirror";
        case Variant::ModulatedPump: return "ModulatedPump";
    }
    return "?";
}

std::string to_string(Backend b) {
    switch (b) {
        case Backend::MeanField: return "MeanField";
        case Backend::Moments: return "Moments";
        case Backend::Ensemble: return "Ensemble";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::RK4Fixed: return "RK4Fixed";
        case Method::RK45Adaptive: return "RK45Adaptive";
        case Method::EulerMaruyama: return "EulerMaruyama";
    }
    return "?";
}

std::string to_string(InitialStyle s) {
    return s == InitialStyle::Coherent ? "coherent" : "fock";
}

std::string to_string(ChiMode c) {
    return c == ChiMode::Approx ? "approx" : "exact";
}

std::string to_string(OpticalNoise n) {
    return n == OpticalNoise::None ? "none" : "symmetric";
}

Variant variant_from_string(const std::string& s) {
    if (s == "ClassicalMirror") return Variant::ClassicalMirror;
    if (s == "QuantizedMirror") return Variant::QuantizedMirror;
    if (s == "ModulatedPump") return Variant::ModulatedPump;
    throw ScenarioError("unknown variant '" + s + "'");
}

Backend backend_from_string(const std::string& s) {
    if (s == "MeanField") return Backend::MeanField;
    if (s == "Moments") return Backend::Moments;
    if (s == "Ensemble") return Backend::Ensemble;
    throw ScenarioError("unknown backend '" + s + "'");
}

Method method_from_string(const std::string& s) {
    if (s == "RK4Fixed") return Method::RK4Fixed;
    if (s == "RK45Adaptive") return Method::RK45Adaptive;
    if (s == "EulerMaruyama") return Method::EulerMaruyama;
    throw ScenarioError("unknown method '" + s + "'");
}

InitialStyle initial_style_from_string(const std::string& s) {
    if (s == "coherent") return InitialStyle::Coherent;
    if (s == "fock") return InitialStyle::Fock;
    throw ScenarioError("unknown initial_style '" + s + "'");
}

ChiMode chi_mode_from_string(const std::string& s) {
    if (s == "approx") return ChiMode::Approx;
    if (s == "exact") return ChiMode::Exact;
    throw ScenarioError("unknown chi_mode '" + s + "'");
}

OpticalNoise optical_noise_from_string(const std::string& s) {
    if (s == "none") return OpticalNoise::None;
    if (s == "symmetric") return OpticalNoise::Symmetric;
    throw ScenarioError("unknown optical_noise '" + s + "'");
}

}  // namespace qwom
