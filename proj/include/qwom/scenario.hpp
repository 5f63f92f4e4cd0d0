#pragma once

#include <cstdint>
#include <string>

#include "qwom/integrator_settings.hpp"
#include "qwom/params.hpp"
#include "qwom/types.hpp"

namespace qwom {

enum class Backend { MeanField, Moments, Ensemble };

/// Initial condition style for the excited exciton: a coherent amplitude
/// <b> = 1 or a Fock-like occupation <b'b> = 1 with <b> = 0 (moments backend).
enum class InitialStyle { Coherent, Fock };

/// Optional symmetric-ordering optical noise for the stochastic stepper.
enum class OpticalNoise { None, Symmetric };

/// One executable unit: model variant, parameters, initial conditions,
/// backend and integrator settings. Immutable after validation.
struct Scenario {
    Variant variant = Variant::ClassicalMirror;
    ModelParams params;
    Modulation modulation;
    MeanFieldState initial;
    Backend backend = Backend::MeanField;
    double t_end = 50.0;
    double sample_dt = 0.01;
    IntegratorSettings integrator;
    std::uint64_t seed = 1;
    std::size_t n_traj = 1024;
    InitialStyle initial_style = InitialStyle::Coherent;
    ChiMode chi_mode = ChiMode::Approx;
    OpticalNoise optical_noise = OpticalNoise::None;
    std::string name = "scenario";
};

/// Throws ScenarioError naming the offending key and constraint.
void validate(const Scenario& s);

std::string to_string(Variant v);
std::string to_string(Backend b);
std::string to_string(Method m);
std::string to_string(InitialStyle s);
std::string to_string(ChiMode c);
std::string to_string(OpticalNoise n);

Variant variant_from_string(const std::string& s);
Backend backend_from_string(const std::string& s);
Method method_from_string(const std::string& s);
InitialStyle initial_style_from_string(const std::string& s);
ChiMode chi_mode_from_string(const std::string& s);
OpticalNoise optical_noise_from_string(const std::string& s);

}  // namespace qwom
