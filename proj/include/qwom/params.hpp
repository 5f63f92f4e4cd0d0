#pragma once

#include <string>

namespace qwom {

/// Dynamical system variant.
enum class Variant {
    ClassicalMirror,   // modulated cavity frequency, mirror motion classical
    QuantizedMirror,   // modulated cavity frequency, quantized mirror
    ModulatedPump,     // constant cavity frequency, amplitude-modulated pump
};

/// All rates and frequencies of one scenario, stored as dimensionless
/// multiples of the reference rate (gamma for the modulated-cavity variants,
/// omega_m for the modulated-pump variant). The reference rate itself is 1.
/// Detunings are stored independently of the bare frequencies; the dynamics
/// only ever read the detunings plus omega_c and omega_m.
struct ModelParams {
    double omega_b = 0.0;   // exciton frequency
    double omega_c = 0.0;   // unperturbed cavity frequency
    double omega_m = 0.0;   // mechanical frequency
    double omega_p = 0.0;   // pump frequency (enters only via the detunings)
    double delta_b = 0.0;   // exciton-pump detuning
    double delta_c = 0.0;   // cavity-pump detuning
    double g0 = 0.0;        // exciton-photon coupling
    double gm = 0.0;        // static optomechanical coupling (ModulatedPump)
    double kappa = 0.0;     // cavity decay rate
    double gamma = 0.0;     // exciton decay rate
    double gamma_m = 0.0;   // mechanical damping rate
    double n_th = 0.0;      // mean thermal phonon number of the mirror bath
    double eps_p = 0.0;     // pump amplitude
    std::string reference_rate_label = "gamma";  // "gamma" or "omega_m"
};

/// Time-modulation parameters. epsilon/Omega modulate the cavity frequency
/// (ClassicalMirror, QuantizedMirror); eta/lambda modulate the pump amplitude
/// (ModulatedPump). The scenario validator rejects mixed use.
struct Modulation {
    double epsilon = 0.0;  // cavity-frequency modulation amplitude, |epsilon| < 1
    double Omega = 0.0;    // cavity-frequency modulation frequency
    double eta = 0.0;      // pump modulation amplitude, eta >= 0
    double lambda = 0.0;   // pump modulation frequency
};

/// Which form of the two-photon coefficient chi(t) the engine uses.
enum class ChiMode { Approx, Exact };

/// omega_c(t) = omega_c (1 + epsilon sin(Omega t))
double cavity_frequency(double t, const ModelParams& p, const Modulation& m);

/// chi(t) = (1 / 4 omega_c(t)) d omega_c(t)/dt
///        = epsilon Omega cos(Omega t) / (4 (1 + epsilon sin(Omega t)))
double chi_exact(double t, const ModelParams& p, const Modulation& m);

/// Small-amplitude form chi(t) = 2 chi0 cos(Omega t), chi0 = epsilon Omega / 8.
double chi_approx(double t, const ModelParams& p, const Modulation& m);

/// chi0 = epsilon Omega / 8
double chi0(const Modulation& m);

/// Dispatch on ChiMode.
double chi(double t, const ModelParams& p, const Modulation& m, ChiMode mode);

/// g_m(t) = omega_c epsilon sin(Omega t)
double coupling_gm(double t, const ModelParams& p, const Modulation& m);

/// g(t) = g0 epsilon sin(Omega t) / 2
double coupling_g(double t, const ModelParams& p, const Modulation& m);

/// eps_p(1 + eta cos(lambda t)) for ModulatedPump; constant eps_p otherwise.
double pump_amplitude(double t, const ModelParams& p, const Modulation& m,
                      Variant variant);

}  // namespace qwom
