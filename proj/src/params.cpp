#include "qwom/params.hpp"

#include <cmath>

namespace qwom {

double cavity_frequency(double t, const ModelParams& p, const Modulation& m) {
    return p.omega_c * (1.0 + m.epsilon * std::sin(m.Omega * t));
}

double chi_exact(double t, const ModelParams&, const Modulation& m) {
    // (1/4 w(t)) dw/dt with w(t) = w_c (1 + eps sin); w_c cancels.
    const double denom = 1.0 + m.epsilon * std::sin(m.Omega * t);
    return m.epsilon * m.Omega * std::cos(m.Omega * t) / (4.0 * denom);
}

double chi0(const Modulation& m) { return m.epsilon * m.Omega / 8.0; }

double chi_approx(double t, const ModelParams&, const Modulation& m) {
    return 2.0 * chi0(m) * std::cos(m.Omega * t);
}

double chi(double t, const ModelParams& p, const Modulation& m, ChiMode mode) {
    return mode == ChiMode::Exact ? chi_exact(t, p, m) : chi_approx(t, p, m);
}

double coupling_gm(double t, const ModelParams& p, const Modulation& m) {
    return p.omega_c * m.epsilon * std::sin(m.Omega * t);
}

double coupling_g(double t, const ModelParams& p, const Modulation& m) {
    return p.g0 * m.epsilon * std::sin(m.Omega * t) / 2.0;
}

double pump_amplitude(double t, const ModelParams& p, const Modulation& m,
                      Variant variant) {
    if (variant == Variant::ModulatedPump) {
        return p.eps_p * (1.0 + m.eta * std::cos(m.lambda * t));
    }
    return p.eps_p;
}

}  // namespace qwom
