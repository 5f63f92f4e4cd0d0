#include "qwom/models.hpp"

#include <cmath>

#include "qwom/error.hpp"

namespace qwom {

Derivative rhs_model1(double t, const MeanFieldState& s, const Scenario& sc) {
    const auto& p = sc.params;
    const auto& m = sc.modulation;
    const double x = chi(t, p, m, sc.chi_mode);
    const double phase_mod = p.omega_c * m.epsilon * std::sin(m.Omega * t);

    Derivative d;
    d.da = -kI * p.delta_c * s.a - kI * phase_mod * s.a - kI * p.g0 * s.b +
           2.0 * x * std::conj(s.a) + p.eps_p - p.kappa * s.a;
    d.db = -kI * p.delta_b * s.b - kI * p.g0 * s.a - p.gamma * s.b;
    d.dq = 0.0;
    d.dp = 0.0;
    return d;
}

Derivative rhs_model2(double t, const MeanFieldState& s, const Scenario& sc) {
    const auto& p = sc.params;
    const auto& m = sc.modulation;
    const double x = chi(t, p, m, sc.chi_mode);
    const double gm_t = coupling_gm(t, p, m);
    const double g_t = coupling_g(t, p, m);

    Derivative d;
    d.db = -kI * p.delta_b * s.b - kI * p.g0 * s.a - kI * g_t * s.a * s.q -
           p.gamma * s.b;
    d.da = -kI * p.delta_c * s.a - kI * gm_t * s.a * s.q - kI * p.g0 * s.b -
           kI * g_t * s.b * s.q + 2.0 * x * std::conj(s.a) * s.q + p.eps_p -
           p.kappa * s.a;
    d.dq = p.omega_m * s.p;

    // The radiation-pressure force, evaluated in complex arithmetic. Every
    // term is Hermitian (z + conj(z) and -i(conj(w) - w) are exactly real),
    // so a surviving imaginary part signals an implementation error.
    const Complex ab = std::conj(s.a) * s.b;
    const Complex a2 = s.a * s.a;
    const Complex dp_c = -p.omega_m * s.q - gm_t * std::norm(s.a) -
                         g_t * (ab + std::conj(ab)) -
                         kI * x * (std::conj(a2) - a2) - p.gamma_m * s.p;
    if (std::abs(dp_c.imag()) > 1e-12 * std::abs(dp_c)) {
        throw Error("rhs_model2: non-real dp (Im=" +
                    std::to_string(dp_c.imag()) + ")");
    }
    d.dp = dp_c.real();
    return d;
}

Derivative rhs_model3(double t, const MeanFieldState& s, const Scenario& sc) {
    const auto& p = sc.params;
    const auto& m = sc.modulation;

    Derivative d;
    d.db = -kI * p.delta_b * s.b - kI * p.g0 * s.a - p.gamma * s.b;
    d.da = -kI * p.delta_c * s.a - kI * p.gm * s.a * s.q - kI * p.g0 * s.b +
           pump_amplitude(t, p, m, Variant::ModulatedPump) - p.kappa * s.a;
    d.dq = p.omega_m * s.p;
    d.dp = -p.omega_m * s.q - p.gm * std::norm(s.a) - p.gamma_m * s.p;
    return d;
}

Derivative rhs(double t, const MeanFieldState& s, const Scenario& sc) {
    switch (sc.variant) {
        case Variant::ClassicalMirror: return rhs_model1(t, s, sc);
        case Variant::QuantizedMirror: return rhs_model2(t, s, sc);
        case Variant::ModulatedPump: return rhs_model3(t, s, sc);
    }
    throw Error("rhs: unreachable variant");
}

LinearSystem linear_system_model1(double t, const Scenario& sc) {
    const auto& p = sc.params;
    const auto& m = sc.modulation;
    const double x = chi(t, p, m, sc.chi_mode);
    const double phase_mod = p.omega_c * m.epsilon * std::sin(m.Omega * t);

    LinearSystem sys;
    auto& A = sys.drift;
    A(0, 0) = -(kI * (p.delta_c + phase_mod) + p.kappa);
    A(0, 1) = -kI * p.g0;
    A(0, 2) = 2.0 * x;
    A(1, 0) = -kI * p.g0;
    A(1, 1) = -(kI * p.delta_b + p.gamma);
    // Daggered rows: conjugates under the swap (a <-> a', b <-> b').
    A(2, 2) = std::conj(A(0, 0));
    A(2, 3) = std::conj(A(0, 1));
    A(2, 0) = std::conj(A(0, 2));
    A(3, 2) = std::conj(A(1, 0));
    A(3, 3) = std::conj(A(1, 1));

    sys.drive << p.eps_p, 0.0, p.eps_p, 0.0;

    sys.diffusion(0, 2) = 2.0 * p.kappa;  // <a_in a_in'>
    sys.diffusion(1, 3) = 2.0 * p.gamma;  // <b_in b_in'>
    return sys;
}

Eigen::VectorXd pack(const MeanFieldState& s) {
    Eigen::VectorXd y(kMeanFieldDim);
    y << s.a.real(), s.a.imag(), s.b.real(), s.b.imag(), s.q, s.p;
    return y;
}

MeanFieldState unpack(const Eigen::VectorXd& y) {
    MeanFieldState s;
    s.a = Complex(y[0], y[1]);
    s.b = Complex(y[2], y[3]);
    s.q = y[4];
    s.p = y[5];
    return s;
}

PackedRhs make_mean_field_rhs(const Scenario& sc) {
    return [sc](double t, const Eigen::VectorXd& y, Eigen::VectorXd& dy) {
        const Derivative d = rhs(t, unpack(y), sc);
        dy[0] = d.da.real();
        dy[1] = d.da.imag();
        dy[2] = d.db.real();
        dy[3] = d.db.imag();
        dy[4] = d.dq;
        dy[5] = d.dp;
    };
}

}  // namespace qwom
