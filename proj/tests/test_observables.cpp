#include <doctest.h>

#include <cmath>
#include <functional>

#include "qwom/error.hpp"
#include "qwom/moments.hpp"
#include "qwom/observables.hpp"
#include "qwom/presets.hpp"
#include "qwom/simulate.hpp"

using namespace qwom;

namespace {

TimeSeries synthetic(double t_end, double dt,
                     const std::function<double(double)>& f) {
    const Eigen::Index n = static_cast<Eigen::Index>(t_end / dt) + 1;
    TimeSeries s;
    s.t = Eigen::ArrayXd::LinSpaced(n, 0.0, t_end);
    s.photon = s.t.unaryExpr([&](double t) { return f(t); });
    s.exciton = Eigen::ArrayXd::Zero(n);
    s.re_a = s.im_a = s.re_b = s.im_b = s.q = s.p = Eigen::ArrayXd::Zero(n);
    s.residual = Eigen::ArrayXd::Zero(n);
    return s;
}

}  // namespace

TEST_CASE("intensity basics") {
    CHECK(intensity({0.0, 0.0}) == 0.0);
    CHECK(intensity({1.0, 1.0}) == 2.0);
    CHECK(intensity({3.0, -4.0}) == 25.0);
}

TEST_CASE("intensity is phase invariant") {
    const Complex z(0.3, -1.7);
    // Exact quarter and half turns.
    CHECK(intensity(Complex(-z.imag(), z.real())) == intensity(z));
    CHECK(intensity(-z) == intensity(z));
    for (double theta : {0.1, 1.0, 2.5, 4.4}) {
        CHECK(intensity(std::polar(1.0, theta) * z) ==
              doctest::Approx(intensity(z)).epsilon(1e-14));
    }
}

TEST_CASE("envelope classification on analytic envelopes") {
    const auto damped = synthetic(10.0, 1e-3, [](double t) {
        return std::exp(-t) * std::sin(10.0 * t);
    });
    CHECK(envelope_summary(damped, "A", 2).trend == Trend::Damped);

    const auto flat = synthetic(10.0, 1e-3, [](double t) {
        return std::sin(10.0 * t);
    });
    CHECK(envelope_summary(flat, "A", 2).trend == Trend::Sustained);

    const auto growing = synthetic(10.0, 1e-3, [](double t) {
        return std::exp(0.2 * t) * std::sin(10.0 * t);
    });
    CHECK(envelope_summary(growing, "A", 2).trend == Trend::Amplified);
}

TEST_CASE("envelope classification is scale invariant") {
    const auto base = synthetic(10.0, 1e-3, [](double t) {
        return std::exp(-0.3 * t) * std::cos(7.0 * t);
    });
    auto scaled = base;
    scaled.photon = 5.3e4 * base.photon;
    const EnvelopeSummary e1 = envelope_summary(base, "A", 4);
    const EnvelopeSummary e2 = envelope_summary(scaled, "A", 4);
    CHECK(e1.trend == e2.trend);
    CHECK(e1.growth_ratio == doctest::Approx(e2.growth_ratio).epsilon(1e-12));
}

TEST_CASE("envelope rejects non-oscillating input") {
    const auto monotone = synthetic(10.0, 0.01, [](double t) {
        return std::exp(0.1 * t);
    });
    CHECK_THROWS_AS(envelope_summary(monotone, "A", 2), AnalysisError);
    const auto fine = synthetic(10.0, 0.01, [](double t) {
        return std::sin(8.0 * t);
    });
    CHECK_THROWS_AS(envelope_summary(fine, "A", 1), AnalysisError);
}

TEST_CASE("steady state estimator") {
    const auto constant = synthetic(10.0, 0.01, [](double) { return 2.5; });
    const SteadyStateEstimate c = steady_state_estimate(constant, "A");
    CHECK(c.value == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(c.deviation == 0.0);

    const auto wavy = synthetic(100.0, 0.01, [](double t) {
        return 1.0 + std::sin(3.0 * t);
    });
    const SteadyStateEstimate w = steady_state_estimate(wavy, "A");
    CHECK(w.value == doctest::Approx(1.0).epsilon(0.05));
    CHECK(w.deviation > 0.3);  // convergence flag: still oscillating
}

TEST_CASE("pure cavity steady photon number") {
    Scenario sc = preset("fig2a");
    sc.params.g0 = 0.0;
    sc.modulation.epsilon = 0.0;
    sc.t_end = 20.0;
    const TimeSeries series = run_mean_field(sc);
    const double expected =
        sc.params.eps_p * sc.params.eps_p /
        (sc.params.kappa * sc.params.kappa +
         sc.params.delta_c * sc.params.delta_c);
    CHECK(steady_state_estimate(series, "A").value ==
          doctest::Approx(expected).epsilon(1e-3));
    CHECK(expected == doctest::Approx(1.0224).epsilon(1e-4));
}

TEST_CASE("energy balance residual on an analytic free decay") {
    // eps_p = 0, epsilon = 0, g0 = 0: a and b decay independently, so the
    // balance identity holds exactly and the residual is pure
    // finite-difference error.
    Scenario sc;
    sc.variant = Variant::ClassicalMirror;
    sc.params.kappa = 1.5;
    sc.params.gamma = 1.0;
    sc.params.delta_c = 4.712;
    sc.params.delta_b = 2.0;

    const double dt = 1e-3;
    const Eigen::Index n = 2001;
    TimeSeries s;
    s.backend = "mean_field";
    s.estimator = "abs2_of_mean";
    s.t = Eigen::ArrayXd::LinSpaced(n, 0.0, dt * static_cast<double>(n - 1));
    s.re_a.resize(n);
    s.im_a.resize(n);
    s.re_b.resize(n);
    s.im_b.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = s.t[i];
        const Complex a =
            std::exp(Complex(-sc.params.kappa, -sc.params.delta_c) * t);
        const Complex b =
            std::exp(Complex(-sc.params.gamma, -sc.params.delta_b) * t);
        s.re_a[i] = a.real();
        s.im_a[i] = a.imag();
        s.re_b[i] = b.real();
        s.im_b[i] = b.imag();
    }
    s.photon = s.re_a.square() + s.im_a.square();
    s.exciton = s.re_b.square() + s.im_b.square();
    s.q = s.p = s.residual = Eigen::ArrayXd::Zero(n);

    const Eigen::ArrayXd r = energy_balance_residual(s, sc);
    CHECK(r.abs().maxCoeff() <= 1e-4);  // O(dt^2) x third derivative
}

TEST_CASE("energy balance residual flags a broken trajectory") {
    Scenario sc;
    sc.variant = Variant::ClassicalMirror;
    sc.params.kappa = 1.5;
    const auto constant = synthetic(1.0, 0.01, [](double) { return 1.0; });
    const Eigen::ArrayXd r = energy_balance_residual(constant, sc);
    // d/dt = 0 but 2 kappa A != 0: residual = 2 kappa A / (A + B + 1).
    CHECK(r[5] == doctest::Approx(2.0 * 1.5 / 2.0).epsilon(1e-12));
}

TEST_CASE("energy balance residual needs three samples") {
    Scenario sc;
    sc.variant = Variant::ClassicalMirror;
    auto tiny = synthetic(0.01, 0.01, [](double) { return 1.0; });
    CHECK_THROWS_AS(energy_balance_residual(tiny, sc), AnalysisError);
}

TEST_CASE("integrated fig2a satisfies the energy balance") {
    Scenario sc = preset("fig2a");
    sc.t_end = 10.0;
    sc.sample_dt = 5e-4;
    const TimeSeries series = run_mean_field(sc);
    CHECK(series.residual.abs().maxCoeff() <= 1e-5);
}

TEST_CASE("moments series satisfies the second-moment energy balance") {
    Scenario sc = preset("fig2a");
    sc.backend = Backend::Moments;
    sc.initial_style = InitialStyle::Fock;
    sc.t_end = 10.0;
    sc.sample_dt = 5e-4;
    const TimeSeries series = propagate_moments(sc);
    CHECK(series.residual.abs().maxCoeff() <= 1e-5);
}
