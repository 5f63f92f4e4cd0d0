#include <doctest.h>

#include <cmath>
#include <vector>

#include "qwom/error.hpp"
#include "qwom/moments.hpp"
#include "qwom/presets.hpp"
#include "qwom/simulate.hpp"
#include "support/fock_oracle.hpp"

using namespace qwom;

namespace {

Scenario parametric_scenario(double kappa, double epsilon) {
    Scenario sc;
    sc.variant = Variant::ClassicalMirror;
    sc.backend = Backend::Moments;
    sc.initial_style = InitialStyle::Fock;
    sc.initial = MeanFieldState{};  // vacuum
    sc.params.delta_c = 1.0;
    sc.params.omega_c = 1.0;
    sc.params.kappa = kappa;
    sc.params.gamma = 1.0;
    sc.modulation.epsilon = epsilon;
    sc.modulation.Omega = 2.0;  // two-photon resonance with delta_c
    return sc;
}

}  // namespace

TEST_CASE("nothing drives the vacuum") {
    Scenario sc = preset("fig2a");
    sc.backend = Backend::Moments;
    sc.initial_style = InitialStyle::Fock;
    sc.initial = MeanFieldState{};
    sc.params.eps_p = 0.0;
    sc.modulation.epsilon = 0.0;
    sc.t_end = 5.0;
    const TimeSeries series = propagate_moments(sc);
    CHECK(series.photon.maxCoeff() <= 1e-14);
    CHECK(series.exciton.maxCoeff() <= 1e-14);
}

TEST_CASE("parametric photon growth against the hand-derived two-mode oracle") {
    // With g0 = 0 and eps_p = 0 the moment system closes on
    // n = <a'a> and m = <a^2>:
    //   dn/dt = -2 kappa n + 4 chi(t) Re m
    //   dm/dt = 2 A11(t) m + 4 chi(t) n + 2 chi(t)
    Scenario sc = parametric_scenario(0.01, 0.2);
    sc.t_end = 30.0;
    sc.sample_dt = 0.05;

    const auto chi_t = [&](double t) {
        return chi_approx(t, sc.params, sc.modulation);
    };
    const auto a11 = [&](double t) {
        const double pm = sc.params.omega_c * sc.modulation.epsilon *
                          std::sin(sc.modulation.Omega * t);
        return Complex(-sc.params.kappa, -(sc.params.delta_c + pm));
    };

    // Independent fixed-step RK4 on the (n, m) pair.
    const double h = 1e-4;
    double n = 0.0;
    Complex m = 0.0;
    std::vector<double> oracle(1, 0.0);
    const long per_sample = std::lround(sc.sample_dt / h);
    const long n_steps = std::lround(sc.t_end / h);
    const auto f = [&](double t, double ni, Complex mi) {
        const double x = chi_t(t);
        return std::pair<double, Complex>(
            -2.0 * sc.params.kappa * ni + 4.0 * x * mi.real(),
            2.0 * a11(t) * mi + 4.0 * x * ni + 2.0 * x);
    };
    for (long s = 0; s < n_steps; ++s) {
        const double t = s * h;
        const auto [k1n, k1m] = f(t, n, m);
        const auto [k2n, k2m] = f(t + h / 2, n + h / 2 * k1n, m + h / 2 * k1m);
        const auto [k3n, k3m] = f(t + h / 2, n + h / 2 * k2n, m + h / 2 * k2m);
        const auto [k4n, k4m] = f(t + h, n + h * k3n, m + h * k3m);
        n += h / 6 * (k1n + 2 * k2n + 2 * k3n + k4n);
        m += h / 6 * (k1m + 2.0 * k2m + 2.0 * k3m + k4m);
        if ((s + 1) % per_sample == 0) oracle.push_back(n);
    }

    const TimeSeries series = propagate_moments(sc);
    REQUIRE(series.size() == static_cast<Eigen::Index>(oracle.size()));
    for (Eigen::Index i = 0; i < series.size(); ++i) {
        CHECK(series.photon[i] ==
              doctest::Approx(oracle[static_cast<std::size_t>(i)])
                  .epsilon(1e-6));
    }

    // Above threshold (2 chi0 > kappa) the photon number keeps growing once
    // the transient is over: strictly increasing on a coarse grid.
    const Eigen::Index stride = 40;  // every 2 time units
    for (Eigen::Index i = 100; i + stride < series.size(); i += stride) {
        CHECK(series.photon[i + stride] > series.photon[i]);
    }
}

TEST_CASE("coherent drive alone keeps the state coherent") {
    Scenario sc = preset("fig2a");
    sc.params.g0 = 0.0;
    sc.modulation.epsilon = 0.0;
    sc.t_end = 5.0;
    sc.backend = Backend::Moments;
    const TimeSeries mom = propagate_moments(sc);
    sc.backend = Backend::MeanField;
    const TimeSeries mf = run_mean_field(sc);
    REQUIRE(mom.size() == mf.size());
    for (Eigen::Index i = 0; i < mom.size(); ++i) {
        CHECK(std::abs(mom.photon[i] - mf.photon[i]) <= 1e-9);
        CHECK(std::abs(mom.exciton[i] - mf.exciton[i]) <= 1e-9);
    }
}

TEST_CASE("photon number extraction policy") {
    MomentState ms;
    CHECK(photon_number(ms) == 0.0);

    const Complex alpha(0.6, -0.8);
    Scenario sc;
    sc.initial.a = alpha;
    const MomentState coherent = initial_moments(sc);
    CHECK(photon_number(coherent) == doctest::Approx(1.0).epsilon(1e-14));

    ms.sigma(2, 0) = -1e-9;
    CHECK(photon_number(ms) == 0.0);
    ms.sigma(2, 0) = -1e-7;
    CHECK_THROWS_AS(photon_number(ms), PhysicalityError);
}

TEST_CASE("decoupled exciton decay") {
    Scenario sc = preset("fig2a");
    sc.params.g0 = 0.0;
    sc.params.eps_p = 0.0;
    sc.modulation.epsilon = 0.0;
    sc.initial_style = InitialStyle::Fock;
    sc.t_end = 1.0;
    const TimeSeries series = propagate_moments(sc);
    CHECK(series.exciton[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(series.exciton[series.size() - 1] - std::exp(-2.0)) <=
          1e-9);
}

TEST_CASE("first moments track the mean field") {
    Scenario sc = preset("fig2a");
    sc.t_end = 20.0;
    const MomentTrajectory traj = propagate(sc);
    const TimeSeries mf = run_mean_field(sc);
    REQUIRE(static_cast<Eigen::Index>(traj.t.size()) == mf.size());
    const double tol = 10.0 * sc.integrator.rel_tol;
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        const Complex a_m = traj.states[i].mu[0];
        const Complex a_f(mf.re_a[static_cast<Eigen::Index>(i)],
                          mf.im_a[static_cast<Eigen::Index>(i)]);
        CHECK(std::abs(a_m - a_f) <= tol * (1.0 + std::abs(a_f)));
    }
}

TEST_CASE("moment-state invariants along fig2a") {
    Scenario sc = preset("fig2a");
    sc.t_end = 10.0;
    sc.sample_dt = 0.05;
    const MomentTrajectory traj = propagate(sc);
    for (const MomentState& ms : traj.states) {
        CHECK(std::abs(ms.mu[2] - std::conj(ms.mu[0])) <= 1e-10);
        CHECK(std::abs(ms.mu[3] - std::conj(ms.mu[1])) <= 1e-10);
        CHECK(std::abs(ms.sigma(2, 0).imag()) <= 1e-10);
        const double n_a = photon_number(ms);
        const double n_b = exciton_number(ms);
        // Gaussian-state Cauchy-Schwarz bounds.
        CHECK(std::norm(ms.sigma(0, 0)) <= n_a * (n_a + 1.0) + 1e-8);
        CHECK(n_a * n_b >= std::norm(ms.sigma(2, 1)) - 1e-8);
    }
}

TEST_CASE("no spontaneous correlations without the two-photon term") {
    Scenario sc = preset("fig2a");
    sc.modulation.epsilon = 0.0;
    sc.t_end = 5.0;
    const MomentTrajectory traj = propagate(sc);
    for (const MomentState& ms : traj.states) {
        const Matrix4c outer = ms.mu * ms.mu.transpose();
        CHECK((ms.sigma - outer).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("moments backend rejects nonlinear variants") {
    Scenario sc = preset("fig4a");
    sc.backend = Backend::Moments;
    CHECK_THROWS_AS(propagate_moments(sc), ScenarioError);
}

TEST_CASE("small fock-space cross check of the moment derivation") {
    // Desk-scale version of the brute-force oracle: weak drive, short time.
    Scenario sc = preset("fig2a");
    sc.params.eps_p = 0.2;
    sc.initial_style = InitialStyle::Fock;
    sc.initial.a = {0.0, 0.0};
    sc.initial.b = {1.0, 0.0};
    sc.t_end = 1.0;
    sc.sample_dt = 0.1;

    const testing::FockOracle oracle(sc, 7, 4);
    const auto fock = oracle.evolve(oracle.fock_initial(1), sc.t_end, 5e-4,
                                    sc.sample_dt);
    const TimeSeries mom = propagate_moments(sc);
    REQUIRE(static_cast<Eigen::Index>(fock.t.size()) == mom.size());
    for (std::size_t i = 0; i < fock.t.size(); ++i) {
        CHECK(std::abs(mom.photon[static_cast<Eigen::Index>(i)] -
                       fock.photon[i]) <= 1e-6);
        CHECK(std::abs(mom.exciton[static_cast<Eigen::Index>(i)] -
                       fock.exciton[i]) <= 1e-6);
    }
}
