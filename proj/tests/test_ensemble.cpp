#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qwom/ensemble.hpp"
#include "qwom/presets.hpp"
#include "qwom/simulate.hpp"

using namespace qwom;

namespace {

Scenario ensemble_scenario(const std::string& preset_name, double t_end,
                           std::size_t n_traj, std::uint64_t seed = 11) {
    Scenario sc = preset(preset_name);
    sc.backend = Backend::Ensemble;
    sc.integrator.method = Method::EulerMaruyama;
    sc.integrator.h = 1e-3;
    sc.t_end = t_end;
    sc.sample_dt = 0.01;
    sc.n_traj = n_traj;
    sc.seed = seed;
    return sc;
}

bool series_equal(const TimeSeries& x, const TimeSeries& y) {
    return (x.t == y.t).all() && (x.re_a == y.re_a).all() &&
           (x.im_a == y.im_a).all() && (x.re_b == y.re_b).all() &&
           (x.im_b == y.im_b).all() && (x.q == y.q).all() &&
           (x.p == y.p).all() && (x.photon == y.photon).all() &&
           (x.exciton == y.exciton).all();
}

}  // namespace

TEST_CASE("single-trajectory ensemble collapses to that trajectory") {
    const Scenario sc = ensemble_scenario("fig6a", 2.0, 1);
    const EnsembleResult res = run_ensemble(sc);
    const TimeSeries traj = run_trajectory(sc, 0);
    CHECK(series_equal(res.mean_series, traj));
    CHECK(res.stderr_series.q.maxCoeff() == 0.0);
    CHECK(res.stderr_series.photon.maxCoeff() == 0.0);
    CHECK(res.n_traj == 1);
}

TEST_CASE("a trajectory is deterministic in (scenario, index)") {
    const Scenario sc = ensemble_scenario("fig6a", 2.0, 4);
    const TimeSeries t1 = run_trajectory(sc, 2);
    const TimeSeries t2 = run_trajectory(sc, 2);
    CHECK(series_equal(t1, t2));
}

TEST_CASE("different trajectory indices draw different noise") {
    const Scenario sc = ensemble_scenario("fig6a", 2.0, 4);
    const TimeSeries t0 = run_trajectory(sc, 0);
    const TimeSeries t1 = run_trajectory(sc, 1);
    CHECK((t0.q - t1.q).abs().maxCoeff() > 0.0);
}

TEST_CASE("zero thermal noise reproduces the deterministic path exactly") {
    Scenario sc = ensemble_scenario("fig6a", 2.0, 8);
    sc.params.gamma_m = 0.0;  // gamma_m (2 n_th + 1) = 0
    const EnsembleResult res = run_ensemble(sc);
    Scenario det = sc;
    det.backend = Backend::MeanField;
    const TimeSeries mf = run_deterministic(det);
    CHECK((res.mean_series.q - mf.q).abs().maxCoeff() == 0.0);
    CHECK((res.mean_series.re_a - mf.re_a).abs().maxCoeff() == 0.0);
    CHECK(res.stderr_series.q.maxCoeff() == 0.0);
}

TEST_CASE("linear model: ensemble mean of the optical modes is noise-free") {
    // Thermal noise only enters p, which the classical-mirror variant never
    // reads back: the optical channels agree with the deterministic Euler
    // path bitwise and the momentum channel is a CLT check.
    Scenario sc = ensemble_scenario("fig2a", 2.0, 200);
    const EnsembleResult res = run_ensemble(sc);
    Scenario det = sc;
    det.backend = Backend::MeanField;
    const TimeSeries mf = run_deterministic(det);

    CHECK((res.mean_series.re_a - mf.re_a).abs().maxCoeff() == 0.0);
    CHECK((res.mean_series.im_a - mf.im_a).abs().maxCoeff() == 0.0);
    CHECK((res.mean_series.re_b - mf.re_b).abs().maxCoeff() == 0.0);
    CHECK((res.mean_series.im_b - mf.im_b).abs().maxCoeff() == 0.0);

    Eigen::Index within = 0;
    for (Eigen::Index i = 1; i < res.mean_series.size(); ++i) {
        if (std::abs(res.mean_series.p[i]) <=
            3.0 * res.stderr_series.p[i]) {
            ++within;
        }
    }
    CHECK(static_cast<double>(within) >=
          0.97 * static_cast<double>(res.mean_series.size() - 1));
}

TEST_CASE("standard error shrinks like one over sqrt(n)") {
    const Scenario small = ensemble_scenario("fig6a", 2.0, 128);
    const Scenario big = ensemble_scenario("fig6a", 2.0, 256);
    const EnsembleResult r1 = run_ensemble(small);
    const EnsembleResult r2 = run_ensemble(big);
    std::vector<double> ratios;
    for (Eigen::Index i = 1; i < r1.mean_series.size(); ++i) {
        if (r1.stderr_series.q[i] > 0.0) {
            ratios.push_back(r2.stderr_series.q[i] / r1.stderr_series.q[i]);
        }
    }
    REQUIRE(!ratios.empty());
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2,
                     ratios.end());
    const double median = ratios[ratios.size() / 2];
    const double expected = 1.0 / std::sqrt(2.0);
    CHECK(median > 0.8 * expected);
    CHECK(median < 1.2 * expected);
}

TEST_CASE("worker count never changes the result") {
    const Scenario sc = ensemble_scenario("fig6a", 1.0, 33);
    const EnsembleResult w1 = run_ensemble(sc, 1);
    const EnsembleResult w4 = run_ensemble(sc, 4);
    const EnsembleResult w8 = run_ensemble(sc, 8);
    CHECK(series_equal(w1.mean_series, w4.mean_series));
    CHECK(series_equal(w1.mean_series, w8.mean_series));
    CHECK((w1.stderr_series.q == w4.stderr_series.q).all());
    CHECK((w1.stderr_series.q == w8.stderr_series.q).all());
}

TEST_CASE("decoupled mirror: the mean position is pure noise") {
    Scenario sc = ensemble_scenario("fig6a", 20.0, 256, 5);
    sc.params.gm = 0.0;  // light no longer pushes the mirror
    const EnsembleResult res = run_ensemble(sc, 4);
    const Eigen::Index n = res.mean_series.size();
    for (Eigen::Index i = 4 * n / 5; i < n; ++i) {
        CHECK(std::abs(res.mean_series.q[i]) <=
              4.0 * res.stderr_series.q[i]);
    }
}
