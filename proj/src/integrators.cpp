#include "qwom/integrators.hpp"

#include <algorithm>
#include <cmath>

#include "qwom/error.hpp"

namespace qwom {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                 e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640,
                 e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

void check_finite(const Eigen::VectorXd& y, double t) {
    if (!y.allFinite()) throw IntegrationError("integration diverged", t);
}

Eigen::VectorXd hermite(double t0, const Eigen::VectorXd& y0,
                        const Eigen::VectorXd& f0, double t1,
                        const Eigen::VectorXd& y1, const Eigen::VectorXd& f1,
                        double ts) {
    const double h = t1 - t0;
    const double u = (ts - t0) / h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * h * f0 +
           (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * h * f1;
}

struct SampleEmitter {
    SampleEmitter(double t_end, double sample_dt, Eigen::Index dim)
        : dt(sample_dt) {
        n = static_cast<Eigen::Index>(
                std::floor(t_end / sample_dt * (1.0 + 1e-12))) + 1;
        path.t.resize(n);
        path.states.resize(dim, n);
    }

    void emit(const Eigen::VectorXd& y) {
        path.t[next] = static_cast<double>(next) * dt;
        path.states.col(next) = y;
        ++next;
    }

    // Samples falling inside an accepted step (t0, t1].
    void emit_interpolated(double t0, const Eigen::VectorXd& y0,
                           const Eigen::VectorXd& f0, double t1,
                           const Eigen::VectorXd& y1,
                           const Eigen::VectorXd& f1) {
        while (next < n) {
            const double ts = static_cast<double>(next) * dt;
            if (ts > t1 + 1e-9 * dt) break;
            if (ts >= t1 - 1e-9 * dt) {
                emit(y1);
            } else {
                const Eigen::VectorXd yi = hermite(t0, y0, f0, t1, y1, f1, ts);
                emit(yi);
            }
        }
    }

    bool done() const { return next >= n; }

    double dt;
    Eigen::Index n = 0;
    Eigen::Index next = 0;
    SampledPath path;
};

SampledPath integrate_rk45(const RhsFn& rhs, const Eigen::VectorXd& y0,
                           const IntegratorSettings& st, double t_end,
                           double sample_dt) {
    const Eigen::Index dim = y0.size();
    SampleEmitter out(t_end, sample_dt, dim);
    out.emit(y0);

    double t = 0.0;
    const double t_stop = (out.n - 1) * sample_dt;
    Eigen::VectorXd y = y0;
    Eigen::VectorXd k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim),
        k7(dim), ynew(dim), yerr(dim);
    rhs(t, y, k1);

    double h = std::clamp(st.h, st.h_min, st.h_max);
    std::size_t steps = 0;

    while (!out.done() && t < t_stop) {
        h = std::min(h, t_stop - t);

        rhs(t + c2 * h, y + h * (a21 * k1), k2);
        rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2), k3);
        rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3), k4);
        rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4),
            k5);
        rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 +
                            a65 * k5), k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        rhs(t + h, ynew, k7);  // FSAL
        yerr = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double err = 0.0;
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double scale =
                st.abs_tol +
                st.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double e = yerr[i] / scale;
            err += e * e;
        }
        err = std::sqrt(err / static_cast<double>(dim));

        if (err <= 1.0) {
            check_finite(ynew, t + h);
            out.emit_interpolated(t, y, k1, t + h, ynew, k7);
            t += h;
            y.swap(ynew);
            k1.swap(k7);
            ++steps;
            if (out.done()) break;
        }
        const double factor =
            std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        h = std::min(h * factor, st.h_max);
        if (err > 1.0 && h < st.h_min) {
            throw IntegrationError(
                "step size underflow (|y|=" + std::to_string(y.norm()) + ")",
                t);
        }
    }
    out.path.step_count = steps;
    return out.path;
}

SampledPath integrate_rk4(const RhsFn& rhs, const Eigen::VectorXd& y0,
                          const IntegratorSettings& st, double t_end,
                          double sample_dt) {
    const Eigen::Index dim = y0.size();
    SampleEmitter out(t_end, sample_dt, dim);
    out.emit(y0);

    double t = 0.0;
    const double t_stop = (out.n - 1) * sample_dt;
    Eigen::VectorXd y = y0, fl(dim), fr(dim);
    rhs(t, y, fl);
    std::size_t steps = 0;

    while (!out.done() && t < t_stop) {
        const double h = std::min(st.h, t_stop - t);
        Eigen::VectorXd ynew = rk4_step(rhs, t, y, h);
        rhs(t + h, ynew, fr);
        out.emit_interpolated(t, y, fl, t + h, ynew, fr);
        t += h;
        y.swap(ynew);
        fl.swap(fr);
        ++steps;
    }
    out.path.step_count = steps;
    return out.path;
}

SampledPath integrate_em(const RhsFn& rhs, const Eigen::VectorXd& y0,
                         const IntegratorSettings& st, double t_end,
                         double sample_dt,
                         const Eigen::VectorXd& noise_amplitudes,
                         std::mt19937_64* rng) {
    const Eigen::Index dim = y0.size();
    SampleEmitter out(t_end, sample_dt, dim);
    out.emit(y0);

    const bool noisy = noise_amplitudes.size() > 0 &&
                       noise_amplitudes.cwiseAbs().maxCoeff() > 0.0;
    if (noisy && rng == nullptr) {
        throw Error("euler_maruyama: nonzero noise amplitudes need an rng");
    }
    std::mt19937_64 dummy(0);
    std::mt19937_64& gen = rng ? *rng : dummy;

    // Snap the fixed step to an integer divisor of sample_dt.
    const long per_sample =
        std::max(1L, std::lround(sample_dt / std::min(st.h, sample_dt)));
    const double h = sample_dt / static_cast<double>(per_sample);

    Eigen::VectorXd y = y0;
    std::size_t steps = 0;
    for (Eigen::Index s = 1; s < out.n; ++s) {
        for (long j = 0; j < per_sample; ++j) {
            const double t =
                (static_cast<double>(s - 1) * per_sample + j) * h;
            y = euler_maruyama_step(rhs, noise_amplitudes, gen, t, y, h);
            ++steps;
        }
        out.emit(y);
    }
    out.path.step_count = steps;
    return out.path;
}

}  // namespace

Eigen::VectorXd rk4_step(const RhsFn& rhs, double t, const Eigen::VectorXd& y,
                         double h) {
    Eigen::VectorXd k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size());
    rhs(t, y, k1);
    rhs(t + 0.5 * h, y + 0.5 * h * k1, k2);
    rhs(t + 0.5 * h, y + 0.5 * h * k2, k3);
    rhs(t + h, y + h * k3, k4);
    Eigen::VectorXd ynew = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    check_finite(ynew, t + h);
    return ynew;
}

Eigen::VectorXd euler_maruyama_step(const RhsFn& rhs,
                                    const Eigen::VectorXd& noise_amplitudes,
                                    std::mt19937_64& rng, double t,
                                    const Eigen::VectorXd& y, double h) {
    Eigen::VectorXd dy(y.size());
    rhs(t, y, dy);
    Eigen::VectorXd ynew = y + h * dy;
    if (noise_amplitudes.size() > 0) {
        const double sqrt_h = std::sqrt(h);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (Eigen::Index i = 0; i < noise_amplitudes.size(); ++i) {
            if (noise_amplitudes[i] != 0.0) {
                ynew[i] += noise_amplitudes[i] * sqrt_h * normal(rng);
            }
        }
    }
    check_finite(ynew, t + h);
    return ynew;
}

SampledPath integrate(const RhsFn& rhs, const Eigen::VectorXd& y0,
                      const IntegratorSettings& settings, double t_end,
                      double sample_dt, const Eigen::VectorXd& noise_amplitudes,
                      std::mt19937_64* rng) {
    if (t_end < 0.0) throw Error("integrate: t_end must be >= 0");
    if (sample_dt <= 0.0) throw Error("integrate: sample_dt must be > 0");
    switch (settings.method) {
        case Method::RK45Adaptive:
            return integrate_rk45(rhs, y0, settings, t_end, sample_dt);
        case Method::RK4Fixed:
            return integrate_rk4(rhs, y0, settings, t_end, sample_dt);
        case Method::EulerMaruyama:
            return integrate_em(rhs, y0, settings, t_end, sample_dt,
                                noise_amplitudes, rng);
    }
    throw Error("integrate: unreachable method");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trajectory_rng(std::uint64_t root_seed,
                               std::size_t traj_index) {
    // Counter-based split: stream i is independent of evaluation order.
    const std::uint64_t counter =
        (static_cast<std::uint64_t>(traj_index) + 1) * 0x9E3779B97F4A7C15ULL;
    return std::mt19937_64(splitmix64(root_seed ^ counter));
}

}  // namespace qwom
