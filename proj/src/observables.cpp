#include "qwom/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qwom/error.hpp"

namespace qwom {

std::string to_string(Trend t) {
    switch (t) {
        case Trend::Damped: return "Damped";
        case Trend::Sustained: return "Sustained";
        case Trend::Amplified: return "Amplified";
    }
    return "?";
}

const Eigen::ArrayXd& TimeSeries::channel(const std::string& name) const {
    if (name == "t") return t;
    if (name == "re_a") return re_a;
    if (name == "im_a") return im_a;
    if (name == "re_b") return re_b;
    if (name == "im_b") return im_b;
    if (name == "q") return q;
    if (name == "p") return p;
    if (name == "A") return photon;
    if (name == "B") return exciton;
    if (name == "residual") return residual;
    throw AnalysisError("unknown channel '" + name + "'");
}

namespace {

struct Extremum {
    double t;
    double value;
};

// Local extrema by sign change of the centered differences, then removal of
// adjacent pairs closer than the prominence threshold (roundoff wiggles).
std::vector<Extremum> find_extrema(const Eigen::ArrayXd& t,
                                   const Eigen::ArrayXd& x,
                                   double prominence) {
    std::vector<Extremum> ext;
    for (Eigen::Index i = 1; i + 1 < x.size(); ++i) {
        const double left = x[i] - x[i - 1];
        const double right = x[i + 1] - x[i];
        if ((left > 0.0 && right <= 0.0) || (left < 0.0 && right >= 0.0)) {
            ext.push_back({t[i], x[i]});
        }
    }
    bool changed = true;
    while (changed && ext.size() >= 2) {
        changed = false;
        for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
            if (std::abs(ext[i + 1].value - ext[i].value) < prominence) {
                ext.erase(ext.begin() + static_cast<std::ptrdiff_t>(i),
                          ext.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    return ext;
}

}  // namespace

EnvelopeSummary envelope_summary(const Eigen::ArrayXd& t,
                                 const Eigen::ArrayXd& x, int window_count,
                                 const EnvelopeOptions& opts) {
    if (window_count < 2) {
        throw AnalysisError("envelope_summary needs at least 2 windows");
    }
    if (t.size() < 3 || t.size() != x.size()) {
        throw AnalysisError("envelope_summary needs at least 3 samples");
    }

    const double range = x.maxCoeff() - x.minCoeff();
    const double prominence = opts.prominence_fraction * range;
    const std::vector<Extremum> ext = find_extrema(t, x, prominence);

    EnvelopeSummary out;
    out.amplified_above = opts.amplified_above;
    out.damped_below = opts.damped_below;

    const double t0 = t[0], t1 = t[t.size() - 1];
    const double width = (t1 - t0) / window_count;
    out.window_edges.resize(static_cast<std::size_t>(window_count) + 1);
    for (int w = 0; w <= window_count; ++w) {
        out.window_edges[static_cast<std::size_t>(w)] = t0 + w * width;
    }

    std::vector<std::vector<double>> values(
        static_cast<std::size_t>(window_count));
    for (const auto& e : ext) {
        int w = static_cast<int>((e.t - t0) / width);
        w = std::clamp(w, 0, window_count - 1);
        values[static_cast<std::size_t>(w)].push_back(e.value);
    }
    for (int w = 0; w < window_count; ++w) {
        const auto& v = values[static_cast<std::size_t>(w)];
        if (v.size() < 3) {
            throw AnalysisError("insufficient oscillation: window " +
                                std::to_string(w) + " has " +
                                std::to_string(v.size()) +
                                " extrema, need 3");
        }
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        out.amplitude.push_back(*hi - *lo);
    }

    const double first = out.amplitude.front();
    const double last = out.amplitude.back();
    out.growth_ratio = first > 0.0
                           ? last / first
                           : (last > 0.0 ? std::numeric_limits<double>::infinity()
                                         : 1.0);
    if (out.growth_ratio > opts.amplified_above) {
        out.trend = Trend::Amplified;
    } else if (out.growth_ratio < opts.damped_below) {
        out.trend = Trend::Damped;
    } else {
        out.trend = Trend::Sustained;
    }
    return out;
}

EnvelopeSummary envelope_summary(const TimeSeries& series,
                                 const std::string& channel, int window_count,
                                 const EnvelopeOptions& opts) {
    return envelope_summary(series.t, series.channel(channel), window_count,
                            opts);
}

SteadyStateEstimate steady_state_estimate(const TimeSeries& series,
                                          const std::string& channel) {
    const Eigen::ArrayXd& x = series.channel(channel);
    const Eigen::Index n = x.size();
    if (n < 1) throw AnalysisError("steady_state_estimate on empty series");
    const Eigen::Index count = std::max<Eigen::Index>(1, n / 5);
    const Eigen::ArrayXd tail = x.tail(count);
    SteadyStateEstimate est;
    est.value = tail.mean();
    est.deviation = std::sqrt((tail - est.value).square().mean());
    return est;
}

Eigen::ArrayXd energy_balance_residual(const TimeSeries& series,
                                       const Scenario& sc) {
    const Eigen::Index n = series.size();
    if (n < 3) {
        throw AnalysisError(
            "energy_balance_residual needs at least 3 samples, got " +
            std::to_string(n));
    }
    const auto& t = series.t;
    const auto& A = series.photon;
    const auto& B = series.exciton;
    const Eigen::ArrayXd E = A + B;

    // Centered differences inside, second-order one-sided at the ends.
    Eigen::ArrayXd dE(n);
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        dE[i] = (E[i + 1] - E[i - 1]) / (t[i + 1] - t[i - 1]);
    }
    const double h0 = t[1] - t[0];
    dE[0] = (-3.0 * E[0] + 4.0 * E[1] - E[2]) / (2.0 * h0);
    const double h1 = t[n - 1] - t[n - 2];
    dE[n - 1] = (3.0 * E[n - 1] - 4.0 * E[n - 2] + E[n - 3]) / (2.0 * h1);

    // The chi term pairs with the estimator: Re<a>^2 under mean field,
    // Re<a^2> under the moments backend.
    const bool second_moment =
        series.estimator == "normal_ordered" && series.re_a_sq.size() == n;

    Eigen::ArrayXd r(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = chi(t[i], sc.params, sc.modulation, sc.chi_mode);
        const double pair_term =
            second_moment
                ? series.re_a_sq[i]
                : series.re_a[i] * series.re_a[i] -
                      series.im_a[i] * series.im_a[i];
        r[i] = dE[i] + 2.0 * sc.params.kappa * A[i] +
               2.0 * sc.params.gamma * B[i] -
               2.0 * sc.params.eps_p * series.re_a[i] - 4.0 * x * pair_term;
        r[i] /= A[i] + B[i] + 1.0;
    }
    return r;
}

}  // namespace qwom
