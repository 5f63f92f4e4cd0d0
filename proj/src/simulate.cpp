#include "qwom/simulate.hpp"

#include <limits>

#include "qwom/error.hpp"
#include "qwom/integrators.hpp"
#include "qwom/models.hpp"
#include "qwom/moments.hpp"
#include "qwom/observables.hpp"

namespace qwom {

namespace {

TimeSeries series_from_path(const SampledPath& path,
                            const std::string& backend,
                            const std::string& estimator) {
    const Eigen::Index n = path.t.size();
    TimeSeries out;
    out.backend = backend;
    out.estimator = estimator;
    out.step_count = path.step_count;
    out.t = path.t.array();
    out.re_a = path.states.row(0).transpose().array();
    out.im_a = path.states.row(1).transpose().array();
    out.re_b = path.states.row(2).transpose().array();
    out.im_b = path.states.row(3).transpose().array();
    out.q = path.states.row(4).transpose().array();
    out.p = path.states.row(5).transpose().array();
    out.photon = out.re_a.square() + out.im_a.square();
    out.exciton = out.re_b.square() + out.im_b.square();
    out.residual =
        Eigen::ArrayXd::Constant(n, std::numeric_limits<double>::quiet_NaN());
    return out;
}

}  // namespace

TimeSeries run_mean_field(const Scenario& sc) {
    validate(sc);
    const SampledPath path = integrate(make_mean_field_rhs(sc),
                                       pack(sc.initial), sc.integrator,
                                       sc.t_end, sc.sample_dt);
    TimeSeries out = series_from_path(path, "mean_field", "abs2_of_mean");
    if (sc.variant == Variant::ClassicalMirror && out.size() >= 3) {
        out.residual = energy_balance_residual(out, sc);
    }
    return out;
}

TimeSeries run_deterministic(const Scenario& sc) {
    switch (sc.backend) {
        case Backend::MeanField: return run_mean_field(sc);
        case Backend::Moments: return propagate_moments(sc);
        case Backend::Ensemble:
            throw ScenarioError(
                "Ensemble backend runs through run_ensemble, not "
                "run_deterministic");
    }
    throw Error("run_deterministic: unreachable backend");
}

}  // namespace qwom
