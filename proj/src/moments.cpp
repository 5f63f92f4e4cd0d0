#include "qwom/moments.hpp"

#include <cmath>

#include "qwom/error.hpp"
#include "qwom/integrators.hpp"
#include "qwom/models.hpp"
#include "qwom/observables.hpp"

namespace qwom {

namespace {

constexpr int kMomentDim = 40;  // 4 complex means + 16 complex second moments

// Commutator correction between as-written and normally ordered products:
// <a a'> = <:a a':> + 1, <b b'> = <:b b':> + 1.
Matrix4c commutator_correction() {
    Matrix4c K = Matrix4c::Zero();
    K(0, 2) = 1.0;
    K(1, 3) = 1.0;
    return K;
}

Eigen::VectorXd pack_moments(const MomentState& ms) {
    Eigen::VectorXd y(kMomentDim);
    for (int i = 0; i < 4; ++i) {
        y[i] = ms.mu[i].real();
        y[4 + i] = ms.mu[i].imag();
    }
    int k = 8;
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i, ++k) {
            y[k] = ms.sigma(i, j).real();
            y[16 + k] = ms.sigma(i, j).imag();
        }
    }
    return y;
}

MomentState unpack_moments(const Eigen::VectorXd& y) {
    MomentState ms;
    for (int i = 0; i < 4; ++i) ms.mu[i] = Complex(y[i], y[4 + i]);
    int k = 8;
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i, ++k) {
            ms.sigma(i, j) = Complex(y[k], y[16 + k]);
        }
    }
    return ms;
}

double occupation(const MomentState& ms, int dagger_slot, int bare_slot,
                  const char* label) {
    const double v = ms.sigma(dagger_slot, bare_slot).real();
    if (v < -1e-8) {
        throw PhysicalityError(std::string(label) +
                               " went negative beyond tolerance: " +
                               std::to_string(v));
    }
    return std::max(v, 0.0);
}

}  // namespace

double photon_number(const MomentState& ms) {
    return occupation(ms, 2, 0, "photon number <a'a>");
}

double exciton_number(const MomentState& ms) {
    return occupation(ms, 3, 1, "exciton number <b'b>");
}

MomentState initial_moments(const Scenario& sc) {
    MomentState ms;
    if (sc.initial_style == InitialStyle::Coherent) {
        ms.mu << sc.initial.a, sc.initial.b, std::conj(sc.initial.a),
            std::conj(sc.initial.b);
        ms.sigma = ms.mu * ms.mu.transpose();
    } else {
        // Fock-like occupations with no coherences.
        ms.sigma(0, 2) = ms.sigma(2, 0) = std::norm(sc.initial.a);
        ms.sigma(1, 3) = ms.sigma(3, 1) = std::norm(sc.initial.b);
    }
    return ms;
}

MomentTrajectory propagate(const Scenario& sc) {
    if (sc.variant != Variant::ClassicalMirror) {
        throw ScenarioError(
            "moments backend supports only the ClassicalMirror variant, got " +
            to_string(sc.variant));
    }
    validate(sc);

    const Matrix4c K = commutator_correction();

    auto rhs = [&sc, K](double t, const Eigen::VectorXd& y,
                        Eigen::VectorXd& dy) {
        const MomentState ms = unpack_moments(y);
        const LinearSystem sys = linear_system_model1(t, sc);
        const Matrix4c& A = sys.drift;
        const Vector4c& c = sys.drive;

        MomentState d;
        d.mu = A * ms.mu + c;
        // Normally ordered second moments: the vacuum-input diffusion is
        // exactly cancelled by the commutator flow, leaving S = AK + KA^T + D
        // whose only surviving entries are the 2 chi(t) pair sources.
        const Matrix4c S = A * K + K * A.transpose() + sys.diffusion;
        d.sigma = A * ms.sigma + ms.sigma * A.transpose() +
                  c * ms.mu.transpose() + ms.mu * c.transpose() + S;
        dy = pack_moments(d);
    };

    const SampledPath path =
        integrate(rhs, pack_moments(initial_moments(sc)), sc.integrator,
                  sc.t_end, sc.sample_dt);

    MomentTrajectory traj;
    traj.step_count = path.step_count;
    traj.t.resize(path.t.size());
    traj.states.reserve(path.t.size());
    for (Eigen::Index i = 0; i < path.t.size(); ++i) {
        traj.t[i] = path.t[i];
        traj.states.push_back(unpack_moments(path.states.col(i)));
    }
    return traj;
}

TimeSeries propagate_moments(const Scenario& sc) {
    const MomentTrajectory traj = propagate(sc);
    const Eigen::Index n = static_cast<Eigen::Index>(traj.t.size());

    TimeSeries out;
    out.backend = "moments";
    out.estimator = "normal_ordered";
    out.step_count = traj.step_count;
    out.t.resize(n);
    out.re_a.resize(n);
    out.im_a.resize(n);
    out.re_b.resize(n);
    out.im_b.resize(n);
    out.q.resize(n);
    out.p.resize(n);
    out.photon.resize(n);
    out.exciton.resize(n);
    out.re_a_sq.resize(n);

    for (Eigen::Index i = 0; i < n; ++i) {
        const MomentState& ms = traj.states[i];
        out.t[i] = traj.t[i];
        out.re_a[i] = ms.mu[0].real();
        out.im_a[i] = ms.mu[0].imag();
        out.re_b[i] = ms.mu[1].real();
        out.im_b[i] = ms.mu[1].imag();
        out.q[i] = sc.initial.q;  // mirror is classical and frozen here
        out.p[i] = sc.initial.p;
        out.photon[i] = photon_number(ms);
        out.exciton[i] = exciton_number(ms);
        out.re_a_sq[i] = ms.sigma(0, 0).real();
    }
    out.residual = energy_balance_residual(out, sc);
    return out;
}

}  // namespace qwom
