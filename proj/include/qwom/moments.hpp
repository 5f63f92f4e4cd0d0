#pragma once

#include <vector>

#include "qwom/scenario.hpp"
#include "qwom/timeseries.hpp"
#include "qwom/types.hpp"

namespace qwom {

/// First moments mu = <X> and normally ordered second moments
/// sigma[i][j] = <:X_i X_j:> over the ordered operator vector
/// X = (a, b, a', b'). Normal ordering puts daggered operators left, so
/// vacuum inputs contribute no source terms and sigma is symmetric.
struct MomentState {
    Vector4c mu = Vector4c::Zero();
    Matrix4c sigma = Matrix4c::Zero();
};

struct MomentTrajectory {
    std::vector<double> t;
    std::vector<MomentState> states;
    std::size_t step_count = 0;
};

/// Re(sigma <a'a> slot), clamped to 0 within -1e-8; more negative values
/// throw PhysicalityError.
double photon_number(const MomentState& ms);

/// Re(sigma <b'b> slot), same clamp policy.
double exciton_number(const MomentState& ms);

/// Initial moments for the scenario (coherent or Fock initial style).
MomentState initial_moments(const Scenario& sc);

/// Integrates d(mu)/dt = A mu + c together with the closed second-moment
/// system d(sigma)/dt = A sigma + sigma A^T + c mu^T + mu c^T + S(t),
/// S = A K + K A^T + D, where K holds the commutator corrections
/// (K[0][2] = K[1][3] = 1) and D the input correlations. Classical-mirror
/// variant only; throws ScenarioError otherwise.
MomentTrajectory propagate(const Scenario& sc);

/// Full pipeline: propagate and reduce to a TimeSeries with the
/// "normal_ordered" estimator, including the energy-balance residual.
TimeSeries propagate_moments(const Scenario& sc);

}  // namespace qwom
