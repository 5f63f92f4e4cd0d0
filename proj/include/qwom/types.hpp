#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qwom {

using Complex = std::complex<double>;
using Vector4c = Eigen::Vector4cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr Complex kI{0.0, 1.0};

/// c-number amplitudes of the cavity mode <a>, the exciton mode <b> and the
/// dimensionless mirror position/momentum <q>, <p> at one instant.
struct MeanFieldState {
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
    double q = 0.0;
    double p = 0.0;
};

/// Time derivative of a MeanFieldState.
struct Derivative {
    Complex da{0.0, 0.0};
    Complex db{0.0, 0.0};
    double dq = 0.0;
    double dp = 0.0;
};

}  // namespace qwom
