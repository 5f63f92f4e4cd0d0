#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qwom/scenario.hpp"
#include "qwom/types.hpp"

namespace qwom {

/// Drift/drive/diffusion of the linear (classical-mirror) variant acting on
/// the ordered operator vector X = (a, b, a', b'), primes denoting daggers.
/// drift rows/columns 3,4 are the complex conjugates of rows/columns 1,2
/// under the swap (a <-> a', b <-> b'); diffusion holds the two nonzero
/// input correlations <a_in a_in'> = 2 kappa and <b_in b_in'> = 2 gamma.
struct LinearSystem {
    Matrix4c drift = Matrix4c::Zero();
    Vector4c drive = Vector4c::Zero();
    Matrix4c diffusion = Matrix4c::Zero();
};

/// Mean-field right-hand side, classical mirror with modulated cavity
/// frequency. q and p are carried but never read or written.
Derivative rhs_model1(double t, const MeanFieldState& s, const Scenario& sc);

/// Mean-field right-hand side, quantized mirror. Trilinear operator products
/// are factorized <xy> -> <x><y>. dp is evaluated in complex arithmetic and
/// must come out real; an imaginary part beyond 1e-12 * |dp| throws.
Derivative rhs_model2(double t, const MeanFieldState& s, const Scenario& sc);

/// Mean-field right-hand side, constant cavity frequency with
/// amplitude-modulated pump.
Derivative rhs_model3(double t, const MeanFieldState& s, const Scenario& sc);

/// Dispatch on sc.variant.
Derivative rhs(double t, const MeanFieldState& s, const Scenario& sc);

/// Linear system of the classical-mirror variant at time t. The two-photon
/// coupling 2 chi(t) sits in drift(0, 2).
LinearSystem linear_system_model1(double t, const Scenario& sc);

// --- packed-vector adapters for the generic integrators ---

/// Mean-field state packs into 6 reals: [Re a, Im a, Re b, Im b, q, p].
inline constexpr int kMeanFieldDim = 6;

Eigen::VectorXd pack(const MeanFieldState& s);
MeanFieldState unpack(const Eigen::VectorXd& y);

using PackedRhs =
    std::function<void(double, const Eigen::VectorXd&, Eigen::VectorXd&)>;

/// Packed mean-field RHS for sc.variant.
PackedRhs make_mean_field_rhs(const Scenario& sc);

}  // namespace qwom
