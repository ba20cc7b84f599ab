#pragma once

#include <Eigen/Dense>

namespace ebi {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Execution mode for assembly/evaluation kernels. `serial` is the reference
/// path used by tests and the benchmark; `parallel` uses OpenMP over rows.
enum class Exec { serial, parallel };

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace ebi
