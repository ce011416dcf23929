#pragma once

#include <Eigen/Core>
#include <string>

namespace gkern {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Eigen::MatrixXi;

// A labeled feature point in 3-space (the input of the pharmacophore kernel).
struct LabeledPoint {
  Vec3 position;
  std::string label;
};

}  // namespace gkern
