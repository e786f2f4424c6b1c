#pragma once

#include <Eigen/Core>

namespace pmfa {

template <class Scalar>
using vec_t = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using mat_t = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Array = vec_t<double>;
using BoolArray = vec_t<bool>;
using IntArray = vec_t<Eigen::Index>;
using Matrix = mat_t<double>;
using Index = Eigen::Index;

/// Inclusive range of dyadic scales used by a log-log regression.
struct JRange {
  int j1;
  int j2;
};

}  // namespace pmfa
