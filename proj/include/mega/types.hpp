#pragma once

#include <Eigen/Core>

namespace mega {

/// Planar point set, one point per column.
template <typename Scalar>
using Points2 = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using PointSet = Points2<double>;
using Point = Point2<double>;

}  // namespace mega
