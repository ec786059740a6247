#pragma once

#include "pivotlab/rational.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace pivotlab {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact solve of the square system M * X = RHS by Gaussian elimination with
/// row swaps (any nonzero pivot is exact). Returns nullopt when M is
/// singular. RHS may have several columns.
std::optional<Mat> solve_exact(const Mat& m, const Mat& rhs);

/// Exact rank via fraction-free elimination on a working copy.
Eigen::Index rank_exact(Mat m);

/// Column submatrix A[:, indices] in the given index order.
Mat select_columns(const Mat& a, const std::vector<int>& indices);

}  // namespace pivotlab
