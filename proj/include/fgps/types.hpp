#pragma once

#include <Eigen/Core>

#include <limits>
#include <stdexcept>
#include <string>

namespace fgps {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Thrown when an iterative or adaptive computation cannot reach the requested
/// accuracy. Carries the best value obtained so far and an estimate of its
/// error, plus an index for per-element failures (root searches and the like).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what,
                        double best_estimate = std::numeric_limits<double>::quiet_NaN(),
                        double error_estimate = std::numeric_limits<double>::quiet_NaN(),
                        Index index = -1)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate),
        index_(index) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }
  Index index() const { return index_; }

 private:
  double best_estimate_;
  double error_estimate_;
  Index index_;
};

}  // namespace fgps
