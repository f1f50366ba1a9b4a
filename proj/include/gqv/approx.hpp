#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gqv/dense.hpp"

namespace gqv::approx {

/// Diagonal phases (phi(0), ..., phi(d-1)) with every entry in [0, 2pi) and phi(0) = 0.
class PhaseVector {
 public:
  PhaseVector(DimensionSpec spec, std::vector<double> phases);

  const DimensionSpec& spec() const { return spec_; }
  const std::vector<double>& phases() const { return phases_; }
  double operator[](std::size_t q) const { return phases_[q]; }
  std::size_t size() const { return phases_.size(); }

 private:
  DimensionSpec spec_;
  std::vector<double> phases_;
};

/// N * phi reduced into [0, 2pi) entrywise.
std::vector<double> orbit_point(const PhaseVector& phi, std::int64_t n);

/// max_q |e^{i a_q} - e^{i b_q}|.
double phase_distance(const std::vector<double>& a, const std::vector<double>& b);

/// Smallest N in [1, n_max] with phase_distance(N phi, target) <= eps.
std::optional<std::int64_t> rotation_orbit_search(const PhaseVector& phi, const PhaseVector& target, double eps,
                                                  std::int64_t n_max);

struct EulerAngles {
  double phi;
  double theta1;
  double theta2;
  double theta3;
};

/// Angles with U = e^{i phi} R(theta1) F R(theta2) F R(theta3), R(t) = diag(1, e^{it}).
/// All angles reduced to [0, 2pi). Throws InvalidInput unless U is a 2x2 unitary.
EulerAngles qubit_euler_decompose(const dense::Matrix& u);

dense::Matrix euler_reconstruct(const EulerAngles& a);

}  // namespace gqv::approx
