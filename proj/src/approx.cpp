#include "gqv/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gqv::approx {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

dense::Matrix rotation(double t) {
  dense::Matrix r = dense::Matrix::Identity(2, 2);
  r(1, 1) = std::polar(1.0, t);
  return r;
}

}  // namespace

PhaseVector::PhaseVector(DimensionSpec spec, std::vector<double> phases) : spec_(spec), phases_(std::move(phases)) {
  if (!spec_.is_qudit()) throw UnsupportedDimension("phase vectors are defined for finite d");
  if (static_cast<std::int64_t>(phases_.size()) != spec_.d()) throw InvalidInput("phase vector needs d entries");
  if (phases_[0] != 0.0) throw InvalidInput("phase vector must start with 0");
  for (double p : phases_) {
    if (!std::isfinite(p) || p < 0.0 || p >= kTwoPi) throw InvalidInput("phase angles must lie in [0, 2pi)");
  }
}

std::vector<double> orbit_point(const PhaseVector& phi, std::int64_t n) {
  std::vector<double> out(phi.size());
  for (std::size_t q = 0; q < phi.size(); ++q) out[q] = wrap(static_cast<double>(n) * phi[q]);
  return out;
}

double phase_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t q = 0; q < a.size(); ++q) m = std::max(m, std::abs(std::polar(1.0, a[q]) - std::polar(1.0, b[q])));
  return m;
}

std::optional<std::int64_t> rotation_orbit_search(const PhaseVector& phi, const PhaseVector& target, double eps,
                                                  std::int64_t n_max) {
  if (!(phi.spec() == target.spec())) throw SpecMismatch("orbit target has a different dimension");
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (phase_distance(orbit_point(phi, n), target.phases()) <= eps) return n;
  }
  return std::nullopt;
}

EulerAngles qubit_euler_decompose(const dense::Matrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw InvalidInput("Euler decomposition needs a 2x2 matrix");
  if (dense::unitarity_error(u) > 1e-9) throw InvalidInput("matrix is not unitary");

  // V = U / sqrt(det U) is in SU(2) and equals Rz(a) Rx(b) Rz(c).
  const dense::Scalar root = std::sqrt(u.determinant());
  const dense::Matrix v = u / root;
  const double b = 2.0 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
  constexpr double tiny = 1e-14;
  const double sum = std::abs(v(1, 1)) > tiny ? 2.0 * std::arg(v(1, 1)) : 0.0;
  const double diff = std::abs(v(1, 0)) > tiny ? 2.0 * std::arg(v(1, 0)) + std::numbers::pi : 0.0;
  const double a = (sum + diff) / 2.0;
  const double c = (sum - diff) / 2.0;

  // R(t) = e^{it/2} Rz(t) and F R(t) F = e^{it/2} Rx(t).
  const double phi = std::arg(root) - (a + b + c) / 2.0;
  return {wrap(phi), wrap(a), wrap(b), wrap(c)};
}

dense::Matrix euler_reconstruct(const EulerAngles& a) {
  const dense::Matrix f = dense::fourier_matrix(2);
  return std::polar(1.0, a.phi) * rotation(a.theta1) * f * rotation(a.theta2) * f * rotation(a.theta3);
}

}  // namespace gqv::approx
