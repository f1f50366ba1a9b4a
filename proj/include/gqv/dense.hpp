#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gqv/clifford.hpp"

namespace gqv::dense {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Entry/amplitude tolerance used by the dense checks.
inline constexpr double kEntryTolerance = 1e-10;
/// Largest d^n the oracle will represent.
inline constexpr std::size_t kMaxDimension = 4096;

/// Max-norm of any dense expression.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// ||U U^dag - I||_max.
template <typename Derived>
double unitarity_error(const Eigen::MatrixBase<Derived>& u) {
  return max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.cols()));
}

/// Max-norm distance after removing the best global phase a -> e^{i t} a.
double distance_up_to_phase(const Matrix& a, const Matrix& b);

struct DenseOperator {
  DimensionSpec spec;
  std::size_t n;
  Matrix m;
};

struct StateVector {
  DimensionSpec spec;
  std::size_t n;
  Vector v;
};

enum class BasisKind { Computational, Fourier, Phase };

std::string to_string(BasisKind k);

/// d^n, throwing TooLarge past kMaxDimension and UnsupportedDimension for cv.
std::size_t hilbert_dimension(const DimensionSpec& spec, std::size_t n);

// Single-register gates that live only in the dense oracle.
struct Rotation {
  std::vector<double> theta;  // theta(q) for q = 0..d-1, theta(0) == 0
};
struct CubicPhase {
  Coord q_prime;
  double c;
};
/// D(q, q') = w^{-2^{-1} q q'} Z(q') X(q). Signed integer representatives:
/// for even d the phase uses 1/2 and so depends on the representative.
struct Displacement {
  std::int64_t q;
  std::int64_t q_prime;
};
struct Position {};
struct Momentum {};

StateVector basis_state(const DimensionSpec& spec, BasisKind kind, const Coord& q);

DenseOperator gate_matrix(const DimensionSpec& spec, std::size_t n, const Gate& g);
DenseOperator gate_matrix(const DimensionSpec& spec, const Gate& g);
DenseOperator gate_matrix(const DimensionSpec& spec, const Rotation& r);
DenseOperator gate_matrix(const DimensionSpec& spec, const CubicPhase& g);
DenseOperator gate_matrix(const DimensionSpec& spec, const Displacement& g);
DenseOperator gate_matrix(const DimensionSpec& spec, Position);
DenseOperator gate_matrix(const DimensionSpec& spec, Momentum);

/// The d x d Fourier matrix F|q> = d^{-1/2} sum_q' w^{qq'} |q'>.
Matrix fourier_matrix(std::int64_t d);

/// Dense matrix of a Pauli element, including w^{xi/2}.
Matrix densify(const PauliElement& p);

/// Left-multiplies m (d^n rows) by the gate, in place.
void apply_gate(const DimensionSpec& spec, std::size_t n, const Gate& g, Matrix& m);

Matrix circuit_unitary(const CliffordCircuit& circuit);

/// U m U^dag for the circuit U, computed gate by gate.
Matrix conjugate_dense(const CliffordCircuit& circuit, const Matrix& m);

Scalar overlap(const StateVector& a, const StateVector& b);

/// Closed forms for the three-basis overlaps <a_q | b_q'>.
Scalar overlap_closed_form(const DimensionSpec& spec, BasisKind a, BasisKind b, const Coord& q,
                           const Coord& q_prime);

struct MubResult {
  double k_d;
  bool pass;
  double max_deviation;
};

/// Cross-basis |<a|b>|^2 all equal within kEntryTolerance. Rejects fewer than
/// two kinds or repeated kinds with InvalidInput.
MubResult mub_check(const DimensionSpec& spec, const std::vector<BasisKind>& kinds);

struct GaussSum {
  Scalar brute;
  Scalar closed;
};

/// (1/a) sum_{k<a} e^{i pi (k^2 + bk)/a} and e^{i pi/4} e^{-i pi b^2/4a}/sqrt(a).
GaussSum gauss_sum(std::int64_t a, std::int64_t b);

struct RelationResult {
  std::string name;
  double max_error;
  bool pass;
};

struct EigenrelationReport {
  std::vector<RelationResult> relations;  // the nine X/Y/Z x basis relations
  /// Y on the phase basis as implied by Y = w^{q(q+rho)/2} Z(q)X(q).
  RelationResult y_phase_derived;
  bool all_pass() const;
};

EigenrelationReport eigenrelation_suite(const DimensionSpec& spec);

/// ||U densify(p) U^dag - densify(conjugate(circuit, p))||_max.
double verify_conjugation(const CliffordCircuit& circuit, const PauliElement& p);

/// Largest d^n accepted by is_clifford_witness.
inline constexpr std::size_t kMaxWitnessDimension = 256;

/// Whether g X_i g^dag and g Z_i g^dag all have the form w^{xi/2} X(a) Z(b),
/// to 1e-8. Needs d <= 16 and d^n <= kMaxWitnessDimension (else TooLarge).
bool is_clifford_witness(const DenseOperator& g);

/// Dense check of F^2 P^{d-1} F^2 P = Z up to global phase (d = 2 or odd d).
bool generator_identity_dense(const DimensionSpec& spec);

}  // namespace gqv::dense
