#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gqv/pauli.hpp"

namespace gqv {

enum class GateKind { Z, X, Y, F, Finv, P, Sq, CZ, Sum, Swap };

/// One generator gate. Single-register gates use targets[0]; SUM uses
/// (control, target); CZ and SWAP are symmetric in their two targets.
struct Gate {
  GateKind kind;
  std::array<std::size_t, 2> targets{0, 0};
  Coord coord_param;      // Z, X, Y, Sq
  PhaseExp phase_param;   // P

  static Gate z(Coord p, std::size_t t) { return {GateKind::Z, {t, t}, p, {}}; }
  static Gate x(Coord p, std::size_t t) { return {GateKind::X, {t, t}, p, {}}; }
  static Gate y(Coord p, std::size_t t) { return {GateKind::Y, {t, t}, p, {}}; }
  static Gate f(std::size_t t) { return {GateKind::F, {t, t}, {}, {}}; }
  static Gate finv(std::size_t t) { return {GateKind::Finv, {t, t}, {}, {}}; }
  static Gate p(PhaseExp p, std::size_t t) { return {GateKind::P, {t, t}, {}, p}; }
  static Gate sq(Coord s, std::size_t t) { return {GateKind::Sq, {t, t}, s, {}}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}, {}, {}}; }
  static Gate sum(std::size_t control, std::size_t target) { return {GateKind::Sum, {control, target}, {}, {}}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::Swap, {a, b}, {}, {}}; }

  bool is_two_register() const {
    return kind == GateKind::CZ || kind == GateKind::Sum || kind == GateKind::Swap;
  }

  friend bool operator==(const Gate& a, const Gate& b);
};

/// Checks targets and parameters against (spec, n). Throws IndexError,
/// InvalidInput (equal two-register targets), SpecMismatch or NotAUnit.
void validate_gate(const DimensionSpec& spec, std::size_t n, const Gate& g);

/// Gates in application order: the first gate acts first.
class CliffordCircuit {
 public:
  CliffordCircuit(DimensionSpec spec, std::size_t n);

  const DimensionSpec& spec() const { return spec_; }
  std::size_t n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  CliffordCircuit& append(const Gate& g);
  CliffordCircuit& append(const CliffordCircuit& other);

  friend bool operator==(const CliffordCircuit&, const CliffordCircuit&) = default;

 private:
  DimensionSpec spec_;
  std::size_t n_;
  std::vector<Gate> gates_;
};

/// Heisenberg-picture record of a Clifford U: U X_i U^dag and U Z_i U^dag
/// for the unit generators X_i = X(1), Z_i = Z(1).
class Tableau {
 public:
  /// images[i] for X_i (i < n), images[n+i] for Z_i.
  Tableau(DimensionSpec spec, std::size_t n, std::vector<PauliElement> images);

  static Tableau identity(DimensionSpec spec, std::size_t n);

  const DimensionSpec& spec() const { return spec_; }
  std::size_t n() const { return n_; }
  const PauliElement& x_image(std::size_t i) const { return images_[i]; }
  const PauliElement& z_image(std::size_t i) const { return images_[n_ + i]; }
  const std::vector<PauliElement>& images() const { return images_; }

  /// Commutation phases between all pairs of images match those of the generators.
  bool preserves_commutation() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  DimensionSpec spec_;
  std::size_t n_;
  std::vector<PauliElement> images_;
};

/// The elementary generator X_i (index < n) or Z_{index-n}.
PauliElement elementary_generator(const DimensionSpec& spec, std::size_t n, std::size_t index);

/// g p g^dag for a single gate.
PauliElement conjugate(const Gate& g, const PauliElement& p);
/// U p U^dag with U the circuit.
PauliElement conjugate(const CliffordCircuit& circuit, const PauliElement& p);

Tableau tableau_from_circuit(const CliffordCircuit& circuit);
/// The tableau of "a, then b".
Tableau tableau_compose(const Tableau& a, const Tableau& b);
PauliElement apply_tableau(const Tableau& t, const PauliElement& p);

/// Largest gates/n^2 ratio synthesize() can emit.
inline constexpr std::size_t kSynthesisGateConstant = 64;

/// Circuit over {CZ, F, P(p), Z(p)} whose tableau equals t. Requires prime
/// d or cv; throws NonPrimeDimension or NonSymplectic.
CliffordCircuit synthesize(const Tableau& t);

/// Whether the tableau of F^2 P^{d-1} F^2 P equals that of Z. Defined for
/// d = 2 and odd d; throws UnsupportedDimension otherwise.
bool check_generator_identity(const DimensionSpec& spec);
/// The circuit F^2 P^{d-1} F^2 P in application order.
CliffordCircuit generator_identity_circuit(const DimensionSpec& spec);

}  // namespace gqv
