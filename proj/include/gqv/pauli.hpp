#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gqv/ring.hpp"

namespace gqv {

/// p_{xi, q} = w^{xi/2} X(q_1)Z(q_{n+1}) (x) ... (x) X(q_n)Z(q_{2n}).
///
/// Coordinates are stored (x_1..x_n, z_1..z_n). All stored values are
/// canonical for the spec, so equality of qudit elements is exact.
class PauliElement {
 public:
  /// Identity on n registers.
  PauliElement(DimensionSpec spec, std::size_t n);
  PauliElement(DimensionSpec spec, PhaseExp xi, std::vector<Coord> q);

  static PauliElement identity(DimensionSpec spec, std::size_t n) { return PauliElement(spec, n); }

  const DimensionSpec& spec() const { return spec_; }
  std::size_t n() const { return n_; }
  const PhaseExp& xi() const { return xi_; }
  const Coord& x(std::size_t i) const { return q_[i]; }
  const Coord& z(std::size_t i) const { return q_[n_ + i]; }
  std::span<const Coord> coords() const { return q_; }

  void set_xi(const PhaseExp& xi);
  void set_x(std::size_t i, const Coord& v);
  void set_z(std::size_t i, const Coord& v);

  bool is_identity() const;

  friend bool operator==(const PauliElement& a, const PauliElement& b);

 private:
  DimensionSpec spec_;
  std::size_t n_;
  PhaseExp xi_;
  std::vector<Coord> q_;
};

enum class PauliKind { X, Y, Z };

/// Throws SpecMismatch / RegisterCountMismatch unless a and b are compatible.
void require_compatible(const PauliElement& a, const PauliElement& b);

/// p_{xi,q} p_{zeta,p} = p_{xi+zeta+2*delta, q+p}, delta = sum_i a.z_i * b.x_i.
PauliElement pauli_compose(const PauliElement& a, const PauliElement& b);
inline PauliElement operator*(const PauliElement& a, const PauliElement& b) { return pauli_compose(a, b); }

PauliElement pauli_inverse(const PauliElement& a);

/// c with a*b = w^c * b*a. Qudit values are canonical in [0, d).
PhaseExp commutation_phase(const PauliElement& a, const PauliElement& b);

/// Single-register X(q), Y(q) or Z(q) embedded on `target`.
/// Y(q) = w^{q(q+rho)/2} Z(q) X(q), which reorders to xi = q(q+rho) + 2q^2.
PauliElement pauli_from_gate(const DimensionSpec& spec, std::size_t n, PauliKind which, std::size_t target,
                             const Coord& q);

/// g^t for a one-parameter subgroup: the unique p with coords t*v satisfying
/// the homomorphism law. For qudits this equals t-fold composition.
PauliElement pauli_power(const PauliElement& g, const Coord& t);

/// `w^{xi/2} X(x1)Z(z1) (x) ...` rendering.
std::string render_pauli(const PauliElement& p);

/// `xi:<v> x:<v1,..,vn> z:<v1,..,vn>` literal, as read and written by the CLI.
std::string format_pauli_literal(const PauliElement& p);
/// Parses a literal; qudit values are reduced into the ring. Throws
/// InvalidInput on syntax errors and RegisterCountMismatch on length errors.
PauliElement parse_pauli_literal(const DimensionSpec& spec, std::size_t n, std::string_view text);

/// Shortest round-trip decimal for cv values, canonical residue otherwise.
std::string format_value(const Coord& c);
std::string format_value(const PhaseExp& p);

}  // namespace gqv
