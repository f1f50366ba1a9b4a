#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "gqv/errors.hpp"

namespace gqv {

/// Absolute tolerance used to compare continuous-variable coordinates.
inline constexpr double kContinuousTolerance = 1e-9;

/// Selects a finite qudit dimension d >= 2 or the continuous case (d = 2*pi).
class DimensionSpec {
 public:
  static DimensionSpec qudit(std::int64_t d);
  static DimensionSpec continuous() { return DimensionSpec(); }

  bool is_qudit() const { return d_ != 0; }
  bool is_continuous() const { return d_ == 0; }

  /// Qudit dimension. Throws UnsupportedDimension for the continuous case.
  std::int64_t d() const;

  /// 1 for odd qudit dimension, 0 otherwise.
  int rho() const { return (d_ % 2 != 0) ? 1 : 0; }

  /// The dimension signifier as a real number: d, or 2*pi.
  double dimension() const;

  /// "cv" or the decimal dimension, as used in circuit file headers.
  std::string to_string() const;

  friend bool operator==(const DimensionSpec&, const DimensionSpec&) = default;

 private:
  DimensionSpec() = default;
  explicit DimensionSpec(std::int64_t d) : d_(d) {}

  std::int64_t d_ = 0;  // 0 encodes the continuous case
};

namespace detail {

std::int64_t mod_floor(std::int64_t v, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
[[noreturn]] void throw_ring_mismatch();

struct CoordTag {
  static std::int64_t modulus(const DimensionSpec& s) { return s.is_qudit() ? s.d() : 0; }
};

struct PhaseTag {
  static std::int64_t modulus(const DimensionSpec& s) { return s.is_qudit() ? 2 * s.d() : 0; }
};

/// Element of Z(m) (exact, canonically reduced) or of R (modulus 0).
template <typename Tag>
class RingValue {
 public:
  RingValue() = default;

  static RingValue exact(std::int64_t value, std::int64_t modulus) {
    RingValue r;
    r.modulus_ = modulus;
    r.residue_ = mod_floor(value, modulus);
    return r;
  }

  static RingValue real(double value) {
    RingValue r;
    r.real_ = value;
    return r;
  }

  /// The integer value v interpreted in the ring that `spec` selects for this type.
  static RingValue of(const DimensionSpec& spec, std::int64_t v) {
    return spec.is_qudit() ? exact(v, Tag::modulus(spec)) : real(static_cast<double>(v));
  }

  static RingValue zero(const DimensionSpec& spec) { return of(spec, 0); }
  static RingValue one(const DimensionSpec& spec) { return of(spec, 1); }

  bool is_exact() const { return modulus_ != 0; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t residue() const { return residue_; }

  /// Real value; for exact elements this is the canonical residue.
  double value() const { return is_exact() ? static_cast<double>(residue_) : real_; }

  bool belongs_to(const DimensionSpec& spec) const { return modulus_ == Tag::modulus(spec); }

  bool is_zero() const {
    return is_exact() ? residue_ == 0 : std::abs(real_) <= kContinuousTolerance;
  }

  RingValue operator-() const {
    return is_exact() ? exact(-residue_, modulus_) : real(-real_);
  }

  friend RingValue operator+(const RingValue& a, const RingValue& b) {
    check_same(a, b);
    if (a.is_exact()) return exact(a.residue_ + b.residue_, a.modulus_);
    return real(a.real_ + b.real_);
  }

  friend RingValue operator-(const RingValue& a, const RingValue& b) { return a + (-b); }

  friend RingValue operator*(const RingValue& a, const RingValue& b) {
    check_same(a, b);
    if (a.is_exact()) return exact(mul_mod(a.residue_, b.residue_, a.modulus_), a.modulus_);
    return real(a.real_ * b.real_);
  }

  friend RingValue operator*(std::int64_t k, const RingValue& a) {
    if (a.is_exact()) return exact(mul_mod(mod_floor(k, a.modulus_), a.residue_, a.modulus_), a.modulus_);
    return real(static_cast<double>(k) * a.real_);
  }

  RingValue& operator+=(const RingValue& o) { return *this = *this + o; }
  RingValue& operator-=(const RingValue& o) { return *this = *this - o; }

  /// Exact equality for residues, kContinuousTolerance for reals.
  friend bool operator==(const RingValue& a, const RingValue& b) {
    if (a.modulus_ != b.modulus_) return false;
    if (a.is_exact()) return a.residue_ == b.residue_;
    return std::abs(a.real_ - b.real_) <= kContinuousTolerance;
  }

 private:
  static void check_same(const RingValue& a, const RingValue& b) {
    if (a.modulus_ != b.modulus_) throw_ring_mismatch();
  }

  std::int64_t modulus_ = 0;
  std::int64_t residue_ = 0;
  double real_ = 0.0;
};

}  // namespace detail

/// Element of S_d: Z(d) for qudits, R for the continuous case.
using Coord = detail::RingValue<detail::CoordTag>;
/// Element of S_D: Z(2d) for qudits, R for the continuous case.
using PhaseExp = detail::RingValue<detail::PhaseTag>;
/// Complex number of unit modulus.
using UnitPhase = std::complex<double>;

Coord coord_add(const DimensionSpec& spec, const Coord& a, const Coord& b);
Coord coord_mul(const DimensionSpec& spec, const Coord& a, const Coord& b);

/// Multiplicative inverse, or nullopt when s is not a unit of S_d.
std::optional<Coord> try_coord_inverse(const DimensionSpec& spec, const Coord& s);
/// As try_coord_inverse but throws NotAUnit.
Coord coord_inverse(const DimensionSpec& spec, const Coord& s);
bool is_unit(const DimensionSpec& spec, const Coord& s);

/// w^x, or w^{x/2} when `half` is set, with w = exp(2*pi*i/d) (w = e^i for cv).
UnitPhase omega_pow(const DimensionSpec& spec, const PhaseExp& x, bool half);

/// Canonical integer representative of a coordinate carried into S_D.
PhaseExp lift(const DimensionSpec& spec, const Coord& c);
/// Reduction S_D -> S_d.
Coord reduce(const DimensionSpec& spec, const PhaseExp& p);
/// The c in S_d with 2c = p, when p is even (always for cv).
std::optional<Coord> halve(const DimensionSpec& spec, const PhaseExp& p);

bool is_prime(std::int64_t d);

/// Throws SpecMismatch unless the value lives in the ring `spec` selects.
void require_in(const DimensionSpec& spec, const Coord& c);
void require_in(const DimensionSpec& spec, const PhaseExp& p);

}  // namespace gqv
