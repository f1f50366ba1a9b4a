#include "gqv/ring.hpp"

#include <numbers>

namespace gqv {

DimensionSpec DimensionSpec::qudit(std::int64_t d) {
  if (d < 2) throw InvalidInput("qudit dimension must be >= 2, got " + std::to_string(d));
  return DimensionSpec(d);
}

std::int64_t DimensionSpec::d() const {
  if (is_continuous()) throw UnsupportedDimension("continuous variable has no integer dimension");
  return d_;
}

double DimensionSpec::dimension() const {
  return is_qudit() ? static_cast<double>(d_) : 2.0 * std::numbers::pi;
}

std::string DimensionSpec::to_string() const { return is_qudit() ? std::to_string(d_) : "cv"; }

namespace detail {

std::int64_t mod_floor(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

__extension__ using Wide = __int128;

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const Wide p = static_cast<Wide>(a) * static_cast<Wide>(b);
  auto r = static_cast<std::int64_t>(p % m);
  return r < 0 ? r + m : r;
}

void throw_ring_mismatch() { throw SpecMismatch("ring elements from different dimensions"); }

}  // namespace detail

void require_in(const DimensionSpec& spec, const Coord& c) {
  if (!c.belongs_to(spec)) throw SpecMismatch("coordinate does not belong to dimension " + spec.to_string());
}

void require_in(const DimensionSpec& spec, const PhaseExp& p) {
  if (!p.belongs_to(spec)) throw SpecMismatch("phase exponent does not belong to dimension " + spec.to_string());
}

Coord coord_add(const DimensionSpec& spec, const Coord& a, const Coord& b) {
  require_in(spec, a);
  require_in(spec, b);
  return a + b;
}

Coord coord_mul(const DimensionSpec& spec, const Coord& a, const Coord& b) {
  require_in(spec, a);
  require_in(spec, b);
  return a * b;
}

std::optional<Coord> try_coord_inverse(const DimensionSpec& spec, const Coord& s) {
  require_in(spec, s);
  if (spec.is_continuous()) {
    if (s.is_zero()) return std::nullopt;
    return Coord::real(1.0 / s.value());
  }
  // Extended Euclid on (s, d).
  const std::int64_t d = spec.d();
  std::int64_t r0 = d, r1 = s.residue();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) return std::nullopt;
  return Coord::exact(t0, d);
}

Coord coord_inverse(const DimensionSpec& spec, const Coord& s) {
  auto inv = try_coord_inverse(spec, s);
  if (!inv) {
    throw NotAUnit("element " + std::to_string(s.is_exact() ? s.residue() : 0) + " is not a unit in S_" +
                   spec.to_string());
  }
  return *inv;
}

bool is_unit(const DimensionSpec& spec, const Coord& s) { return try_coord_inverse(spec, s).has_value(); }

UnitPhase omega_pow(const DimensionSpec& spec, const PhaseExp& x, bool half) {
  require_in(spec, x);
  constexpr double pi = std::numbers::pi;
  if (spec.is_continuous()) return std::polar(1.0, half ? x.value() / 2.0 : x.value());
  const std::int64_t d = spec.d();
  // Exponents are reduced before scaling so the angle stays in [0, 2*pi).
  const double angle = half ? pi * static_cast<double>(x.residue()) / static_cast<double>(d)
                            : 2.0 * pi * static_cast<double>(x.residue() % d) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

PhaseExp lift(const DimensionSpec& spec, const Coord& c) {
  require_in(spec, c);
  return c.is_exact() ? PhaseExp::exact(c.residue(), 2 * spec.d()) : PhaseExp::real(c.value());
}

Coord reduce(const DimensionSpec& spec, const PhaseExp& p) {
  require_in(spec, p);
  return p.is_exact() ? Coord::exact(p.residue(), spec.d()) : Coord::real(p.value());
}

std::optional<Coord> halve(const DimensionSpec& spec, const PhaseExp& p) {
  require_in(spec, p);
  if (!p.is_exact()) return Coord::real(p.value() / 2.0);
  if (p.residue() % 2 != 0) return std::nullopt;
  return Coord::exact(p.residue() / 2, spec.d());
}

bool is_prime(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t f = 2; f * f <= d; ++f) {
    if (d % f == 0) return false;
  }
  return true;
}

}  // namespace gqv
