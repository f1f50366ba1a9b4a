// Clifford synthesis by symplectic Gaussian elimination over S_d (prime d or R).
//
// The elimination drives the coordinate part of the tableau to the identity
// with a sequence of macro operations. The macros are recorded, inverted and
// expanded into the generator set {CZ, F, P(p), Z(p)}; a Pauli layer placed
// first then fixes the image phases.

#include <algorithm>
#include <cmath>
#include <utility>

#include "gqv/clifford.hpp"

namespace gqv {
namespace {

enum class MacroKind {
  Fourier,     // (x, z) -> (-z, x)
  FourierInv,  // (x, z) -> (z, -x)
  Shear,       // z += k x
  UpShear,     // x += k z
  Squeeze,     // (x, z) -> (k x, z / k)
  SumPow,      // x_t += k x_c, z_c -= k z_t
};

struct Macro {
  MacroKind kind;
  std::size_t a;  // register (control for SumPow)
  std::size_t b;  // SumPow target
  Coord k;
};

class Expander {
 public:
  explicit Expander(const DimensionSpec& spec) : spec_(spec) {}

  void fourier(std::vector<Gate>& out, std::size_t t) const { out.push_back(Gate::f(t)); }

  void fourier_inv(std::vector<Gate>& out, std::size_t t) const {
    for (int i = 0; i < 3; ++i) out.push_back(Gate::f(t));
  }

  void shear(std::vector<Gate>& out, std::size_t t, const Coord& k) const {
    if (!k.is_zero()) out.push_back(Gate::p(lift(spec_, k), t));
  }

  // F, P(-k), F^-1 maps x -> x + k z.
  void up_shear(std::vector<Gate>& out, std::size_t t, const Coord& k) const {
    if (k.is_zero()) return;
    fourier(out, t);
    shear(out, t, -k);
    fourier_inv(out, t);
  }

  // diag(s, 1/s) = F^-1 . L(s) . U(-1/s) . L(s) as symplectic matrices.
  void squeeze(std::vector<Gate>& out, std::size_t t, const Coord& s) const {
    if (s == Coord::one(spec_)) return;
    const Coord inv = coord_inverse(spec_, s);
    shear(out, t, s);
    up_shear(out, t, -inv);
    shear(out, t, s);
    fourier_inv(out, t);
  }

  // z_a += k x_b, z_b += k x_a.
  void cz_pow(std::vector<Gate>& out, std::size_t a, std::size_t b, const Coord& k) const {
    if (k.is_zero()) return;
    if (k == Coord::one(spec_)) {
      out.push_back(Gate::cz(a, b));
      return;
    }
    squeeze(out, b, k);
    out.push_back(Gate::cz(a, b));
    squeeze(out, b, coord_inverse(spec_, k));
  }

  void sum_pow(std::vector<Gate>& out, std::size_t c, std::size_t t, const Coord& k) const {
    if (k.is_zero()) return;
    fourier(out, t);
    cz_pow(out, c, t, k);
    fourier_inv(out, t);
  }

  std::vector<Gate> expand(const Macro& m) const {
    std::vector<Gate> out;
    switch (m.kind) {
      case MacroKind::Fourier:
        fourier(out, m.a);
        break;
      case MacroKind::FourierInv:
        fourier_inv(out, m.a);
        break;
      case MacroKind::Shear:
        shear(out, m.a, m.k);
        break;
      case MacroKind::UpShear:
        up_shear(out, m.a, m.k);
        break;
      case MacroKind::Squeeze:
        squeeze(out, m.a, m.k);
        break;
      case MacroKind::SumPow:
        sum_pow(out, m.a, m.b, m.k);
        break;
    }
    return out;
  }

  Macro inverse(const Macro& m) const {
    switch (m.kind) {
      case MacroKind::Fourier:
        return {MacroKind::FourierInv, m.a, m.b, m.k};
      case MacroKind::FourierInv:
        return {MacroKind::Fourier, m.a, m.b, m.k};
      case MacroKind::Squeeze:
        return {MacroKind::Squeeze, m.a, m.b, coord_inverse(spec_, m.k)};
      default:
        return {m.kind, m.a, m.b, -m.k};
    }
  }

 private:
  DimensionSpec spec_;
};

// Column-major working copy of the coordinate part: cols[j] = image of generator j.
class Eliminator {
 public:
  Eliminator(const Tableau& t) : spec_(t.spec()), n_(t.n()), expander_(t.spec()), images_(t.images()) {}

  const std::vector<Macro>& ops() const { return ops_; }

  void run() {
    for (std::size_t i = 0; i < n_; ++i) {
      clear_x_column(i);
      clear_z_column(i);
    }
  }

 private:
  const Coord& x(std::size_t col, std::size_t r) const { return images_[col].x(r); }
  const Coord& z(std::size_t col, std::size_t r) const { return images_[col].z(r); }

  void apply(const Macro& m) {
    const auto gates = expander_.expand(m);
    if (gates.empty()) return;
    for (auto& img : images_) {
      for (const auto& g : gates) img = conjugate(g, img);
    }
    ops_.push_back(m);
  }

  Coord ratio(const Coord& num, const Coord& den) const { return num * coord_inverse(spec_, den); }

  // For cv, pivot towards the larger entry; for qudits any nonzero entry works.
  bool prefer(const Coord& a, const Coord& b) const {
    if (a.is_zero()) return false;
    if (b.is_zero()) return true;
    return !a.is_exact() && std::abs(a.value()) > std::abs(b.value());
  }

  // Drive column X_i to the unit vector e_{x_i}.
  void clear_x_column(std::size_t i) {
    const std::size_t col = i;
    for (std::size_t j = i; j < n_; ++j) {
      if (z(col, j).is_zero()) continue;
      if (prefer(z(col, j), x(col, j))) apply({MacroKind::Fourier, j, j, Coord::zero(spec_)});
      if (!z(col, j).is_zero()) apply({MacroKind::Shear, j, j, -ratio(z(col, j), x(col, j))});
    }
    std::size_t pivot = i;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (prefer(x(col, j), x(col, pivot))) pivot = j;
    }
    if (x(col, pivot).is_zero()) throw NonSymplectic("tableau coordinate matrix is singular");
    if (pivot != i) apply({MacroKind::SumPow, pivot, i, Coord::one(spec_)});
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (x(col, j).is_zero()) continue;
      apply({MacroKind::SumPow, i, j, -ratio(x(col, j), x(col, i))});
    }
    apply({MacroKind::Squeeze, i, i, coord_inverse(spec_, x(col, i))});
  }

  // With column X_i fixed at e_{x_i}, drive column Z_i to e_{z_i} using only
  // operations that leave e_{x_i} invariant.
  void clear_z_column(std::size_t i) {
    const std::size_t col = n_ + i;
    if (!(z(col, i) == Coord::one(spec_))) throw NonSymplectic("tableau does not preserve commutation");
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!x(col, j).is_zero()) {
        if (prefer(x(col, j), z(col, j))) apply({MacroKind::FourierInv, j, j, Coord::zero(spec_)});
        if (!x(col, j).is_zero()) apply({MacroKind::UpShear, j, j, -ratio(x(col, j), z(col, j))});
      }
      if (!z(col, j).is_zero()) apply({MacroKind::SumPow, j, i, z(col, j)});
    }
    if (!x(col, i).is_zero()) apply({MacroKind::UpShear, i, i, -x(col, i)});
  }

  DimensionSpec spec_;
  std::size_t n_;
  Expander expander_;
  std::vector<PauliElement> images_;
  std::vector<Macro> ops_;
};

}  // namespace

CliffordCircuit synthesize(const Tableau& t) {
  const auto& spec = t.spec();
  if (spec.is_qudit() && !is_prime(spec.d())) {
    throw NonPrimeDimension("synthesis needs a prime dimension, got d = " + std::to_string(spec.d()));
  }
  if (!t.preserves_commutation()) throw NonSymplectic("tableau does not preserve commutation relations");

  Eliminator elim(t);
  elim.run();

  // The ops satisfy O_k ... O_1 S = I, so S = O_1^-1 ... O_k^-1: apply O_k^-1 first.
  const Expander expander(spec);
  const auto n = t.n();
  CliffordCircuit body(spec, n);
  const auto& ops = elim.ops();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    for (const auto& g : expander.expand(expander.inverse(*it))) body.append(g);
  }

  // Prepending a Pauli g shifts image j's phase by 2 c(g, e_j):
  // c(g, e_{x_i}) = g.z_i and c(g, e_{z_i}) = -g.x_i.
  const Tableau got = tableau_from_circuit(body);
  CliffordCircuit out(spec, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto dx = halve(spec, t.x_image(i).xi() - got.x_image(i).xi());
    const auto dz = halve(spec, t.z_image(i).xi() - got.z_image(i).xi());
    if (!dx || !dz) throw NonSymplectic("image phases are inconsistent with any Clifford");
    if (!dz->is_zero()) {
      out.append(Gate::f(i)).append(Gate::z(-*dz, i));
      for (int k = 0; k < 3; ++k) out.append(Gate::f(i));
    }
    if (!dx->is_zero()) out.append(Gate::z(*dx, i));
  }
  out.append(body);

  if (!(tableau_from_circuit(out) == t)) throw NonSymplectic("tableau is not realisable by a Clifford circuit");
  return out;
}

}  // namespace gqv
