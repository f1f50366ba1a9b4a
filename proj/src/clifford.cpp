#include "gqv/clifford.hpp"

#include <utility>

namespace gqv {

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.targets[0] != b.targets[0]) return false;
  if (a.is_two_register() && a.targets[1] != b.targets[1]) return false;
  switch (a.kind) {
    case GateKind::Z:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Sq:
      return a.coord_param == b.coord_param;
    case GateKind::P:
      return a.phase_param == b.phase_param;
    default:
      return true;
  }
}

void validate_gate(const DimensionSpec& spec, std::size_t n, const Gate& g) {
  const std::size_t count = g.is_two_register() ? 2 : 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (g.targets[k] >= n) {
      throw IndexError("gate target " + std::to_string(g.targets[k]) + " out of range for " + std::to_string(n) +
                       " registers");
    }
  }
  if (g.is_two_register() && g.targets[0] == g.targets[1]) {
    throw InvalidInput("two-register gate needs distinct targets");
  }
  switch (g.kind) {
    case GateKind::Z:
    case GateKind::X:
    case GateKind::Y:
      require_in(spec, g.coord_param);
      break;
    case GateKind::Sq:
      require_in(spec, g.coord_param);
      if (!is_unit(spec, g.coord_param)) throw NotAUnit("squeezing parameter is not a unit");
      break;
    case GateKind::P:
      require_in(spec, g.phase_param);
      break;
    default:
      break;
  }
}

CliffordCircuit::CliffordCircuit(DimensionSpec spec, std::size_t n) : spec_(spec), n_(n) {
  if (n == 0) throw InvalidInput("register count must be >= 1");
}

CliffordCircuit& CliffordCircuit::append(const Gate& g) {
  validate_gate(spec_, n_, g);
  gates_.push_back(g);
  return *this;
}

CliffordCircuit& CliffordCircuit::append(const CliffordCircuit& other) {
  if (!(other.spec_ == spec_)) throw SpecMismatch("appending circuit of a different dimension");
  if (other.n_ != n_) throw RegisterCountMismatch("appending circuit on a different register count");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Tableau::Tableau(DimensionSpec spec, std::size_t n, std::vector<PauliElement> images)
    : spec_(spec), n_(n), images_(std::move(images)) {
  if (images_.size() != 2 * n_) throw InvalidInput("tableau needs 2n images");
  for (const auto& img : images_) {
    if (!(img.spec() == spec_)) throw SpecMismatch("tableau image of a different dimension");
    if (img.n() != n_) throw RegisterCountMismatch("tableau image on a different register count");
  }
}

PauliElement elementary_generator(const DimensionSpec& spec, std::size_t n, std::size_t index) {
  PauliElement p(spec, n);
  if (index < n) {
    p.set_x(index, Coord::one(spec));
  } else {
    p.set_z(index - n, Coord::one(spec));
  }
  return p;
}

Tableau Tableau::identity(DimensionSpec spec, std::size_t n) {
  std::vector<PauliElement> images;
  images.reserve(2 * n);
  for (std::size_t j = 0; j < 2 * n; ++j) images.push_back(elementary_generator(spec, n, j));
  return Tableau(spec, n, std::move(images));
}

bool Tableau::preserves_commutation() const {
  for (std::size_t a = 0; a < 2 * n_; ++a) {
    const auto ga = elementary_generator(spec_, n_, a);
    for (std::size_t b = a + 1; b < 2 * n_; ++b) {
      const auto gb = elementary_generator(spec_, n_, b);
      if (!(commutation_phase(images_[a], images_[b]) == commutation_phase(ga, gb))) return false;
    }
  }
  return true;
}

PauliElement conjugate(const Gate& g, const PauliElement& p) {
  const auto& spec = p.spec();
  validate_gate(spec, p.n(), g);
  PauliElement r = p;
  const std::size_t t = g.targets[0];
  const auto lx = [&](std::size_t i) { return lift(spec, p.x(i)); };
  const auto lz = [&](std::size_t i) { return lift(spec, p.z(i)); };

  switch (g.kind) {
    case GateKind::Z:
      r.set_xi(p.xi() + 2 * (lift(spec, g.coord_param) * lx(t)));
      break;
    case GateKind::X:
      r.set_xi(p.xi() - 2 * (lift(spec, g.coord_param) * lz(t)));
      break;
    case GateKind::Y:
      r.set_xi(p.xi() + 2 * (lift(spec, g.coord_param) * (lx(t) - lz(t))));
      break;
    case GateKind::F:
      r.set_xi(p.xi() - 2 * (lx(t) * lz(t)));
      r.set_x(t, -p.z(t));
      r.set_z(t, p.x(t));
      break;
    case GateKind::Finv:
      r.set_xi(p.xi() - 2 * (lx(t) * lz(t)));
      r.set_x(t, p.z(t));
      r.set_z(t, -p.x(t));
      break;
    case GateKind::P: {
      const PhaseExp rho = PhaseExp::of(spec, spec.rho());
      r.set_xi(p.xi() + g.phase_param * lx(t) * (lx(t) + rho));
      r.set_z(t, p.z(t) + reduce(spec, g.phase_param) * p.x(t));
      break;
    }
    case GateKind::Sq:
      r.set_x(t, g.coord_param * p.x(t));
      r.set_z(t, coord_inverse(spec, g.coord_param) * p.z(t));
      break;
    case GateKind::CZ: {
      const std::size_t a = g.targets[0], b = g.targets[1];
      r.set_xi(p.xi() + 2 * (lx(a) * lx(b)));
      r.set_z(a, p.z(a) + p.x(b));
      r.set_z(b, p.z(b) + p.x(a));
      break;
    }
    case GateKind::Sum: {
      const std::size_t c = g.targets[0], u = g.targets[1];
      r.set_x(u, p.x(u) + p.x(c));
      r.set_z(c, p.z(c) - p.z(u));
      break;
    }
    case GateKind::Swap: {
      const std::size_t a = g.targets[0], b = g.targets[1];
      r.set_x(a, p.x(b));
      r.set_x(b, p.x(a));
      r.set_z(a, p.z(b));
      r.set_z(b, p.z(a));
      break;
    }
  }
  return r;
}

PauliElement conjugate(const CliffordCircuit& circuit, const PauliElement& p) {
  require_compatible(PauliElement(circuit.spec(), circuit.n()), p);
  PauliElement r = p;
  for (const auto& g : circuit.gates()) r = conjugate(g, r);
  return r;
}

Tableau tableau_from_circuit(const CliffordCircuit& circuit) {
  const auto& spec = circuit.spec();
  const auto n = circuit.n();
  std::vector<PauliElement> images;
  images.reserve(2 * n);
  for (std::size_t j = 0; j < 2 * n; ++j) images.push_back(conjugate(circuit, elementary_generator(spec, n, j)));
  return Tableau(spec, n, std::move(images));
}

PauliElement apply_tableau(const Tableau& t, const PauliElement& p) {
  require_compatible(PauliElement(t.spec(), t.n()), p);
  const auto& spec = t.spec();
  const auto n = t.n();
  // p = w^{xi/2} (prod_i X_i(x_i)) (prod_i Z_i(z_i)); conjugation is a homomorphism.
  PauliElement r(spec, p.xi(), std::vector<Coord>(2 * n, Coord::zero(spec)));
  for (std::size_t i = 0; i < n; ++i) {
    r = r * pauli_power(t.x_image(i), p.x(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    r = r * pauli_power(t.z_image(i), p.z(i));
  }
  return r;
}

Tableau tableau_compose(const Tableau& a, const Tableau& b) {
  if (!(a.spec() == b.spec())) throw SpecMismatch("tableaux of different dimensions");
  if (a.n() != b.n()) throw RegisterCountMismatch("tableaux on different register counts");
  std::vector<PauliElement> images;
  images.reserve(a.images().size());
  for (const auto& img : a.images()) images.push_back(apply_tableau(b, img));
  return Tableau(a.spec(), a.n(), std::move(images));
}

CliffordCircuit generator_identity_circuit(const DimensionSpec& spec) {
  if (spec.is_continuous() || (spec.d() != 2 && spec.d() % 2 == 0)) {
    throw UnsupportedDimension("F^2 P^{d-1} F^2 P = Z is only claimed for d = 2 and odd d");
  }
  CliffordCircuit c(spec, 1);
  c.append(Gate::p(PhaseExp::of(spec, 1), 0))
      .append(Gate::f(0))
      .append(Gate::f(0))
      .append(Gate::p(PhaseExp::of(spec, spec.d() - 1), 0))
      .append(Gate::f(0))
      .append(Gate::f(0));
  return c;
}

bool check_generator_identity(const DimensionSpec& spec) {
  const auto lhs = tableau_from_circuit(generator_identity_circuit(spec));
  CliffordCircuit z(spec, 1);
  z.append(Gate::z(Coord::one(spec), 0));
  return lhs == tableau_from_circuit(z);
}

}  // namespace gqv
