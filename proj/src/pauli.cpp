#include "gqv/pauli.hpp"

#include <charconv>
#include <sstream>

namespace gqv {

PauliElement::PauliElement(DimensionSpec spec, std::size_t n)
    : spec_(spec), n_(n), xi_(PhaseExp::zero(spec)), q_(2 * n, Coord::zero(spec)) {
  if (n == 0) throw InvalidInput("register count must be >= 1");
}

PauliElement::PauliElement(DimensionSpec spec, PhaseExp xi, std::vector<Coord> q)
    : spec_(spec), n_(q.size() / 2), xi_(xi), q_(std::move(q)) {
  if (q_.empty() || q_.size() % 2 != 0) throw InvalidInput("Pauli coordinate vector must have even length >= 2");
  require_in(spec_, xi_);
  for (const auto& c : q_) require_in(spec_, c);
}

void PauliElement::set_xi(const PhaseExp& xi) {
  require_in(spec_, xi);
  xi_ = xi;
}

void PauliElement::set_x(std::size_t i, const Coord& v) {
  require_in(spec_, v);
  q_.at(i) = v;
}

void PauliElement::set_z(std::size_t i, const Coord& v) {
  require_in(spec_, v);
  q_.at(n_ + i) = v;
}

bool PauliElement::is_identity() const {
  if (!xi_.is_zero()) return false;
  for (const auto& c : q_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool operator==(const PauliElement& a, const PauliElement& b) {
  return a.spec_ == b.spec_ && a.n_ == b.n_ && a.xi_ == b.xi_ && a.q_ == b.q_;
}

void require_compatible(const PauliElement& a, const PauliElement& b) {
  if (!(a.spec() == b.spec())) throw SpecMismatch("Pauli elements from different dimensions");
  if (a.n() != b.n()) {
    throw RegisterCountMismatch("Pauli elements on " + std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                                " registers");
  }
}

namespace {

// sum_i u.z_i * v.x_i lifted into S_D.
PhaseExp cross_term(const PauliElement& u, const PauliElement& v) {
  const auto& spec = u.spec();
  PhaseExp acc = PhaseExp::zero(spec);
  for (std::size_t i = 0; i < u.n(); ++i) acc += lift(spec, u.z(i)) * lift(spec, v.x(i));
  return acc;
}

}  // namespace

PauliElement pauli_compose(const PauliElement& a, const PauliElement& b) {
  require_compatible(a, b);
  const auto n = a.n();
  std::vector<Coord> q(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = a.x(i) + b.x(i);
    q[n + i] = a.z(i) + b.z(i);
  }
  return PauliElement(a.spec(), a.xi() + b.xi() + 2 * cross_term(a, b), std::move(q));
}

PauliElement pauli_inverse(const PauliElement& a) {
  const auto& spec = a.spec();
  const auto n = a.n();
  std::vector<Coord> q(2 * n);
  PhaseExp xz = PhaseExp::zero(spec);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = -a.x(i);
    q[n + i] = -a.z(i);
    xz += lift(spec, a.x(i)) * lift(spec, a.z(i));
  }
  return PauliElement(spec, -a.xi() + 2 * xz, std::move(q));
}

PhaseExp commutation_phase(const PauliElement& a, const PauliElement& b) {
  require_compatible(a, b);
  const auto& spec = a.spec();
  Coord c = Coord::zero(spec);
  for (std::size_t i = 0; i < a.n(); ++i) c += a.z(i) * b.x(i) - a.x(i) * b.z(i);
  return lift(spec, c);
}

PauliElement pauli_from_gate(const DimensionSpec& spec, std::size_t n, PauliKind which, std::size_t target,
                             const Coord& q) {
  if (target >= n) {
    throw IndexError("target register " + std::to_string(target) + " out of range for " + std::to_string(n) +
                     " registers");
  }
  require_in(spec, q);
  PauliElement p(spec, n);
  switch (which) {
    case PauliKind::X:
      p.set_x(target, q);
      break;
    case PauliKind::Z:
      p.set_z(target, q);
      break;
    case PauliKind::Y: {
      const PhaseExp lq = lift(spec, q);
      const PhaseExp r = PhaseExp::of(spec, spec.rho());
      p.set_x(target, q);
      p.set_z(target, q);
      p.set_xi(lq * (lq + r) + 2 * (lq * lq));
      break;
    }
  }
  return p;
}

PauliElement pauli_power(const PauliElement& g, const Coord& t) {
  const auto& spec = g.spec();
  require_in(spec, t);
  const auto n = g.n();
  std::vector<Coord> q(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) q[i] = t * g.coords()[i];
  const PhaseExp c = cross_term(g, g);
  const PhaseExp lt = lift(spec, t);
  return PauliElement(spec, (g.xi() - c) * lt + c * lt * lt, std::move(q));
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_value(const Coord& c) {
  return c.is_exact() ? std::to_string(c.residue()) : format_double(c.value());
}

std::string format_value(const PhaseExp& p) {
  return p.is_exact() ? std::to_string(p.residue()) : format_double(p.value());
}

std::string render_pauli(const PauliElement& p) {
  std::ostringstream os;
  os << "w^{" << format_value(p.xi()) << "/2} ";
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (i > 0) os << " ⊗ ";
    os << "X(" << format_value(p.x(i)) << ")Z(" << format_value(p.z(i)) << ")";
  }
  return os.str();
}

std::string format_pauli_literal(const PauliElement& p) {
  std::ostringstream os;
  os << "xi:" << format_value(p.xi()) << " x:";
  for (std::size_t i = 0; i < p.n(); ++i) os << (i ? "," : "") << format_value(p.x(i));
  os << " z:";
  for (std::size_t i = 0; i < p.n(); ++i) os << (i ? "," : "") << format_value(p.z(i));
  return os.str();
}

namespace {

template <typename T>
T parse_ring_value(const DimensionSpec& spec, std::string_view tok) {
  if (tok.empty()) throw InvalidInput("empty value in Pauli literal");
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (*first == '+') ++first;
  if (spec.is_qudit()) {
    std::int64_t v = 0;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) throw InvalidInput("expected integer, got '" + std::string(tok) + "'");
    return T::of(spec, v);
  }
  double v = 0;
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw InvalidInput("expected decimal, got '" + std::string(tok) + "'");
  return T::real(v);
}

std::vector<Coord> parse_list(const DimensionSpec& spec, std::string_view s) {
  std::vector<Coord> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_ring_value<Coord>(spec, s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

PauliElement parse_pauli_literal(const DimensionSpec& spec, std::size_t n, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  std::optional<PhaseExp> xi;
  std::optional<std::vector<Coord>> xs, zs;
  while (is >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw InvalidInput("malformed Pauli literal token '" + tok + "'");
    const std::string key = tok.substr(0, colon);
    const std::string_view val = std::string_view(tok).substr(colon + 1);
    if (key == "xi" && !xi) {
      xi = parse_ring_value<PhaseExp>(spec, val);
    } else if (key == "x" && !xs) {
      xs = parse_list(spec, val);
    } else if (key == "z" && !zs) {
      zs = parse_list(spec, val);
    } else {
      throw InvalidInput("unexpected or repeated key '" + key + "' in Pauli literal");
    }
  }
  if (!xi || !xs || !zs) throw InvalidInput("Pauli literal needs xi:, x: and z: fields");
  if (xs->size() != n || zs->size() != n) {
    throw RegisterCountMismatch("Pauli literal has " + std::to_string(xs->size()) + "/" +
                                std::to_string(zs->size()) + " entries, circuit has " + std::to_string(n) +
                                " registers");
  }
  std::vector<Coord> q = std::move(*xs);
  q.insert(q.end(), zs->begin(), zs->end());
  return PauliElement(spec, *xi, std::move(q));
}

}  // namespace gqv
