#include "gqv/dense.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

namespace gqv::dense {
namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t require_qudit(const DimensionSpec& spec) {
  if (spec.is_continuous()) throw UnsupportedDimension("the dense oracle is defined for finite d only");
  return spec.d();
}

std::int64_t mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// w^e with w = exp(2 pi i / d).
Scalar w_pow(std::int64_t d, std::int64_t e) {
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(mod(e, d)) / static_cast<double>(d));
}

// w^{e/2} = exp(i pi e / d).
Scalar w_half(std::int64_t d, std::int64_t e) {
  return std::polar(1.0, kPi * static_cast<double>(mod(e, 2 * d)) / static_cast<double>(d));
}

std::size_t stride_of(std::int64_t d, std::size_t n, std::size_t t) {
  std::size_t s = 1;
  for (std::size_t k = t + 1; k < n; ++k) s *= static_cast<std::size_t>(d);
  return s;
}

std::int64_t digit(std::size_t index, std::int64_t d, std::size_t stride) {
  return static_cast<std::int64_t>((index / stride) % static_cast<std::size_t>(d));
}

Matrix shift_matrix(std::int64_t d, std::int64_t a) {
  Matrix m = Matrix::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(mod(q + a, d), q) = 1.0;
  return m;
}

Matrix clock_matrix(std::int64_t d, std::int64_t b) {
  Matrix m = Matrix::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(q, q) = w_pow(d, b * q);
  return m;
}

Matrix phase_gate_matrix(const DimensionSpec& spec, std::int64_t p) {
  const std::int64_t d = spec.d();
  Matrix m = Matrix::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(q, q) = w_half(d, mod(p, 2 * d) * q % (2 * d) * (q + spec.rho()));
  return m;
}

// d x d matrix of a single-register generator.
Matrix local_matrix(const DimensionSpec& spec, const Gate& g) {
  const std::int64_t d = spec.d();
  switch (g.kind) {
    case GateKind::Z:
      return clock_matrix(d, g.coord_param.residue());
    case GateKind::X:
      return shift_matrix(d, g.coord_param.residue());
    case GateKind::Y: {
      const std::int64_t p = g.coord_param.residue();
      return w_half(d, p * (p + spec.rho())) * clock_matrix(d, p) * shift_matrix(d, p);
    }
    case GateKind::F:
      return fourier_matrix(d);
    case GateKind::Finv:
      return fourier_matrix(d).adjoint();
    case GateKind::P:
      return phase_gate_matrix(spec, g.phase_param.residue());
    case GateKind::Sq: {
      Matrix m = Matrix::Zero(d, d);
      for (std::int64_t q = 0; q < d; ++q) m(mod(g.coord_param.residue() * q, d), q) = 1.0;
      return m;
    }
    default:
      throw InvalidInput("not a single-register gate");
  }
}

}  // namespace

std::string to_string(BasisKind k) {
  switch (k) {
    case BasisKind::Computational:
      return "computational";
    case BasisKind::Fourier:
      return "fourier";
    case BasisKind::Phase:
      return "phase";
  }
  return "?";
}

double distance_up_to_phase(const Matrix& a, const Matrix& b) {
  const Scalar inner = (a.conjugate().cwiseProduct(b)).sum();
  const Scalar phase = std::abs(inner) > 0 ? inner / std::abs(inner) : Scalar(1.0);
  return max_abs(phase * a - b);
}

std::size_t hilbert_dimension(const DimensionSpec& spec, std::size_t n) {
  const auto d = static_cast<std::size_t>(require_qudit(spec));
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dim *= d;
    if (dim > kMaxDimension) {
      throw TooLarge("d^n exceeds the dense oracle limit of " + std::to_string(kMaxDimension));
    }
  }
  return dim;
}

Matrix fourier_matrix(std::int64_t d) {
  Matrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::int64_t r = 0; r < d; ++r) {
    for (std::int64_t c = 0; c < d; ++c) f(r, c) = norm * w_pow(d, r * c);
  }
  return f;
}

StateVector basis_state(const DimensionSpec& spec, BasisKind kind, const Coord& q) {
  const std::int64_t d = require_qudit(spec);
  require_in(spec, q);
  Vector v = Vector::Zero(d);
  v(q.residue()) = 1.0;
  if (kind != BasisKind::Computational) v = fourier_matrix(d) * v;
  if (kind == BasisKind::Phase) v = phase_gate_matrix(spec, 1) * v;
  return {spec, 1, v};
}

void apply_gate(const DimensionSpec& spec, std::size_t n, const Gate& g, Matrix& m) {
  const std::int64_t d = require_qudit(spec);
  validate_gate(spec, n, g);
  const std::size_t dim = hilbert_dimension(spec, n);
  if (static_cast<std::size_t>(m.rows()) != dim) throw SpecMismatch("matrix row count does not match d^n");
  const auto ud = static_cast<std::size_t>(d);

  if (!g.is_two_register()) {
    const Matrix local = local_matrix(spec, g);
    const std::size_t stride = stride_of(d, n, g.targets[0]);
    const std::size_t block = stride * ud;
    Matrix rows(d, m.cols());
    for (std::size_t hi = 0; hi < dim; hi += block) {
      for (std::size_t lo = 0; lo < stride; ++lo) {
        for (std::size_t k = 0; k < ud; ++k) rows.row(k) = m.row(hi + k * stride + lo);
        rows = (local * rows).eval();
        for (std::size_t k = 0; k < ud; ++k) m.row(hi + k * stride + lo) = rows.row(k);
      }
    }
    return;
  }

  // Two-register generators are monomial: |k> -> phase(k) |dest(k)>.
  const std::size_t sa = stride_of(d, n, g.targets[0]);
  const std::size_t sb = stride_of(d, n, g.targets[1]);
  Matrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < dim; ++k) {
    const std::int64_t qa = digit(k, d, sa);
    const std::int64_t qb = digit(k, d, sb);
    std::size_t dest = k;
    Scalar phase = 1.0;
    switch (g.kind) {
      case GateKind::CZ:
        phase = w_pow(d, qa * qb);
        break;
      case GateKind::Sum:
        dest = k - static_cast<std::size_t>(qb) * sb + static_cast<std::size_t>(mod(qa + qb, d)) * sb;
        break;
      case GateKind::Swap:
        dest = k - static_cast<std::size_t>(qa) * sa - static_cast<std::size_t>(qb) * sb +
               static_cast<std::size_t>(qb) * sa + static_cast<std::size_t>(qa) * sb;
        break;
      default:
        break;
    }
    out.row(dest) = phase * m.row(k);
  }
  m = std::move(out);
}

Matrix circuit_unitary(const CliffordCircuit& circuit) {
  const std::size_t dim = hilbert_dimension(circuit.spec(), circuit.n());
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : circuit.gates()) apply_gate(circuit.spec(), circuit.n(), g, u);
  return u;
}

Matrix conjugate_dense(const CliffordCircuit& circuit, const Matrix& m) {
  Matrix r = m;
  for (const auto& g : circuit.gates()) {
    apply_gate(circuit.spec(), circuit.n(), g, r);
    r = r.adjoint().eval();
    apply_gate(circuit.spec(), circuit.n(), g, r);
    r = r.adjoint().eval();
  }
  return r;
}

DenseOperator gate_matrix(const DimensionSpec& spec, std::size_t n, const Gate& g) {
  CliffordCircuit c(spec, n);
  c.append(g);
  return {spec, n, circuit_unitary(c)};
}

DenseOperator gate_matrix(const DimensionSpec& spec, const Gate& g) {
  return gate_matrix(spec, g.is_two_register() ? 2 : 1, g);
}

DenseOperator gate_matrix(const DimensionSpec& spec, const Rotation& r) {
  const std::int64_t d = require_qudit(spec);
  if (static_cast<std::int64_t>(r.theta.size()) != d) throw InvalidInput("rotation needs d phase angles");
  if (std::abs(r.theta[0]) > 1e-12) throw InvalidInput("rotation phases must satisfy theta(0) = 0");
  Matrix m = Matrix::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(q, q) = std::polar(1.0, r.theta[q]);
  return {spec, 1, m};
}

DenseOperator gate_matrix(const DimensionSpec& spec, const CubicPhase& g) {
  const std::int64_t d = require_qudit(spec);
  require_in(spec, g.q_prime);
  if (g.c == 0.0) throw InvalidInput("cubic phase constant must be nonzero");
  Matrix m = Matrix::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) {
    const double cube = static_cast<double>(q) * static_cast<double>(q) * static_cast<double>(q);
    const double e = cube * static_cast<double>(g.q_prime.residue()) / g.c;
    m(q, q) = std::polar(1.0, 2.0 * kPi * std::fmod(e, static_cast<double>(d)) / static_cast<double>(d));
  }
  return {spec, 1, m};
}

DenseOperator gate_matrix(const DimensionSpec& spec, const Displacement& g) {
  const std::int64_t d = require_qudit(spec);
  Scalar phase;
  if (d % 2 == 1) {
    const std::int64_t half_inv = (d + 1) / 2;  // 2^{-1} mod d
    phase = w_pow(d, -mod(half_inv * mod(g.q * g.q_prime, d), d));
  } else {
    phase = w_half(d, -mod(g.q * g.q_prime, 2 * d));
  }
  Matrix m = phase * clock_matrix(d, mod(g.q_prime, d)) * shift_matrix(d, mod(g.q, d));
  return {spec, 1, m};
}

DenseOperator gate_matrix(const DimensionSpec& spec, Position) {
  const std::int64_t d = require_qudit(spec);
  Matrix m = Matrix::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(q, q) = static_cast<double>(q);
  return {spec, 1, m};
}

DenseOperator gate_matrix(const DimensionSpec& spec, Momentum) {
  const std::int64_t d = require_qudit(spec);
  const Matrix f = fourier_matrix(d);
  return {spec, 1, f * gate_matrix(spec, Position{}).m * f.adjoint()};
}

Matrix densify(const PauliElement& p) {
  const auto& spec = p.spec();
  const std::int64_t d = require_qudit(spec);
  const std::size_t n = p.n();
  const std::size_t dim = hilbert_dimension(spec, n);
  Matrix m = Matrix::Zero(dim, dim);
  const Scalar global = omega_pow(spec, p.xi(), true);
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t dest = 0;
    std::int64_t exponent = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t q = digit(k, d, stride_of(d, n, i));
      exponent += p.z(i).residue() * q;
      dest = dest * static_cast<std::size_t>(d) + static_cast<std::size_t>(mod(q + p.x(i).residue(), d));
    }
    m(dest, k) = global * w_pow(d, mod(exponent, d));
  }
  return m;
}

Scalar overlap(const StateVector& a, const StateVector& b) {
  if (!(a.spec == b.spec) || a.n != b.n) throw SpecMismatch("overlap of states from different spaces");
  return a.v.dot(b.v);
}

Scalar overlap_closed_form(const DimensionSpec& spec, BasisKind a, BasisKind b, const Coord& q,
                           const Coord& q_prime) {
  const std::int64_t d = require_qudit(spec);
  require_in(spec, q);
  require_in(spec, q_prime);
  if (a == b) return q == q_prime ? 1.0 : 0.0;
  if (static_cast<int>(a) > static_cast<int>(b)) return std::conj(overlap_closed_form(spec, b, a, q_prime, q));

  const std::int64_t x = q.residue();
  const std::int64_t y = q_prime.residue();
  const std::int64_t rho = spec.rho();
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(d));
  const Scalar base = w_pow(d, x * y) * inv_sqrt;
  if (a == BasisKind::Computational && b == BasisKind::Fourier) return base;
  if (a == BasisKind::Computational) return base * w_half(d, x * (x + rho));
  // <+_q | x_q'>, with the w^{(d - rho)/8} Gauss-sum phase.
  const Scalar gauss = std::polar(1.0, 2.0 * kPi * static_cast<double>(d - rho) / (8.0 * static_cast<double>(d)));
  return base * w_half(d, -x * (x - rho)) * w_half(d, -y * (y + rho)) * gauss;
}

MubResult mub_check(const DimensionSpec& spec, const std::vector<BasisKind>& kinds) {
  const std::int64_t d = require_qudit(spec);
  if (kinds.size() < 2) throw InvalidInput("mutual unbiasedness needs at least two bases");
  if (std::set<BasisKind>(kinds.begin(), kinds.end()).size() != kinds.size()) {
    throw InvalidInput("a basis is not unbiased with itself");
  }
  std::vector<std::vector<StateVector>> bases;
  for (auto k : kinds) {
    auto& basis = bases.emplace_back();
    for (std::int64_t q = 0; q < d; ++q) basis.push_back(basis_state(spec, k, Coord::of(spec, q)));
  }
  double k_d = -1.0;
  double dev = 0.0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      for (const auto& a : bases[i]) {
        for (const auto& b : bases[j]) {
          const double v = std::norm(overlap(a, b));
          if (k_d < 0) k_d = v;
          dev = std::max(dev, std::abs(v - k_d));
        }
      }
    }
  }
  return {k_d, dev <= kEntryTolerance && k_d > 0, dev};
}

GaussSum gauss_sum(std::int64_t a, std::int64_t b) {
  if (a <= 0) throw InvalidInput("Gauss sum needs a > 0");
  if (mod(a + b, 2) != 0) throw InvalidInput("Gauss sum needs a + b even");
  Scalar brute = 0.0;
  for (std::int64_t k = 0; k < a; ++k) {
    const std::int64_t e = mod(k * k + b * k, 2 * a);
    brute += std::polar(1.0, kPi * static_cast<double>(e) / static_cast<double>(a));
  }
  brute /= static_cast<double>(a);
  const std::int64_t b2 = mod(b * b, 8 * a);
  const Scalar closed = std::polar(1.0 / std::sqrt(static_cast<double>(a)),
                                   kPi / 4.0 - kPi * static_cast<double>(b2) / (4.0 * static_cast<double>(a)));
  return {brute, closed};
}

bool EigenrelationReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.pass; });
}

EigenrelationReport eigenrelation_suite(const DimensionSpec& spec) {
  const std::int64_t d = require_qudit(spec);
  const std::int64_t rho = spec.rho();

  struct Relation {
    std::string name;
    GateKind gate;
    BasisKind basis;
    // prediction: (phase exponent in halves of w, output label) for (q', q).
    std::function<std::pair<std::int64_t, std::int64_t>(std::int64_t, std::int64_t)> predict;
  };
  const std::vector<Relation> relations = {
      {"X.computational", GateKind::X, BasisKind::Computational,
       [](auto qp, auto q) { return std::pair{std::int64_t{0}, q + qp}; }},
      {"Y.computational", GateKind::Y, BasisKind::Computational,
       [=](auto qp, auto q) { return std::pair{qp * (3 * qp + 2 * q + rho), q + qp}; }},
      {"Z.computational", GateKind::Z, BasisKind::Computational,
       [](auto qp, auto q) { return std::pair{2 * q * qp, q}; }},
      {"X.fourier", GateKind::X, BasisKind::Fourier, [](auto qp, auto q) { return std::pair{-2 * q * qp, q}; }},
      {"Y.fourier", GateKind::Y, BasisKind::Fourier,
       [=](auto qp, auto q) { return std::pair{qp * (qp - 2 * q + rho), q + qp}; }},
      {"Z.fourier", GateKind::Z, BasisKind::Fourier,
       [](auto qp, auto q) { return std::pair{std::int64_t{0}, q + qp}; }},
      {"X.phase", GateKind::X, BasisKind::Phase,
       [=](auto qp, auto q) { return std::pair{qp * (qp - 2 * q - rho), q - qp}; }},
      {"Z.phase", GateKind::Z, BasisKind::Phase, [](auto qp, auto q) { return std::pair{std::int64_t{0}, q + qp}; }},
      {"Y.phase", GateKind::Y, BasisKind::Phase, [](auto qp, auto q) { return std::pair{-2 * q * qp, q}; }},
  };
  const Relation derived{"Y.phase.derived", GateKind::Y, BasisKind::Phase,
                         [](auto qp, auto q) { return std::pair{2 * qp * qp - 2 * q * qp, q}; }};

  auto evaluate = [&](const Relation& r) {
    double err = 0.0;
    for (std::int64_t qp = 0; qp < d; ++qp) {
      Gate g{r.gate, {0, 0}, Coord::of(spec, qp), {}};
      const Matrix u = local_matrix(spec, g);
      for (std::int64_t q = 0; q < d; ++q) {
        const auto [e, label] = r.predict(qp, q);
        const Vector lhs = u * basis_state(spec, r.basis, Coord::of(spec, q)).v;
        const Vector rhs = w_half(d, e) * basis_state(spec, r.basis, Coord::of(spec, label)).v;
        err = std::max(err, max_abs(lhs - rhs));
      }
    }
    return RelationResult{r.name, err, err <= kEntryTolerance};
  };

  EigenrelationReport report;
  for (const auto& r : relations) report.relations.push_back(evaluate(r));
  report.y_phase_derived = evaluate(derived);
  return report;
}

double verify_conjugation(const CliffordCircuit& circuit, const PauliElement& p) {
  hilbert_dimension(circuit.spec(), circuit.n());
  const Matrix lhs = conjugate_dense(circuit, densify(p));
  const Matrix rhs = densify(conjugate(circuit, p));
  return max_abs(lhs - rhs);
}

bool is_clifford_witness(const DenseOperator& g) {
  const std::int64_t d = require_qudit(g.spec);
  const std::size_t dim = hilbert_dimension(g.spec, g.n);
  if (static_cast<std::size_t>(g.m.rows()) != dim || g.m.cols() != g.m.rows()) {
    throw InvalidInput("operator size does not match d^n");
  }
  if (d > 16 || dim > kMaxWitnessDimension) throw TooLarge("witness check is limited to d <= 16 and d^n <= 256");
  constexpr double tol = 1e-8;
  const std::size_t n = g.n;

  // All unphased X(a)Z(b) on n registers.
  std::vector<Matrix> candidates;
  std::vector<std::int64_t> digits(2 * n, 0);
  for (;;) {
    std::vector<Coord> q;
    for (auto v : digits) q.push_back(Coord::of(g.spec, v));
    candidates.push_back(densify(PauliElement(g.spec, PhaseExp::zero(g.spec), q)));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == d) digits[k++] = 0;
    if (k == digits.size()) break;
  }

  auto is_pauli_form = [&](const Matrix& a) {
    for (const auto& w : candidates) {
      const Scalar c = (w.conjugate().cwiseProduct(a)).sum() / static_cast<double>(dim);
      if (std::abs(std::abs(c) - 1.0) > tol) continue;
      if (max_abs(a - c * w) > tol) continue;
      // c must be w^{xi/2} for an integer xi.
      const double steps = std::arg(c) * static_cast<double>(d) / kPi;
      if (std::abs(steps - std::round(steps)) <= tol * static_cast<double>(d)) return true;
    }
    return false;
  };
  const Matrix& u = g.m;
  for (std::size_t j = 0; j < 2 * n; ++j) {
    const Matrix p = densify(elementary_generator(g.spec, n, j));
    if (!is_pauli_form(u * p * u.adjoint())) return false;
  }
  return true;
}

bool generator_identity_dense(const DimensionSpec& spec) {
  const Matrix lhs = circuit_unitary(generator_identity_circuit(spec));
  const Matrix z = clock_matrix(spec.d(), 1);
  return distance_up_to_phase(lhs, z) <= kEntryTolerance;
}

}  // namespace gqv::dense
