#pragma once

// Naive reference matrices built straight from the operator definitions with
// Kronecker products. Deliberately shares no code with gqv::dense.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "gqv/clifford.hpp"

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline C root(std::int64_t d, double k) { return std::exp(C(0, 2.0 * std::numbers::pi * k / static_cast<double>(d))); }

inline std::int64_t md(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

inline M X(std::int64_t d, std::int64_t a) {
  M m = M::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(md(q + a, d), q) = 1;
  return m;
}

inline M Z(std::int64_t d, std::int64_t b) {
  M m = M::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(q, q) = root(d, static_cast<double>(b * q));
  return m;
}

inline int rho(std::int64_t d) { return static_cast<int>(d % 2); }

inline M Y(std::int64_t d, std::int64_t q) { return root(d, q * (q + rho(d)) / 2.0) * Z(d, q) * X(d, q); }

inline M F(std::int64_t d) {
  M m(d, d);
  for (std::int64_t r = 0; r < d; ++r)
    for (std::int64_t c = 0; c < d; ++c) m(r, c) = root(d, static_cast<double>(r * c)) / std::sqrt(double(d));
  return m;
}

inline M P(std::int64_t d, std::int64_t p) {
  M m = M::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(q, q) = root(d, p * q * (q + rho(d)) / 2.0);
  return m;
}

inline M S(std::int64_t d, std::int64_t s) {
  M m = M::Zero(d, d);
  for (std::int64_t q = 0; q < d; ++q) m(md(s * q, d), q) = 1;
  return m;
}

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// local acting on register t of n (register 0 leftmost in the Kronecker product).
inline M embed(std::int64_t d, std::size_t n, std::size_t t, const M& local) {
  M out = M::Identity(1, 1);
  for (std::size_t i = 0; i < n; ++i) out = kron(out, i == t ? local : M::Identity(d, d));
  return out;
}

inline std::vector<std::int64_t> digits(std::int64_t d, std::size_t n, std::int64_t k) {
  std::vector<std::int64_t> q(n);
  for (std::size_t i = n; i-- > 0;) {
    q[i] = k % d;
    k /= d;
  }
  return q;
}

inline std::int64_t index(std::int64_t d, const std::vector<std::int64_t>& q) {
  std::int64_t k = 0;
  for (auto v : q) k = k * d + v;
  return k;
}

inline std::int64_t power(std::int64_t d, std::size_t n) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= d;
  return r;
}

inline M gate(std::int64_t d, std::size_t n, const gqv::Gate& g) {
  using gqv::GateKind;
  const auto t = g.targets[0];
  switch (g.kind) {
    case GateKind::Z:
      return embed(d, n, t, Z(d, g.coord_param.residue()));
    case GateKind::X:
      return embed(d, n, t, X(d, g.coord_param.residue()));
    case GateKind::Y:
      return embed(d, n, t, Y(d, g.coord_param.residue()));
    case GateKind::F:
      return embed(d, n, t, F(d));
    case GateKind::Finv:
      return embed(d, n, t, F(d).adjoint());
    case GateKind::P:
      return embed(d, n, t, P(d, g.phase_param.residue()));
    case GateKind::Sq:
      return embed(d, n, t, S(d, g.coord_param.residue()));
    default:
      break;
  }
  const std::int64_t dim = power(d, n);
  M m = M::Zero(dim, dim);
  const auto a = g.targets[0], b = g.targets[1];
  for (std::int64_t k = 0; k < dim; ++k) {
    auto q = digits(d, n, k);
    C phase = 1;
    if (g.kind == GateKind::CZ) phase = root(d, static_cast<double>(q[a] * q[b]));
    if (g.kind == GateKind::Sum) q[b] = md(q[b] + q[a], d);
    if (g.kind == GateKind::Swap) std::swap(q[a], q[b]);
    m(index(d, q), k) = phase;
  }
  return m;
}

inline M circuit(const gqv::CliffordCircuit& c) {
  const std::int64_t d = c.spec().d();
  M u = M::Identity(power(d, c.n()), power(d, c.n()));
  for (const auto& g : c.gates()) u = gate(d, c.n(), g) * u;
  return u;
}

inline M pauli(const gqv::PauliElement& p) {
  const std::int64_t d = p.spec().d();
  M out = M::Identity(1, 1);
  for (std::size_t i = 0; i < p.n(); ++i) out = kron(out, X(d, p.x(i).residue()) * Z(d, p.z(i).residue()));
  return root(d, p.xi().residue() / 2.0) * out;
}

inline double maxabs(const M& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracle
