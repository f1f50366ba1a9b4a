#pragma once

// Seeded random generators for property tests and verification suites.
// Integers are drawn as rng() % m and reals from the top 53 bits so results
// do not depend on the standard library's distribution implementations.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gqv/clifford.hpp"
#include "gqv/dense.hpp"

namespace gqv::sampling {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t m) { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m)); }

/// Uniform in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Coord random_coord(const DimensionSpec& spec, Rng& rng) {
  return spec.is_qudit() ? Coord::of(spec, uniform_int(rng, spec.d())) : Coord::real(uniform_real(rng, -2.0, 2.0));
}

inline PhaseExp random_phase(const DimensionSpec& spec, Rng& rng) {
  return spec.is_qudit() ? PhaseExp::of(spec, uniform_int(rng, 2 * spec.d()))
                         : PhaseExp::real(uniform_real(rng, -2.0, 2.0));
}

inline Coord random_unit(const DimensionSpec& spec, Rng& rng) {
  for (;;) {
    const Coord c = spec.is_qudit() ? random_coord(spec, rng) : Coord::real(uniform_real(rng, 0.25, 2.0));
    if (is_unit(spec, c)) {
      if (spec.is_continuous() && uniform_int(rng, 2) == 1) return -c;
      return c;
    }
  }
}

inline PauliElement random_pauli(const DimensionSpec& spec, std::size_t n, Rng& rng) {
  std::vector<Coord> q;
  q.reserve(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) q.push_back(random_coord(spec, rng));
  return PauliElement(spec, random_phase(spec, rng), std::move(q));
}

/// Any gate kind, two-register kinds only when n >= 2.
inline Gate random_gate(const DimensionSpec& spec, std::size_t n, Rng& rng) {
  const int kinds = n >= 2 ? 10 : 7;
  const auto kind = static_cast<GateKind>(uniform_int(rng, kinds));
  const auto t = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(n)));
  switch (kind) {
    case GateKind::Z:
      return Gate::z(random_coord(spec, rng), t);
    case GateKind::X:
      return Gate::x(random_coord(spec, rng), t);
    case GateKind::Y:
      return Gate::y(random_coord(spec, rng), t);
    case GateKind::F:
      return Gate::f(t);
    case GateKind::Finv:
      return Gate::finv(t);
    case GateKind::P:
      return Gate::p(random_phase(spec, rng), t);
    case GateKind::Sq:
      return Gate::sq(random_unit(spec, rng), t);
    default: {
      auto u = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(n - 1)));
      if (u >= t) ++u;
      if (kind == GateKind::CZ) return Gate::cz(t, u);
      if (kind == GateKind::Sum) return Gate::sum(t, u);
      return Gate::swap(t, u);
    }
  }
}

inline CliffordCircuit random_circuit(const DimensionSpec& spec, std::size_t n, std::size_t length, Rng& rng) {
  CliffordCircuit c(spec, n);
  for (std::size_t k = 0; k < length; ++k) c.append(random_gate(spec, n, rng));
  return c;
}

/// Tableau of a random circuit of length 8 n^2 + 8, which mixes well at desk-scale n.
inline Tableau random_tableau(const DimensionSpec& spec, std::size_t n, Rng& rng) {
  return tableau_from_circuit(random_circuit(spec, n, 8 * n * n + 8, rng));
}

/// Standard normal via Box-Muller.
inline double normal(Rng& rng) {
  const double u = uniform_real(rng, 0.0, 1.0);
  const double v = uniform_real(rng, 0.0, 1.0);
  return std::sqrt(-2.0 * std::log1p(-u)) * std::cos(2.0 * 3.14159265358979323846 * v);
}

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian matrix.
inline dense::Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  dense::Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = dense::Scalar(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<dense::Matrix> qr(g);
  dense::Matrix q = qr.householderQ();
  const dense::Matrix rr = qr.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const dense::Scalar d = rr(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

}  // namespace gqv::sampling
