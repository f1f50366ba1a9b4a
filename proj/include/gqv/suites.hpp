#pragma once

// Seeded verification suites behind `gqv verify`. Each returns a JSON report
// with "pass", "max_error" and, on failure, the first counterexample.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "gqv/ring.hpp"

namespace gqv::suites {

struct Options {
  std::vector<DimensionSpec> dims;
  std::size_t n = 2;
  std::size_t cases = 200;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::int64_t a_max = 32;
};

/// Associativity, inverses, delta-convention invariance and, for small
/// qudit spaces, agreement of compose with dense products.
nlohmann::json pauli(const Options& o);
/// Random circuits of length <= 20 and random Paulis against the dense oracle.
nlohmann::json clifford(const Options& o);
/// Unbiasedness and overlap closed forms of the three standard bases.
nlohmann::json mub(const Options& o);
/// Brute Gauss sums against the closed form for a <= a_max, |b| <= 2a.
nlohmann::json gauss(const Options& o);
/// The nine single-register X/Y/Z eigenrelations, exhaustively.
nlohmann::json eigen(const Options& o);

}  // namespace gqv::suites
