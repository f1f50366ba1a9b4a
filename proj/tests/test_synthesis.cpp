#include <gtest/gtest.h>

#include "gqv/sampling.hpp"

using namespace gqv;

namespace {

bool in_generator_set(const Gate& g) {
  return g.kind == GateKind::CZ || g.kind == GateKind::F || g.kind == GateKind::P || g.kind == GateKind::Z;
}

void expect_round_trip(const Tableau& t) {
  const auto c = synthesize(t);
  EXPECT_EQ(tableau_from_circuit(c), t);
  EXPECT_LE(c.size(), kSynthesisGateConstant * t.n() * t.n());
  for (const auto& g : c.gates()) EXPECT_TRUE(in_generator_set(g));
}

}  // namespace

TEST(Synthesize, IdentityIsEmpty) {
  for (std::int64_t d : {2, 3, 5, 7}) EXPECT_EQ(synthesize(Tableau::identity(DimensionSpec::qudit(d), 3)).size(), 0u);
  EXPECT_EQ(synthesize(Tableau::identity(DimensionSpec::continuous(), 2)).size(), 0u);
}

TEST(Synthesize, SingleGates) {
  const auto q2 = DimensionSpec::qudit(2);
  CliffordCircuit h(q2, 1);
  h.append(Gate::f(0));
  const auto c = synthesize(tableau_from_circuit(h));
  EXPECT_EQ(tableau_from_circuit(c), tableau_from_circuit(h));
  EXPECT_TRUE(std::any_of(c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.kind == GateKind::F; }));

  sampling::Rng rng(1);
  for (std::int64_t d : {2, 3, 5, 7, 11}) {
    const auto s = DimensionSpec::qudit(d);
    for (int k = 0; k < 50; ++k) {
      CliffordCircuit one(s, 2);
      one.append(sampling::random_gate(s, 2, rng));
      expect_round_trip(tableau_from_circuit(one));
    }
  }
}

TEST(Synthesize, RandomTableauxPrime) {
  sampling::Rng rng(2);
  for (std::int64_t d : {2, 3, 5, 7, 13}) {
    const auto s = DimensionSpec::qudit(d);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
      for (int k = 0; k < 25; ++k) expect_round_trip(sampling::random_tableau(s, n, rng));
    }
  }
}

TEST(Synthesize, ThirtyGateCircuit) {
  sampling::Rng rng(30);
  const auto s = DimensionSpec::qudit(3);
  expect_round_trip(tableau_from_circuit(sampling::random_circuit(s, 2, 30, rng)));
}

TEST(Synthesize, Continuous) {
  sampling::Rng rng(3);
  const auto cv = DimensionSpec::continuous();
  for (std::size_t n : {1u, 2u, 3u}) {
    for (int k = 0; k < 25; ++k) {
      const auto t = tableau_from_circuit(sampling::random_circuit(cv, n, 6 * n, rng));
      const auto c = synthesize(t);
      EXPECT_EQ(tableau_from_circuit(c), t);
      EXPECT_LE(c.size(), kSynthesisGateConstant * n * n);
    }
  }
}

TEST(Synthesize, Rejections) {
  EXPECT_THROW(synthesize(Tableau::identity(DimensionSpec::qudit(6), 1)), NonPrimeDimension);
  EXPECT_THROW(synthesize(Tableau::identity(DimensionSpec::qudit(4), 1)), UnsupportedDimension);
  const auto s = DimensionSpec::qudit(3);
  auto images = Tableau::identity(s, 2).images();
  images[2] = images[0];
  EXPECT_THROW(synthesize(Tableau(s, 2, images)), NonSymplectic);
  // Symplectic coordinates need not be the issue: X -> 2X, Z -> Z breaks [X, Z].
  images = Tableau::identity(s, 1).images();
  images[0].set_x(0, Coord::of(s, 2));
  EXPECT_THROW(synthesize(Tableau(s, 1, images)), NonSymplectic);
}

TEST(Synthesize, Deterministic) {
  sampling::Rng a(77), b(77);
  const auto s = DimensionSpec::qudit(5);
  EXPECT_EQ(synthesize(sampling::random_tableau(s, 3, a)), synthesize(sampling::random_tableau(s, 3, b)));
}
