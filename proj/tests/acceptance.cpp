// Acceptance criteria AC1..AC9. Each prints one PASS/FAIL line, followed by
// indented diagnostic lines. `acceptance --criterion N` runs a single one.
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gqv/approx.hpp"
#include "gqv/dense.hpp"
#include "gqv/sampling.hpp"
#include "oracle.hpp"

using namespace gqv;
using dense::BasisKind;
using dense::Matrix;
using dense::Scalar;

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned tolerances and budgets.
constexpr double kAc1Tol = 1e-9;
constexpr double kAc1Seconds = 120;
constexpr double kAc2Tol = 1e-10;
constexpr double kAc2Seconds = 30;
constexpr double kAc3Tol = 1e-10;
constexpr double kAc4Tol = 1e-12;
constexpr double kAc5Tol = 1e-12;
constexpr double kAc6CvTol = 1e-9;
constexpr std::size_t kAc6Triples = 10000;
constexpr double kAc7Seconds = 60;
constexpr std::size_t kAc7Tableaux = 100;
constexpr double kAc9Eps = 0.01;
constexpr std::int64_t kAc9NMax = 100000;
constexpr double kAc9EulerTol = 1e-9;
constexpr std::size_t kAc9Unitaries = 1000;

struct Outcome {
  bool pass;
  std::string summary;
  std::vector<std::string> notes;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome ac1() {
  const auto t0 = std::chrono::steady_clock::now();
  sampling::Rng rng(20240901);
  double worst = 0.0, worst_naive = 0.0;
  std::size_t cases = 0;
  for (std::int64_t d : {2, 3, 4, 5}) {
    const auto s = DimensionSpec::qudit(d);
    for (std::size_t n : {1u, 2u, 3u}) {
      for (int k = 0; k < 500; ++k) {
        const auto len = static_cast<std::size_t>(sampling::uniform_int(rng, 21));
        const auto c = sampling::random_circuit(s, n, len, rng);
        for (int j = 0; j < 2; ++j) {
          const auto p = sampling::random_pauli(s, n, rng);
          worst = std::max(worst, dense::verify_conjugation(c, p));
          ++cases;
          if (k < 50) {
            const auto u = oracle::circuit(c);
            worst_naive =
                std::max(worst_naive, oracle::maxabs(u * oracle::pauli(p) * u.adjoint() - oracle::pauli(conjugate(c, p))));
          }
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = worst <= kAc1Tol && worst_naive <= kAc1Tol && secs <= kAc1Seconds;
  return {pass,
          fmt("oracle equivalence: %zu cases, max_err=%.3g (tol %.0e), kron-oracle max_err=%.3g, %.2fs (budget %.0fs)",
              cases, worst, kAc1Tol, worst_naive, secs, kAc1Seconds),
          {}};
}

Outcome ac2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  double worst_derived = 0.0;
  std::vector<std::string> notes;
  std::vector<std::string> failing;
  for (std::int64_t d = 2; d <= 16; ++d) {
    const auto r = dense::eigenrelation_suite(DimensionSpec::qudit(d));
    for (const auto& rel : r.relations) {
      const bool ok = rel.max_error <= kAc2Tol;
      all = all && ok;
      if (!ok && failing.size() < 4) failing.push_back(fmt("d=%lld %s err=%.3g", (long long)d, rel.name.c_str(), rel.max_error));
    }
    worst_derived = std::max(worst_derived, r.y_phase_derived.max_error);
  }
  const double secs = seconds_since(t0);
  for (const auto& f : failing) notes.push_back("failing: " + f);
  notes.push_back(fmt("Y(q')|x_q> = w^{q'^2 - qq'}|x_q> (implied by the Y definition) max_err=%.3g", worst_derived));
  return {all && secs <= kAc2Seconds,
          fmt("eigenrelations, nine relations for d=2..16 at %.0e per amplitude, %.2fs (budget %.0fs)", kAc2Tol, secs,
              kAc2Seconds),
          notes};
}

Outcome ac3() {
  double comcon = 0, compha = 0, conpha = 0, compha_corrected = 0, kd = 0;
  for (std::int64_t d = 2; d <= 16; ++d) {
    const auto s = DimensionSpec::qudit(d);
    const double rho = static_cast<double>(d % 2);
    const double sq = std::sqrt(static_cast<double>(d));
    auto w = [&](double e) { return std::exp(Scalar(0, 2 * kPi * e / static_cast<double>(d))); };
    auto st = [&](BasisKind k, std::int64_t q) { return dense::basis_state(s, k, Coord::of(s, q)); };
    for (std::int64_t qi = 0; qi < d; ++qi) {
      for (std::int64_t pi = 0; pi < d; ++pi) {
        const double q = static_cast<double>(qi), qp = static_cast<double>(pi);
        const Scalar cf = dense::overlap(st(BasisKind::Computational, qi), st(BasisKind::Fourier, pi));
        const Scalar cp = dense::overlap(st(BasisKind::Computational, qi), st(BasisKind::Phase, pi));
        const Scalar fp = dense::overlap(st(BasisKind::Fourier, qi), st(BasisKind::Phase, pi));
        comcon = std::max(comcon, std::abs(cf - w(q * qp) / sq));
        compha = std::max(compha, std::abs(cp - w(q * qp) / sq * w(-q * (q + rho) / 2)));
        compha_corrected = std::max(compha_corrected, std::abs(cp - w(q * qp) / sq * w(q * (q + rho) / 2)));
        conpha = std::max(conpha, std::abs(fp - w(q * qp) / sq * w(-q * (q - rho) / 2) * w(-qp * (qp + rho) / 2) *
                                                    w((static_cast<double>(d) - rho) / 8)));
        for (const Scalar o : {cf, cp, fp}) kd = std::max(kd, std::abs(std::norm(o) - 1.0 / static_cast<double>(d)));
      }
    }
  }
  const bool pass = comcon <= kAc3Tol && compha <= kAc3Tol && conpha <= kAc3Tol && kd <= kAc3Tol;
  return {pass,
          fmt("overlap closed forms d=2..16 tol %.0e: <q|+q'> err=%.3g, <q|xq'> err=%.3g, <+q|xq'> err=%.3g, "
              "||<a|b>|^2-1/d| err=%.3g",
              kAc3Tol, comcon, compha, conpha, kd),
          {fmt("<q|x_q'> with w^{+q(q+rho)/2} in place of w^{-q(q+rho)/2}: err=%.3g", compha_corrected)}};
}

Outcome ac4() {
  double worst = 0, worst_lib = 0;
  std::size_t count = 0;
  for (std::int64_t a = 1; a <= 32; ++a) {
    for (std::int64_t b = -2 * a; b <= 2 * a; ++b) {
      if ((a + b) % 2 != 0) continue;
      Scalar brute = 0;
      for (std::int64_t k = 0; k < a; ++k) brute += std::exp(Scalar(0, kPi * double(k * k + b * k) / double(a)));
      brute /= double(a);
      const Scalar closed = std::exp(Scalar(0, kPi / 4)) * std::exp(Scalar(0, -kPi * double(b * b) / (4.0 * a))) /
                            std::sqrt(double(a));
      const auto lib = dense::gauss_sum(a, b);
      worst = std::max(worst, std::abs(brute - closed));
      worst_lib = std::max({worst_lib, std::abs(lib.brute - brute), std::abs(lib.closed - closed)});
      ++count;
    }
  }
  return {worst <= kAc4Tol && worst_lib <= kAc4Tol,
          fmt("Gauss sums: %zu pairs a<=32 |b|<=2a, brute vs closed err=%.3g, library vs direct err=%.3g (tol %.0e)",
              count, worst, worst_lib, kAc4Tol),
          {}};
}

Outcome ac5() {
  double unit = 0, cyc = 0, par = 0;
  for (std::int64_t d = 2; d <= 64; ++d) {
    const Matrix f = dense::fourier_matrix(d);
    const Matrix f2 = f * f;
    unit = std::max(unit, dense::unitarity_error(f));
    cyc = std::max(cyc, dense::max_abs(f2 * f2 - Matrix::Identity(d, d)));
    par = std::max(par, dense::max_abs(f2 - oracle::S(d, d - 1)));
  }
  bool ident = true;
  std::string which;
  for (std::int64_t d : {2, 3, 5, 7, 9}) {
    const auto s = DimensionSpec::qudit(d);
    const bool ok = dense::generator_identity_dense(s) && check_generator_identity(s);
    ident = ident && ok;
    which += fmt(" d=%lld:%s", (long long)d, ok ? "ok" : "no");
  }
  return {unit <= kAc5Tol && cyc <= kAc5Tol && par <= kAc5Tol && ident,
          fmt("Fourier d=2..64: unitarity=%.3g F^4-I=%.3g F^2-parity=%.3g (tol %.0e); F^2P^{d-1}F^2P=Z:%s", unit, cyc,
              par, kAc5Tol, which.c_str()),
          {}};
}

Outcome ac6() {
  sampling::Rng rng(6);
  bool pass = true;
  std::string per;
  for (const auto& s : {DimensionSpec::qudit(2), DimensionSpec::qudit(3), DimensionSpec::qudit(4),
                        DimensionSpec::qudit(6), DimensionSpec::continuous()}) {
    std::size_t bad_assoc = 0, bad_delta = 0;
    double cv_err = 0;
    for (std::size_t k = 0; k < kAc6Triples; ++k) {
      const auto n = static_cast<std::size_t>(1 + sampling::uniform_int(rng, 3));
      const auto a = sampling::random_pauli(s, n, rng);
      const auto b = sampling::random_pauli(s, n, rng);
      const auto c = sampling::random_pauli(s, n, rng);
      const auto l = (a * b) * c, r = a * (b * c);
      if (s.is_qudit()) {
        if (!(l == r)) ++bad_assoc;
        const std::int64_t d = s.d();
        std::int64_t delta_d = 0, delta_2d = 0;
        for (std::size_t i = 0; i < n; ++i) {
          delta_d = (delta_d + a.z(i).residue() * b.x(i).residue()) % d;
          delta_2d = (delta_2d + a.z(i).residue() * b.x(i).residue()) % (2 * d);
        }
        const auto via_d = a.xi() + b.xi() + PhaseExp::of(s, 2 * delta_d);
        const auto via_2d = a.xi() + b.xi() + PhaseExp::of(s, 2 * delta_2d);
        if (!(via_d == via_2d && via_d == (a * b).xi())) ++bad_delta;
      } else {
        cv_err = std::max(cv_err, std::abs(l.xi().value() - r.xi().value()));
        for (std::size_t j = 0; j < 2 * n; ++j) cv_err = std::max(cv_err, std::abs(l.coords()[j].value() - r.coords()[j].value()));
      }
    }
    const bool ok = bad_assoc == 0 && bad_delta == 0 && cv_err <= kAc6CvTol;
    pass = pass && ok;
    per += s.is_qudit() ? fmt(" d=%s:%zu/%zu", s.to_string().c_str(), bad_assoc, bad_delta)
                        : fmt(" cv:err=%.3g", cv_err);
  }
  return {pass,
          fmt("Pauli group law, %zu triples per spec, n<=3 (assoc/delta failures):%s (cv tol %.0e)", kAc6Triples,
              per.c_str(), kAc6CvTol),
          {}};
}

Outcome ac7() {
  const auto t0 = std::chrono::steady_clock::now();
  sampling::Rng rng(7);
  std::size_t mismatches = 0, over = 0, total = 0;
  double max_ratio = 0;
  for (std::int64_t d : {2, 3, 5}) {
    const auto s = DimensionSpec::qudit(d);
    for (std::size_t n : {1u, 2u, 3u}) {
      for (std::size_t k = 0; k < kAc7Tableaux; ++k) {
        const auto t = sampling::random_tableau(s, n, rng);
        const auto c = synthesize(t);
        if (!(tableau_from_circuit(c) == t)) ++mismatches;
        if (c.size() > kSynthesisGateConstant * n * n) ++over;
        max_ratio = std::max(max_ratio, static_cast<double>(c.size()) / static_cast<double>(n * n));
        ++total;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && over == 0 && secs <= kAc7Seconds,
          fmt("synthesis round-trip: %zu tableaux, %zu mismatches, %zu over C*n^2 with C=%zu (max gates/n^2=%.1f), "
              "%.2fs (budget %.0fs)",
              total, mismatches, over, kSynthesisGateConstant, max_ratio, secs, kAc7Seconds),
          {}};
}

Outcome ac8() {
  bool pass = true;
  std::string per;
  for (std::int64_t d : {2, 3, 5}) {
    const auto s = DimensionSpec::qudit(d);
    std::vector<Gate> gates = {Gate::f(0), Gate::finv(0), Gate::cz(0, 1), Gate::sum(0, 1), Gate::sum(1, 0),
                               Gate::swap(0, 1)};
    for (std::int64_t p = 0; p < d; ++p) {
      gates.push_back(Gate::z(Coord::of(s, p), 0));
      gates.push_back(Gate::x(Coord::of(s, p), 0));
      gates.push_back(Gate::y(Coord::of(s, p), 0));
      if (is_unit(s, Coord::of(s, p))) gates.push_back(Gate::sq(Coord::of(s, p), 0));
    }
    for (std::int64_t p = 0; p < 2 * d; ++p) gates.push_back(Gate::p(PhaseExp::of(s, p), 0));
    std::size_t rejected = 0;
    for (const auto& g : gates) {
      if (!dense::is_clifford_witness(dense::gate_matrix(s, g))) ++rejected;
    }
    const double c = static_cast<double>(d * d * d);
    const bool cubic = dense::is_clifford_witness(dense::gate_matrix(s, dense::CubicPhase{Coord::one(s), c}));
    pass = pass && rejected == 0 && !cubic;
    per += fmt(" d=%lld: %zu/%zu generators accepted, D3(1,c=%lld) %s;", (long long)d, gates.size() - rejected,
               gates.size(), (long long)(d * d * d), cubic ? "accepted" : "rejected");
  }
  return {pass, "non-Clifford witness:" + per, {}};
}

Outcome ac9() {
  const approx::PhaseVector phi(DimensionSpec::qudit(2), {0.0, 1.0});
  const approx::PhaseVector target(DimensionSpec::qudit(2), {0.0, kPi / 4});
  const auto hit = approx::rotation_orbit_search(phi, target, kAc9Eps, kAc9NMax);
  sampling::Rng rng(9);
  double worst = 0;
  for (std::size_t k = 0; k < kAc9Unitaries; ++k) {
    const Matrix u = sampling::random_unitary(2, rng);
    worst = std::max(worst, dense::max_abs(approx::euler_reconstruct(approx::qubit_euler_decompose(u)) - u));
  }
  return {hit.has_value() && worst <= kAc9EulerTol,
          fmt("rotation orbit eps=%.2g: %s (N<=%lld); Euler reconstruction over %zu unitaries max_err=%.3g (tol %.0e)",
              kAc9Eps, hit ? fmt("N=%lld", (long long)*hit).c_str() : "not found", (long long)kAc9NMax, kAc9Unitaries,
              worst, kAc9EulerTol),
          {}};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9};
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
    return 2;
  }
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<int>(k) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what(), {}};
    }
    std::printf("AC%zu %s %s\n", k + 1, o.pass ? "PASS" : "FAIL", o.summary.c_str());
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
