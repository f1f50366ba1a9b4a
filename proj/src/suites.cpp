#include "gqv/suites.hpp"

#include <algorithm>
#include <cmath>

#include "gqv/dense.hpp"
#include "gqv/io.hpp"
#include "gqv/sampling.hpp"

namespace gqv::suites {
namespace {

using nlohmann::json;

// 0 when equal; for cv the largest coordinate/phase deviation; 1 for unequal qudit values.
double pauli_distance(const PauliElement& a, const PauliElement& b) {
  if (a.spec().is_qudit()) return a == b ? 0.0 : 1.0;
  double m = std::abs(a.xi().value() - b.xi().value());
  for (std::size_t k = 0; k < a.coords().size(); ++k) {
    m = std::max(m, std::abs(a.coords()[k].value() - b.coords()[k].value()));
  }
  return m;
}

// Tracks the max error and the first failing case.
struct Tally {
  explicit Tally(double t) : tol(t) {}

  double tol;
  double max_error = 0.0;
  std::size_t checked = 0;
  json counterexample;

  template <typename F>
  void add(double err, F&& describe) {
    ++checked;
    max_error = std::max(max_error, err);
    if (err > tol && counterexample.is_null()) counterexample = describe();
  }

  json finish(const char* name, json detail) const {
    json r = {{"suite", name}, {"pass", counterexample.is_null()}, {"max_error", max_error},
              {"checked", checked}, {"detail", std::move(detail)}};
    if (!counterexample.is_null()) r["counterexample"] = counterexample;
    return r;
  }
};

std::vector<std::int64_t> finite(const Options& o, const char* suite) {
  std::vector<std::int64_t> out;
  for (const auto& s : o.dims) {
    if (!s.is_qudit()) throw UnsupportedDimension(std::string(suite) + " suite needs finite dimensions");
    out.push_back(s.d());
  }
  return out;
}

}  // namespace

json pauli(const Options& o) {
  Tally t(o.tolerance);
  json detail = json::array();
  sampling::Rng rng(o.seed);
  for (const auto& spec : o.dims) {
    const double before = t.max_error;
    t.max_error = 0.0;
    for (std::size_t c = 0; c < o.cases; ++c) {
      const auto a = sampling::random_pauli(spec, o.n, rng);
      const auto b = sampling::random_pauli(spec, o.n, rng);
      const auto e = sampling::random_pauli(spec, o.n, rng);
      auto describe = [&](const char* law) {
        return json{{"law", law}, {"dim", spec.to_string()}, {"a", format_pauli_literal(a)},
                    {"b", format_pauli_literal(b)}, {"c", format_pauli_literal(e)}};
      };
      t.add(pauli_distance((a * b) * e, a * (b * e)), [&] { return describe("associativity"); });
      t.add(pauli_distance(a * pauli_inverse(a), PauliElement(spec, o.n)), [&] { return describe("inverse"); });

      if (spec.is_qudit()) {
        // 2 delta from delta reduced in Z(d) against delta accumulated in Z(2d).
        Coord small = Coord::zero(spec);
        PhaseExp wide = PhaseExp::zero(spec);
        for (std::size_t i = 0; i < o.n; ++i) {
          small += a.z(i) * b.x(i);
          wide += lift(spec, a.z(i)) * lift(spec, b.x(i));
        }
        t.add(2 * lift(spec, small) == 2 * wide ? 0.0 : 1.0, [&] { return describe("delta-convention"); });

        std::size_t dim = 1;
        for (std::size_t i = 0; i < o.n; ++i) dim *= static_cast<std::size_t>(spec.d());
        if (dim <= 64 && c < 200) {
          const double err = dense::max_abs(dense::densify(a * b) - dense::densify(a) * dense::densify(b));
          t.add(err, [&] { return describe("dense-product"); });
        }
      }
    }
    detail.push_back({{"dim", spec.to_string()}, {"max_error", t.max_error}});
    t.max_error = std::max(before, t.max_error);
  }
  return t.finish("pauli", detail);
}

json clifford(const Options& o) {
  Tally t(o.tolerance);
  json detail = json::array();
  sampling::Rng rng(o.seed);
  for (const auto d : finite(o, "clifford")) {
    const auto spec = DimensionSpec::qudit(d);
    double local = 0.0;
    for (std::size_t c = 0; c < o.cases; ++c) {
      const auto len = static_cast<std::size_t>(sampling::uniform_int(rng, 21));
      const auto circuit = sampling::random_circuit(spec, o.n, len, rng);
      const auto p = sampling::random_pauli(spec, o.n, rng);
      const double err = dense::verify_conjugation(circuit, p);
      local = std::max(local, err);
      t.add(err, [&] { return json{{"circuit", io::render_circuit(circuit)}, {"pauli", format_pauli_literal(p)}}; });
    }
    detail.push_back({{"dim", d}, {"max_error", local}});
  }
  return t.finish("clifford", detail);
}

json mub(const Options& o) {
  using dense::BasisKind;
  Tally t(o.tolerance);
  json detail = json::array();
  const std::vector<BasisKind> kinds = {BasisKind::Computational, BasisKind::Fourier, BasisKind::Phase};
  for (const auto d : finite(o, "mub")) {
    const auto spec = DimensionSpec::qudit(d);
    const auto r = dense::mub_check(spec, kinds);
    const double kd_err = std::max(r.max_deviation, std::abs(r.k_d - 1.0 / static_cast<double>(d)));
    t.add(kd_err, [&] { return json{{"dim", d}, {"k_d", r.k_d}}; });

    double closed = 0.0;
    for (auto a : kinds) {
      for (auto b : kinds) {
        if (a == b) continue;
        for (std::int64_t q = 0; q < d; ++q) {
          for (std::int64_t qp = 0; qp < d; ++qp) {
            const auto cq = Coord::of(spec, q);
            const auto cqp = Coord::of(spec, qp);
            const double err = std::abs(dense::overlap(dense::basis_state(spec, a, cq), dense::basis_state(spec, b, cqp)) -
                                        dense::overlap_closed_form(spec, a, b, cq, cqp));
            closed = std::max(closed, err);
            t.add(err, [&] {
              return json{{"dim", d}, {"bases", dense::to_string(a) + "/" + dense::to_string(b)}, {"q", q}, {"q_prime", qp}};
            });
          }
        }
      }
    }
    detail.push_back({{"dim", d}, {"k_d", r.k_d}, {"k_d_error", kd_err}, {"closed_form_error", closed}});
  }
  return t.finish("mub", detail);
}

json gauss(const Options& o) {
  Tally t(o.tolerance);
  for (std::int64_t a = 1; a <= o.a_max; ++a) {
    for (std::int64_t b = -2 * a; b <= 2 * a; ++b) {
      if ((a + b) % 2 != 0) continue;
      const auto g = dense::gauss_sum(a, b);
      t.add(std::abs(g.brute - g.closed), [&] { return json{{"a", a}, {"b", b}}; });
    }
  }
  return t.finish("gauss", json{{"a_max", o.a_max}});
}

json eigen(const Options& o) {
  Tally t(o.tolerance);
  json detail = json::array();
  for (const auto d : finite(o, "eigen")) {
    const auto report = dense::eigenrelation_suite(DimensionSpec::qudit(d));
    json rel = json::object();
    for (const auto& r : report.relations) {
      rel[r.name] = r.max_error;
      t.add(r.max_error, [&] { return json{{"dim", d}, {"relation", r.name}, {"error", r.max_error}}; });
    }
    detail.push_back({{"dim", d}, {"relations", rel}, {"y_phase_derived_error", report.y_phase_derived.max_error}});
  }
  return t.finish("eigen", detail);
}

}  // namespace gqv::suites
