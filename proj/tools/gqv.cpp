// gqv: command-line front end for the quantum-variable algebra library.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 spec mismatch,
// 4 unsupported or non-prime dimension, 5 non-symplectic input.

#include <charconv>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gqv/approx.hpp"
#include "gqv/io.hpp"
#include "gqv/sampling.hpp"
#include "gqv/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitSpec = 3;
constexpr int kExitDimension = 4;
constexpr int kExitSymplectic = 5;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw gqv::InvalidInput("not a number: '" + s + "'");
  return v;
}

std::vector<gqv::DimensionSpec> parse_dims(const std::string& list) {
  std::vector<gqv::DimensionSpec> out;
  for (const auto& item : split(list, ',')) {
    if (item == "cv") {
      out.push_back(gqv::DimensionSpec::continuous());
      continue;
    }
    std::int64_t d = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
    if (ec != std::errc() || ptr != item.data() + item.size()) throw gqv::InvalidInput("bad dimension '" + item + "'");
    out.push_back(gqv::DimensionSpec::qudit(d));
  }
  if (out.empty()) throw gqv::InvalidInput("empty dimension list");
  return out;
}

double suite_tolerance() {
  if (const char* env = std::getenv("GQV_TOLERANCE")) return to_double(env);
  return 1e-9;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const gqv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const gqv::SpecMismatch& e) {
    std::cerr << "spec mismatch: " << e.what() << "\n";
    return kExitSpec;
  } catch (const gqv::UnsupportedDimension& e) {
    std::cerr << "unsupported dimension: " << e.what() << "\n";
    return kExitDimension;
  } catch (const gqv::TooLarge& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kExitDimension;
  } catch (const gqv::NonSymplectic& e) {
    std::cerr << "non-symplectic: " << e.what() << "\n";
    return kExitSymplectic;
  } catch (const gqv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

gqv::approx::PhaseVector phase_vector(const std::string& list) {
  std::vector<double> v;
  for (const auto& item : split(list, ',')) v.push_back(to_double(item));
  return gqv::approx::PhaseVector(gqv::DimensionSpec::qudit(static_cast<std::int64_t>(v.size())), v);
}

gqv::dense::Matrix parse_matrix(const std::string& list) {
  const auto items = split(list, ',');
  if (items.size() != 8) throw gqv::InvalidInput("--matrix takes 8 reals: re,im of U00,U01,U10,U11");
  gqv::dense::Matrix u(2, 2);
  for (int k = 0; k < 4; ++k) u(k / 2, k % 2) = {to_double(items[2 * k]), to_double(items[2 * k + 1])};
  return u;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension-generic Pauli and Clifford algebra"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  // conjugate
  std::string circuit_path, literal;
  auto* conj = app.add_subcommand("conjugate", "Conjugate a Pauli literal by a circuit file");
  conj->add_option("circuit", circuit_path, "Circuit file")->required();
  conj->add_option("pauli", literal, "Literal 'xi:<v> x:<..> z:<..>'")->required();

  // verify
  std::string suite = "all", dims_opt;
  std::size_t n = 2, cases = 200;
  std::uint64_t seed = 1;
  std::int64_t a_max = 32;
  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite and print a JSON report");
  verify->add_option("suite", suite, "pauli|clifford|mub|gauss|eigen|all")
      ->check(CLI::IsMember({"pauli", "clifford", "mub", "gauss", "eigen", "all"}));
  verify->add_option("--d", dims_opt, "Comma-separated dimensions; 'cv' for continuous");
  verify->add_option("--n", n, "Register count")->check(CLI::PositiveNumber);
  verify->add_option("--cases", cases, "Random cases per dimension");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--a-max", a_max, "Largest a for the Gauss suite")->check(CLI::PositiveNumber);

  auto* synth = app.add_subcommand("synth", "Synthesize a {CZ, F, P, Z} circuit from a tableau or circuit file");
  std::string synth_path;
  synth->add_option("input", synth_path, "Tableau or circuit file")->required();

  auto* mubc = app.add_subcommand("mub-check", "Mutual unbiasedness of the computational, Fourier and phase bases");
  std::string mub_dims = "2,3,5,7";
  mubc->add_option("--d", mub_dims, "Comma-separated dimensions");

  auto* gaussc = app.add_subcommand("gauss-check", "Quadratic Gauss sums against the closed form");
  gaussc->add_option("--a-max", a_max, "Largest a")->check(CLI::PositiveNumber);

  auto* euler = app.add_subcommand("euler", "Qubit decomposition U = e^{i phi} R(t1) F R(t2) F R(t3)");
  std::string matrix_opt;
  std::size_t random_count = 0;
  euler->add_option("--matrix", matrix_opt, "re,im pairs of U00,U01,U10,U11");
  euler->add_option("--random", random_count, "Decompose this many random unitaries instead");
  euler->add_option("--seed", seed, "RNG seed");

  auto* orbit = app.add_subcommand("orbit", "Search N with R(phi)^N within eps of R(target)");
  std::string phi_opt, target_opt;
  double eps = 0.01;
  std::int64_t n_max = 100000;
  orbit->add_option("--phi", phi_opt, "Comma-separated phases, first 0")->required();
  orbit->add_option("--target", target_opt, "Comma-separated target phases, first 0")->required();
  orbit->add_option("--eps", eps, "Entrywise tolerance");
  orbit->add_option("--nmax", n_max, "Largest N to try");

  CLI11_PARSE(app, argc, argv);

  return run_guarded([&]() -> int {
    if (*conj) {
      const auto circuit = gqv::io::parse_circuit(gqv::io::read_file(circuit_path));
      gqv::PauliElement p(circuit.spec(), circuit.n());
      try {
        p = gqv::parse_pauli_literal(circuit.spec(), circuit.n(), literal);
      } catch (const gqv::InvalidInput& e) {
        throw gqv::ParseError(1, std::string("pauli literal: ") + e.what());
      }
      const auto r = gqv::conjugate(circuit, p);
      if (as_json) {
        std::cout << json{{"literal", gqv::format_pauli_literal(r)}, {"rendered", gqv::render_pauli(r)}}.dump(2) << "\n";
      } else {
        std::cout << gqv::format_pauli_literal(r) << "\n";
      }
      return 0;
    }

    if (*verify) {
      gqv::suites::Options o;
      o.n = n;
      o.cases = cases;
      o.seed = seed;
      o.a_max = a_max;
      o.tolerance = suite_tolerance();
      auto dims_or = [&](const char* fallback) { return parse_dims(dims_opt.empty() ? fallback : dims_opt); };
      json reports = json::array();
      const bool all = suite == "all";
      if (all || suite == "pauli") {
        o.dims = dims_or("2,3,4,6,cv");
        reports.push_back(gqv::suites::pauli(o));
      }
      if (all || suite == "clifford") {
        o.dims = dims_or("2,3,4,5");
        reports.push_back(gqv::suites::clifford(o));
      }
      if (all || suite == "mub") {
        o.dims = dims_or("2,3,5,7");
        reports.push_back(gqv::suites::mub(o));
      }
      if (all || suite == "gauss") reports.push_back(gqv::suites::gauss(o));
      if (all || suite == "eigen") {
        o.dims = dims_or("2,3,4,5,6,7,8,9,10,11,12,13,14,15,16");
        reports.push_back(gqv::suites::eigen(o));
      }
      bool pass = true;
      for (const auto& r : reports) pass = pass && r["pass"].get<bool>();
      std::cout << json{{"pass", pass}, {"seed", seed}, {"tolerance", o.tolerance}, {"suites", reports}}.dump(2)
                << "\n";
      return pass ? 0 : kExitVerify;
    }

    if (*synth) {
      const auto input = gqv::io::parse_circuit_or_tableau(gqv::io::read_file(synth_path));
      const gqv::Tableau t = std::holds_alternative<gqv::Tableau>(input)
                                 ? std::get<gqv::Tableau>(input)
                                 : gqv::tableau_from_circuit(std::get<gqv::CliffordCircuit>(input));
      const auto out = gqv::synthesize(t);
      if (as_json) {
        std::cout << json{{"circuit", gqv::io::render_circuit(out)}, {"gates", out.size()}, {"n", out.n()}}.dump(2)
                  << "\n";
      } else {
        std::cout << gqv::io::render_circuit(out) << "# gates: " << out.size() << "\n";
      }
      return 0;
    }

    if (*mubc) {
      gqv::suites::Options o;
      o.dims = parse_dims(mub_dims);
      o.tolerance = suite_tolerance();
      const auto r = gqv::suites::mub(o);
      if (as_json) {
        std::cout << r.dump(2) << "\n";
      } else {
        for (const auto& e : r["detail"]) {
          std::cout << "d=" << e["dim"] << " k_d=" << e["k_d"].get<double>() << " closed_form_error="
                    << e["closed_form_error"].get<double>() << "\n";
        }
        std::cout << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
      }
      return r["pass"].get<bool>() ? 0 : kExitVerify;
    }

    if (*gaussc) {
      gqv::suites::Options o;
      o.a_max = a_max;
      o.tolerance = suite_tolerance();
      const auto r = gqv::suites::gauss(o);
      if (as_json) {
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << "a_max=" << a_max << " max_error=" << r["max_error"].get<double>() << " "
                  << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
      }
      return r["pass"].get<bool>() ? 0 : kExitVerify;
    }

    if (*euler) {
      std::vector<gqv::dense::Matrix> inputs;
      if (random_count > 0) {
        gqv::sampling::Rng rng(seed);
        for (std::size_t k = 0; k < random_count; ++k) inputs.push_back(gqv::sampling::random_unitary(2, rng));
      } else if (!matrix_opt.empty()) {
        inputs.push_back(parse_matrix(matrix_opt));
      } else {
        throw gqv::InvalidInput("euler needs --matrix or --random");
      }
      double worst = 0.0;
      json rows = json::array();
      for (const auto& u : inputs) {
        const auto a = gqv::approx::qubit_euler_decompose(u);
        const double err = gqv::dense::max_abs(gqv::approx::euler_reconstruct(a) - u);
        worst = std::max(worst, err);
        rows.push_back({{"phi", a.phi}, {"theta1", a.theta1}, {"theta2", a.theta2}, {"theta3", a.theta3},
                        {"error", err}});
      }
      const bool pass = worst <= suite_tolerance();
      if (as_json) {
        std::cout << json{{"pass", pass}, {"max_error", worst}, {"decompositions", rows}}.dump(2) << "\n";
      } else if (inputs.size() == 1) {
        const auto& r = rows[0];
        std::cout << "phi=" << r["phi"].get<double>() << " theta1=" << r["theta1"].get<double>()
                  << " theta2=" << r["theta2"].get<double>() << " theta3=" << r["theta3"].get<double>()
                  << " error=" << worst << "\n";
      } else {
        std::cout << inputs.size() << " unitaries, max reconstruction error " << worst << "\n";
      }
      return pass ? 0 : kExitVerify;
    }

    if (*orbit) {
      const auto phi = phase_vector(phi_opt);
      const auto target = phase_vector(target_opt);
      const auto hit = gqv::approx::rotation_orbit_search(phi, target, eps, n_max);
      if (as_json) {
        json r = {{"found", hit.has_value()}};
        if (hit) r["N"] = *hit;
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << (hit ? "N=" + std::to_string(*hit) : std::string("not found")) << "\n";
      }
      return hit ? 0 : kExitVerify;
    }
    return 0;
  });
}
