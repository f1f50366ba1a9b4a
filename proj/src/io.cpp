#include "gqv/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace gqv::io {
namespace {

struct Line {
  std::size_t number;
  std::string raw;  // comment stripped
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(is, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ts(raw);
    std::vector<std::string> tokens;
    for (std::string t; ts >> t;) tokens.push_back(t);
    if (!tokens.empty()) out.push_back({number, raw, std::move(tokens)});
  }
  return out;
}

std::int64_t parse_int(const Line& l, const std::string& s, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(l.number, std::string("expected integer ") + what + ", got '" + s + "'");
  }
  return v;
}

double parse_real(const Line& l, const std::string& s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError(l.number, "expected decimal parameter, got '" + s + "'");
  }
  return v;
}

template <typename Value>
Value parse_param(const DimensionSpec& spec, const Line& l, const std::string& s) {
  if (spec.is_continuous()) return Value::real(parse_real(l, s));
  const std::int64_t v = parse_int(l, s, "parameter");
  const std::int64_t m = Value::zero(spec).modulus();
  if (v < 0 || v >= m) {
    throw ParseError(l.number, "parameter out of ring: " + s + " is not in [0, " + std::to_string(m) + ")");
  }
  return Value::of(spec, v);
}

std::size_t parse_register(const Line& l, const std::string& s) {
  const std::int64_t v = parse_int(l, s, "register");
  if (v < 0) throw ParseError(l.number, "register index must be non-negative");
  return static_cast<std::size_t>(v);
}

struct Header {
  DimensionSpec spec;
  std::size_t n;
};

Header parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "missing 'dim' header");
  const Line& dl = lines[0];
  if (dl.tokens.size() != 2 || dl.tokens[0] != "dim") throw ParseError(dl.number, "expected 'dim <d>' or 'dim cv'");
  DimensionSpec spec = DimensionSpec::continuous();
  if (dl.tokens[1] != "cv") {
    const std::int64_t d = parse_int(dl, dl.tokens[1], "dimension");
    if (d < 2) throw ParseError(dl.number, "dimension must be at least 2");
    spec = DimensionSpec::qudit(d);
  }
  if (lines.size() < 2) throw ParseError(dl.number + 1, "missing 'gqvs' header");
  const Line& nl = lines[1];
  if (nl.tokens.size() != 2 || nl.tokens[0] != "gqvs") throw ParseError(nl.number, "expected 'gqvs <n>'");
  const std::int64_t n = parse_int(nl, nl.tokens[1], "register count");
  if (n < 1) throw ParseError(nl.number, "register count must be at least 1");
  return {spec, static_cast<std::size_t>(n)};
}

Gate parse_gate(const DimensionSpec& spec, const Line& l) {
  const std::string& name = l.tokens[0];
  auto arity = [&](std::size_t k) {
    if (l.tokens.size() != k + 1) {
      throw ParseError(l.number, name + " takes " + std::to_string(k) + " arguments");
    }
  };
  const auto reg = [&](std::size_t k) { return parse_register(l, l.tokens[k]); };
  if (name == "F" || name == "FINV") {
    arity(1);
    return name == "F" ? Gate::f(reg(1)) : Gate::finv(reg(1));
  }
  if (name == "P") {
    arity(2);
    return Gate::p(parse_param<PhaseExp>(spec, l, l.tokens[1]), reg(2));
  }
  if (name == "Z" || name == "X" || name == "Y" || name == "SQ") {
    arity(2);
    const Coord p = parse_param<Coord>(spec, l, l.tokens[1]);
    if (name == "Z") return Gate::z(p, reg(2));
    if (name == "X") return Gate::x(p, reg(2));
    if (name == "Y") return Gate::y(p, reg(2));
    return Gate::sq(p, reg(2));
  }
  if (name == "CZ" || name == "SUM" || name == "SWAP") {
    arity(2);
    if (name == "CZ") return Gate::cz(reg(1), reg(2));
    if (name == "SUM") return Gate::sum(reg(1), reg(2));
    return Gate::swap(reg(1), reg(2));
  }
  throw ParseError(l.number, "unknown gate '" + name + "'");
}

// Re-throws a validation error with the offending line attached.
template <typename F>
void at_line(std::size_t line, F&& f) {
  const std::string prefix = "line " + std::to_string(line) + ": ";
  try {
    f();
  } catch (const NotAUnit& e) {
    throw NotAUnit(prefix + e.what());
  } catch (const RegisterCountMismatch& e) {
    throw RegisterCountMismatch(prefix + e.what());
  } catch (const SpecMismatch& e) {
    throw SpecMismatch(prefix + e.what());
  } catch (const IndexError& e) {
    throw IndexError(prefix + e.what());
  } catch (const InvalidInput& e) {
    throw InvalidInput(prefix + e.what());
  }
}

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::Z:
      return "Z";
    case GateKind::X:
      return "X";
    case GateKind::Y:
      return "Y";
    case GateKind::F:
      return "F";
    case GateKind::Finv:
      return "FINV";
    case GateKind::P:
      return "P";
    case GateKind::Sq:
      return "SQ";
    case GateKind::CZ:
      return "CZ";
    case GateKind::Sum:
      return "SUM";
    case GateKind::Swap:
      return "SWAP";
  }
  return "?";
}

void write_header(std::ostringstream& os, const DimensionSpec& spec, std::size_t n) {
  os << "dim " << spec.to_string() << "\ngqvs " << n << "\n";
}

bool is_tableau_body(const std::vector<Line>& lines) { return lines.size() > 2 && lines[2].tokens[0] == "image"; }

Tableau tableau_from_lines(const Header& h, const std::vector<Line>& lines) {
  std::vector<std::optional<PauliElement>> images(2 * h.n);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] != "image" || l.tokens.size() < 3) throw ParseError(l.number, "expected 'image X<i>|Z<i> <literal>'");
    const std::string& label = l.tokens[1];
    if (label.size() < 2 || (label[0] != 'X' && label[0] != 'Z')) {
      throw ParseError(l.number, "image label must be X<i> or Z<i>");
    }
    const std::size_t i = parse_register(l, label.substr(1));
    if (i >= h.n) throw ParseError(l.number, "image index out of range");
    const std::size_t slot = (label[0] == 'X' ? 0 : h.n) + i;
    if (images[slot]) throw ParseError(l.number, "duplicate image " + label);
    const auto at = l.raw.find(label) + label.size();
    try {
      images[slot] = parse_pauli_literal(h.spec, h.n, std::string_view(l.raw).substr(at));
    } catch (const SpecMismatch& e) {
      throw ParseError(l.number, e.what());
    } catch (const InvalidInput& e) {
      throw ParseError(l.number, e.what());
    }
  }
  std::vector<PauliElement> out;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (!images[j]) {
      const std::string label = (j < h.n ? "X" : "Z") + std::to_string(j % h.n);
      throw ParseError(lines.back().number, "missing image " + label);
    }
    out.push_back(*images[j]);
  }
  return Tableau(h.spec, h.n, std::move(out));
}

CliffordCircuit circuit_from_lines(const Header& h, const std::vector<Line>& lines) {
  CliffordCircuit c(h.spec, h.n);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Gate g = parse_gate(h.spec, lines[k]);
    at_line(lines[k].number, [&] { c.append(g); });
  }
  return c;
}

}  // namespace

CliffordCircuit parse_circuit(std::string_view text) {
  const auto lines = significant_lines(text);
  const Header h = parse_header(lines);
  if (is_tableau_body(lines)) throw ParseError(lines[2].number, "expected a gate, found a tableau image");
  return circuit_from_lines(h, lines);
}

std::string render_circuit(const CliffordCircuit& c) {
  std::ostringstream os;
  write_header(os, c.spec(), c.n());
  for (const auto& g : c.gates()) {
    os << gate_name(g.kind);
    switch (g.kind) {
      case GateKind::Z:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Sq:
        os << ' ' << format_value(g.coord_param);
        break;
      case GateKind::P:
        os << ' ' << format_value(g.phase_param);
        break;
      default:
        break;
    }
    os << ' ' << g.targets[0];
    if (g.is_two_register()) os << ' ' << g.targets[1];
    os << '\n';
  }
  return os.str();
}

Tableau parse_tableau(std::string_view text) {
  const auto lines = significant_lines(text);
  const Header h = parse_header(lines);
  return tableau_from_lines(h, lines);
}

std::string render_tableau(const Tableau& t) {
  std::ostringstream os;
  write_header(os, t.spec(), t.n());
  for (std::size_t i = 0; i < t.n(); ++i) os << "image X" << i << ' ' << format_pauli_literal(t.x_image(i)) << '\n';
  for (std::size_t i = 0; i < t.n(); ++i) os << "image Z" << i << ' ' << format_pauli_literal(t.z_image(i)) << '\n';
  return os.str();
}

std::variant<CliffordCircuit, Tableau> parse_circuit_or_tableau(std::string_view text) {
  const auto lines = significant_lines(text);
  const Header h = parse_header(lines);
  if (is_tableau_body(lines)) return tableau_from_lines(h, lines);
  return circuit_from_lines(h, lines);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace gqv::io
