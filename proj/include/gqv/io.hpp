#pragma once

// Text formats for circuits and tableaux.
//
//   dim <d> | dim cv
//   gqvs <n>
//   F 0
//   P 3 1
//   CZ 0 1
//
// A tableau file has the same two header lines followed by 2n lines
// `image X<i> <pauli literal>` and `image Z<i> <pauli literal>`.
// `#` starts a comment anywhere; blank lines are ignored.

#include <string>
#include <string_view>
#include <variant>

#include "gqv/clifford.hpp"

namespace gqv::io {

/// Throws ParseError for syntax, and NotAUnit / SpecMismatch / IndexError /
/// InvalidInput (prefixed with the line number) for invalid gates.
CliffordCircuit parse_circuit(std::string_view text);
std::string render_circuit(const CliffordCircuit& c);

Tableau parse_tableau(std::string_view text);
std::string render_tableau(const Tableau& t);

/// Either format, chosen by whether the body starts with `image`.
std::variant<CliffordCircuit, Tableau> parse_circuit_or_tableau(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace gqv::io
