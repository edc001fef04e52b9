#pragma once

// Text formats: spec files, element expressions, printing and JSON.
//
// Spec file:
//   # comment
//   dim   = 2
//   names = [E1, E2]
//   q     = [[q^2, q^-1],
//            [q^-1, q^2]]
// or, instead of q,
//   cartan = [[2, -1], [-1, 2]]
//   diag   = [1, 1]

#include "nichols/nichols.hpp"

#include <string>
#include <string_view>

namespace nichols {

/// Throws ParseError (with line and column) or ZeroEntry.
BraidingSpec parse_spec(std::string_view text);
BraidingSpec load_spec(const std::string& path);

/// Linear combinations such as "E1*E2 - (q+q^-1)*E1^2*E2 + 1"; letters may
/// carry a positive exponent. Throws ParseError or UnknownName.
TensorVector parse_element(std::string_view text, const BraidingSpec& spec);

std::string format_word(const Word& w, const BraidingSpec& spec);
std::string format_vector(const TensorVector& v, const BraidingSpec& spec);
std::string format_multidegree(const Multidegree& m);

}  // namespace nichols
