#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "freealg/polynomial.hpp"

namespace freealg {

/// Parses the polynomial text format:
///
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := coefficient | [coefficient '*'] factor ('*' factor)*
///   factor     := variable ['^' n] | '(' expression ')' ['^' n]
///   coefficient:= integer ['/' positive-integer]
///
/// Variables are x, y for rank 2 and x1..xn otherwise. Powers of a
/// parenthesized expression are noncommutative repeated products.
Polynomial parse_poly(std::string_view text, Field field, std::size_t alphabet_size = 2);

/// Canonical text: highest degree first, words in lexicographic order within
/// a degree. parse_poly(print_poly(p)) == p.
std::string print_poly(const Polynomial& p);

}  // namespace freealg
