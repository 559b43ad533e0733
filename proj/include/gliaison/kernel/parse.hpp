#pragma once

#include <cstddef>
#include <string_view>

#include "gliaison/kernel/polynomial.hpp"

namespace gliaison {

// Infix polynomial: integers, variable names, + - * ^ and parentheses.
// Errors are reported as ParseError at (line, column_offset + position).
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1,
                            std::size_t column_offset = 0);

}  // namespace gliaison
