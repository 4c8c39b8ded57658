#pragma once

#include <cstddef>
#include <string_view>

#include "charclass/polynomial.hpp"

namespace charclass {

// Parses an ASCII polynomial expression over `ring`:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | ident | '(' expr ')'
//
// Identifiers must be ring variables. Whitespace is ignored; implicit
// multiplication is rejected. Errors carry `line` and a 1-based column offset
// by `column_offset` so callers can report positions inside a larger file.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                            std::size_t column_offset = 0);

}  // namespace charclass
