#pragma once

#include <string_view>

#include "lpgram/sequent.hpp"
#include "lpgram/type.hpp"

namespace lpgram {

// Concrete type syntax:
//   expr := term ('/' term)*          '/' is left associative
//   term := atom ('*' term)?          '*' binds tighter, right associative
//   atom := IDENT | '(' expr ')'      IDENT = [A-Za-z0-9_]+
// Whitespace between tokens is ignored.  Throws ParseError with the offending
// offset on malformed input.
TypeRef parse_type(std::string_view text);

// "A, B, C -> D" with a nonempty antecedent.
Sequent parse_sequent(std::string_view text);

}  // namespace lpgram
