#pragma once

#include <string>
#include <variant>

#include "leibcas/dialgebra.hpp"

namespace leibcas {

/// Textual expression syntax shared by both free algebras:
///   expr   := term (('+' | '-') term)*
///   term   := [scalar '*'] prod
///   prod   := atom (('-|' | '|-') atom)*      (dialgebra products)
///   atom   := generator | '[' expr ',' expr ']' | '(' expr ')'
///   generator := x<digits>   (x1 is the first generator)
///   scalar := integer ['/' integer]
/// Brackets in dialgebra mode mean the induced bracket u -| v - v |- u.
struct ParsedExpr {
  std::variant<FreeElement, DialgElement> value;
  bool dialgebra = false;
};

/// Parses and evaluates to normal form. `force_dialgebra` evaluates in the
/// free dialgebra even when no -|, |- appears; otherwise the mode is
/// detected from the tokens. usage_error on syntax errors (with position) and
/// on expansions past `degree_cap` (0 disables the cap; the cap is checked
/// against letter counts before expanding).
ParsedExpr parse_expression(const Field& f, const std::string& text,
                            bool force_dialgebra = false,
                            std::size_t degree_cap = 0);

}  // namespace leibcas
