#pragma once

#include <string>

#include "charclass/chow.hpp"

namespace charclass {

// Evaluates an expression over the generators of the modeled Chow ring.
// Grammar: integer literals; h; e (alias for e1 when there is one center) or
// e1..em; binary + - *; ^ with a nonnegative integer literal; inv(...);
// parentheses. inv requires constant term 1.
ChowClass eval_chow_expr(const std::string& text, const Ambient& ambient);

}  // namespace charclass
