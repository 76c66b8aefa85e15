#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tg/element.hpp"

namespace tg {

// Result of an element expression: an element, a comparison, or an integer
// character value.
using EvalResult = std::variant<Element, bool, int>;

// Grammar:
//   expr    := term ("==" term)?
//   term    := factor ("*" factor)*
//   factor  := atom ("^" integer)*
//   atom    := "[" tree ";" middle ";" tree "]" | name "(" expr ")"
//            | "(" expr ")" | "x0" | "x1" | "id"
// with name one of pi, theta, reduce, inv. Parse errors carry the position.
EvalResult eval_expression(const SystemPtr& sys, std::string_view text);

std::string render(const EvalResult& value);

}  // namespace tg
