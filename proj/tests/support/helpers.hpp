#pragma once

#include <string_view>

#include "cdalg/parser.hpp"

namespace testing {

inline cdalg::ExactElement X(std::string_view text, unsigned level) {
  return std::get<cdalg::ExactElement>(cdalg::eval_expression(text, level, cdalg::Backend::Exact));
}

inline cdalg::FloatElement F(std::string_view text, unsigned level) {
  return std::get<cdalg::FloatElement>(cdalg::eval_expression(text, level, cdalg::Backend::Float));
}

}  // namespace testing
