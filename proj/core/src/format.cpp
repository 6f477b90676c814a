#include "cdalg/format.hpp"

#include <charconv>
#include <stdexcept>

namespace cdalg {

std::string format_scalar(const Rational& v) { return to_string(v); }

std::string format_scalar(double v) {
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  if (ec != std::errc()) throw std::runtime_error("cannot format floating-point value");
  std::string s(buf, end);
  if (s.find('.') == std::string::npos && s.find_first_of("ni") == std::string::npos) s += ".0";
  return s;
}

std::string format_element(const AnyElement& e) {
  return std::visit([](const auto& x) { return format_element(x); }, e);
}

}  // namespace cdalg
