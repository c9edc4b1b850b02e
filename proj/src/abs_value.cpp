#include "padiclat/abs_value.hpp"

#include "padiclat/error.hpp"

namespace padiclat {

const Exponent& AbsValue::exponent() const {
  if (zero_) fail(ErrorKind::InvalidArgument, "zero norm has no finite exponent");
  return e_;
}

std::string AbsValue::exponent_string() const {
  if (zero_) return "inf";
  std::string s = std::to_string(e_.numerator());
  if (e_.denominator() != 1) s += "/" + std::to_string(e_.denominator());
  return s;
}

AbsValue parse_exponent(const std::string& text) {
  if (text == "inf") return AbsValue::zero_norm();
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    const std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      den = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1 || den == 0) throw std::invalid_argument(text);
    }
    return AbsValue(Exponent(num, den));
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "bad exponent '" + text + "'");
  }
}

}  // namespace padiclat
