#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace padiclat {

using Exponent = boost::rational<std::int64_t>;

/// |x| = p^(-e) with e an exact rational, or |x| = 0 (e = +inf).
///
/// Ordering follows the size of the norm: a smaller exponent is a larger value.
class AbsValue {
 public:
  AbsValue() = default;
  explicit AbsValue(Exponent e) : e_(e), zero_(false) {}
  static AbsValue zero_norm() { return AbsValue(); }
  static AbsValue one() { return AbsValue(Exponent(0)); }

  bool is_zero() const noexcept { return zero_; }
  const Exponent& exponent() const;

  /// |p^k x|.
  AbsValue scaled_by_p_power(std::int64_t k) const {
    return zero_ ? *this : AbsValue(e_ + Exponent(k));
  }
  AbsValue operator*(const AbsValue& o) const {
    return zero_ || o.zero_ ? zero_norm() : AbsValue(e_ + o.e_);
  }

  friend bool operator==(const AbsValue& a, const AbsValue& b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.e_ == b.e_);
  }
  friend std::strong_ordering operator<=>(const AbsValue& a, const AbsValue& b) {
    if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
    if (a.e_ == b.e_) return std::strong_ordering::equal;
    return a.e_ > b.e_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// "inf" for zero, otherwise "a/b" or "a".
  std::string exponent_string() const;

 private:
  Exponent e_{0};
  bool zero_ = true;
};

/// Parses "a", "a/b" or "inf".
AbsValue parse_exponent(const std::string& text);

}  // namespace padiclat
