#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "padiclat/error.hpp"

namespace padiclat {

inline constexpr std::int64_t kDefaultPrecision = 128;
inline constexpr std::int64_t kMaxPrecision = 4096;
inline constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();
// Exact rationals larger than this (numerator + denominator bits) are demoted.
inline constexpr std::size_t kExactBitBudget = std::size_t{1} << 16;

/// p^k as a GMP integer.
mpz_class ppow(unsigned long p, std::int64_t k);

/// Largest t with p^t | x for nonzero x; x is divided by p^t in place.
std::int64_t remove_p(mpz_class& x, unsigned long p);

/// An element of Q_p.
///
/// Three shapes: the exact zero, an exact rational (kept while all inputs are
/// exact), and an approximation u * p^v known modulo p^(v + N) with p not
/// dividing u.  Approximations never represent zero.
class PadicScalar {
 public:
  PadicScalar() = default;

  static PadicScalar zero(unsigned long p, std::int64_t precision);
  static PadicScalar from_rational(const mpz_class& num, const mpz_class& den, unsigned long p,
                                   std::int64_t precision);
  static PadicScalar from_rational(const mpq_class& q, unsigned long p, std::int64_t precision);
  static PadicScalar from_integer(long value, unsigned long p, std::int64_t precision);
  /// u * p^v with relative precision N; u is reduced mod p^N and must be a unit.
  static PadicScalar from_unit(const mpz_class& u, std::int64_t v, unsigned long p, std::int64_t precision);
  /// The value r * p^shift known modulo p^(abs_prec + shift).  r is reduced mod
  /// p^abs_prec; r == 0 there raises PrecisionExhausted.
  static PadicScalar from_residue(const mpz_class& r, std::int64_t abs_prec, unsigned long p,
                                  std::int64_t precision, std::int64_t shift = 0);

  unsigned long prime() const noexcept { return p_; }
  std::int64_t precision() const noexcept { return n_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  bool is_exact() const noexcept { return kind_ != Kind::Approx; }
  std::int64_t valuation() const noexcept { return kind_ == Kind::Zero ? kInfiniteValuation : v_; }
  /// Absolute precision v + N; infinite for exact values.
  std::int64_t absolute_precision() const noexcept {
    return kind_ == Kind::Approx ? v_ + n_ : kInfiniteValuation;
  }
  bool is_integral() const noexcept { return valuation() >= 0; }
  bool is_unit() const noexcept { return valuation() == 0; }

  /// The unit part reduced mod p^N (N = precision()); zero has no unit.
  mpz_class unit() const;
  /// x mod p for integral x.
  unsigned long residue_digit() const;
  /// (x * p^shift) mod p^k in [0, p^k); requires valuation + shift >= 0 and
  /// k no larger than the known absolute precision + shift.
  mpz_class scaled_residue(std::int64_t shift, std::int64_t k) const;
  mpz_class residue(std::int64_t k) const { return scaled_residue(0, k); }

  const mpq_class& exact_value() const;
  /// The same value forgotten down to an approximation at relative precision N.
  PadicScalar approximate() const;
  PadicScalar with_precision(std::int64_t precision) const;
  /// Drops the digits of negative valuation, keeping the part in Z_p.
  PadicScalar integral_part() const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator-(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator*(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator/(const PadicScalar& x, const PadicScalar& y);
  PadicScalar& operator+=(const PadicScalar& y) { return *this = *this + y; }
  PadicScalar& operator-=(const PadicScalar& y) { return *this = *this - y; }
  PadicScalar& operator*=(const PadicScalar& y) { return *this = *this * y; }
  PadicScalar& operator/=(const PadicScalar& y) { return *this = *this / y; }
  PadicScalar inverse() const;
  PadicScalar times_p_power(std::int64_t k) const;

  /// Structural equality: exact values compare as rationals, approximations
  /// compare valuation, precision and unit.
  friend bool operator==(const PadicScalar& x, const PadicScalar& y);

  /// Canonical text: "num/den" or an integer for exact values; the residue
  /// (or residue/p^k) for approximations.
  std::string to_string() const;

 private:
  enum class Kind : std::uint8_t { Zero, Exact, Approx };

  static PadicScalar make_exact(mpq_class q, unsigned long p, std::int64_t precision);
  static PadicScalar add_approx(const PadicScalar& x, const PadicScalar& y);
  void check_prime(const PadicScalar& y) const;

  Kind kind_ = Kind::Zero;
  unsigned long p_ = 2;
  std::int64_t n_ = kDefaultPrecision;
  std::int64_t v_ = 0;
  mpq_class q_;   // Exact
  mpz_class u_;   // Approx
};

}  // namespace padiclat
