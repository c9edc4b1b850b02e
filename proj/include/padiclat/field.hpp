#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padiclat/abs_value.hpp"
#include "padiclat/padic.hpp"

namespace padiclat {

using Poly = std::vector<PadicScalar>;  // constant term first

class FieldContext;
using Context = std::shared_ptr<const FieldContext>;

/// K = Q_p[z]/(F) with F monic over Z_p.  Immutable once built.
class FieldContext {
 public:
  static Context make(unsigned long p, std::int64_t precision, Poly F, std::optional<int> e = {},
                      std::optional<int> f = {});
  static Context make(unsigned long p, std::int64_t precision, const std::vector<mpq_class>& F,
                      std::optional<int> e = {}, std::optional<int> f = {});

  unsigned long p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  std::int64_t precision() const noexcept { return precision_; }
  const Poly& F() const noexcept { return F_; }
  std::optional<int> ramification_index() const noexcept { return e_; }
  std::optional<int> residue_degree() const noexcept { return f_; }
  /// Digits of F that are known; infinite when F is exact.
  std::int64_t poly_abs_precision() const noexcept { return poly_prec_; }
  bool poly_is_exact() const noexcept { return poly_prec_ == kInfiniteValuation; }

  PadicScalar scalar(long value) const { return PadicScalar::from_integer(value, p_, precision_); }
  PadicScalar scalar(const mpq_class& q) const { return PadicScalar::from_rational(q, p_, precision_); }

  // Word-size kernel levels: digits A with p^A < 2^32 and < 2^62, and the low
  // coefficients of F reduced there.
  int digits32() const noexcept { return a32_; }
  int digits64() const noexcept { return a64_; }
  const std::vector<std::uint64_t>& f_low32() const noexcept { return f32_; }
  const std::vector<std::uint64_t>& f_low64() const noexcept { return f64_; }

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

 private:
  FieldContext() = default;

  unsigned long p_ = 2;
  int n_ = 0;
  std::int64_t precision_ = kDefaultPrecision;
  Poly F_;
  std::optional<int> e_, f_;
  std::int64_t poly_prec_ = kInfiniteValuation;
  int a32_ = 0, a64_ = 0;
  std::vector<std::uint64_t> f32_, f64_;
};

/// Sum of c_i z^i over the context's basis.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Context ctx, std::vector<PadicScalar> coeffs);

  static FieldElement zero(const Context& ctx);
  static FieldElement one(const Context& ctx);
  static FieldElement constant(const Context& ctx, const PadicScalar& c);
  static FieldElement generator(const Context& ctx);
  /// z^k reduced modulo F.
  static FieldElement monomial(const Context& ctx, int k);
  static FieldElement from_rationals(const Context& ctx, const std::vector<mpq_class>& coeffs);
  static FieldElement from_integers(const Context& ctx, const std::vector<long>& coeffs);

  const Context& context() const noexcept { return ctx_; }
  int degree() const noexcept { return static_cast<int>(c_.size()); }
  const std::vector<PadicScalar>& coeffs() const noexcept { return c_; }
  const PadicScalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  /// All coefficients are the exact zero.
  bool is_zero() const;
  bool is_exact() const;
  /// Smallest coefficient valuation (infinite for zero).
  std::int64_t min_valuation() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const PadicScalar& a, const FieldElement& x);
  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
  FieldElement pow(unsigned k) const;
  FieldElement times_p_power(std::int64_t k) const;

  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  Context ctx_;
  std::vector<PadicScalar> c_;
};

FieldElement operator*(long a, const FieldElement& x);

/// Determinant of multiplication by x.
PadicScalar field_norm(const Context& ctx, const FieldElement& x);
/// |x| with exponent v_p(N(x)) / n.
AbsValue abs_value(const Context& ctx, const FieldElement& x);
/// Characteristic polynomial of multiplication by x, constant term first.
Poly char_poly(const Context& ctx, const FieldElement& x);
/// Evaluates a polynomial with scalar coefficients at a field element.
FieldElement evaluate(const Poly& poly, const FieldElement& x);
bool is_eisenstein(unsigned long p, const Poly& poly);
/// Coefficients a with target = sum a_i vectors[i].
std::vector<PadicScalar> coordinates_in(const Context& ctx, const FieldElement& target,
                                        const std::vector<FieldElement>& vectors);

namespace detail {

/// Norm valuation of an integral element given by its residues modulo
/// p^digits32() (or digits64() when wide); empty when not certified.
std::optional<std::int64_t> word_norm_valuation(const FieldContext& ctx, const std::vector<std::uint64_t>& x,
                                                bool wide);

}  // namespace detail

}  // namespace padiclat
