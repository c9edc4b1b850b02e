#include "padiclat/padic.hpp"

#include <algorithm>

namespace padiclat {

mpz_class ppow(unsigned long p, std::int64_t k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "negative exponent in ppow");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
  return r;
}

std::int64_t remove_p(mpz_class& x, unsigned long p) {
  if (p == 2) {
    const auto t = static_cast<std::int64_t>(mpz_scan1(x.get_mpz_t(), 0));
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(t));
    return t;
  }
  if (!mpz_divisible_ui_p(x.get_mpz_t(), p)) return 0;
  mpz_class pp = p;
  return static_cast<std::int64_t>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

namespace {

mpz_class reduce_mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorKind::DivisionByZero, "non-unit has no inverse modulo p^k");
  return r;
}

// Unit part of a nonzero rational modulo p^k, together with its valuation.
mpz_class rational_unit(const mpq_class& q, unsigned long p, std::int64_t k, std::int64_t* val) {
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  const std::int64_t a = remove_p(num, p);
  const std::int64_t b = remove_p(den, p);
  if (val) *val = a - b;
  if (k <= 0) return 0;
  const mpz_class m = ppow(p, k);
  return reduce_mod(num * inverse_mod(den, m), m);
}

}  // namespace

PadicScalar PadicScalar::zero(unsigned long p, std::int64_t precision) {
  PadicScalar s;
  s.p_ = p;
  s.n_ = precision;
  return s;
}

PadicScalar PadicScalar::make_exact(mpq_class q, unsigned long p, std::int64_t precision) {
  if (sgn(q) == 0) return zero(p, precision);
  const std::size_t bits = mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  PadicScalar s;
  s.p_ = p;
  s.n_ = precision;
  if (bits > kExactBitBudget) {
    s.kind_ = Kind::Approx;
    s.u_ = rational_unit(q, p, precision, &s.v_);
    return s;
  }
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  s.v_ = remove_p(num, p) - remove_p(den, p);
  s.kind_ = Kind::Exact;
  s.q_ = std::move(q);
  return s;
}

PadicScalar PadicScalar::from_rational(const mpz_class& num, const mpz_class& den, unsigned long p,
                                       std::int64_t precision) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return make_exact(std::move(q), p, precision);
}

PadicScalar PadicScalar::from_rational(const mpq_class& q, unsigned long p, std::int64_t precision) {
  return make_exact(q, p, precision);
}

PadicScalar PadicScalar::from_integer(long value, unsigned long p, std::int64_t precision) {
  return make_exact(mpq_class(value), p, precision);
}

PadicScalar PadicScalar::from_unit(const mpz_class& u, std::int64_t v, unsigned long p, std::int64_t precision) {
  if (precision <= 0) fail(ErrorKind::PrecisionExhausted, "no digits left");
  PadicScalar s;
  s.p_ = p;
  s.n_ = precision;
  s.kind_ = Kind::Approx;
  s.v_ = v;
  s.u_ = reduce_mod(u, ppow(p, precision));
  if (mpz_divisible_ui_p(s.u_.get_mpz_t(), p)) fail(ErrorKind::InvalidArgument, "unit part divisible by p");
  return s;
}

PadicScalar PadicScalar::from_residue(const mpz_class& r, std::int64_t abs_prec, unsigned long p,
                                      std::int64_t precision, std::int64_t shift) {
  if (abs_prec <= 0) fail(ErrorKind::PrecisionExhausted, "residue carries no digits");
  mpz_class x = reduce_mod(r, ppow(p, abs_prec));
  if (x == 0) fail(ErrorKind::PrecisionExhausted, "residue vanishes at the known precision");
  const std::int64_t t = remove_p(x, p);
  return from_unit(x, t + shift, p, std::min(precision, abs_prec - t));
}

void PadicScalar::check_prime(const PadicScalar& y) const {
  if (p_ != y.p_) fail(ErrorKind::InvalidArgument, "scalars over different primes");
}

mpz_class PadicScalar::unit() const {
  switch (kind_) {
    case Kind::Zero: fail(ErrorKind::InvalidArgument, "zero has no unit part");
    case Kind::Exact: return rational_unit(q_, p_, n_, nullptr);
    case Kind::Approx: return u_;
  }
  return 0;
}

unsigned long PadicScalar::residue_digit() const {
  if (kind_ == Kind::Zero) return 0;
  if (v_ < 0) fail(ErrorKind::NotIntegral, "residue of a non-integral scalar");
  if (v_ > 0) return 0;
  if (kind_ == Kind::Approx) return mpz_fdiv_ui(u_.get_mpz_t(), p_);
  return mpz_get_ui(rational_unit(q_, p_, 1, nullptr).get_mpz_t());
}

mpz_class PadicScalar::scaled_residue(std::int64_t shift, std::int64_t k) const {
  if (k <= 0 || kind_ == Kind::Zero) return 0;
  const std::int64_t w = v_ + shift;
  if (w < 0) fail(ErrorKind::NotIntegral, "scaled residue of a non-integral scalar");
  if (kind_ == Kind::Approx && k > v_ + n_ + shift)
    fail(ErrorKind::PrecisionExhausted, "residue requested beyond known digits");
  if (w >= k) return 0;
  const mpz_class u = kind_ == Kind::Approx ? u_ : rational_unit(q_, p_, k - w, nullptr);
  return reduce_mod(u * ppow(p_, w), ppow(p_, k));
}

const mpq_class& PadicScalar::exact_value() const {
  static const mpq_class kZero(0);
  if (kind_ == Kind::Zero) return kZero;
  if (kind_ == Kind::Approx) fail(ErrorKind::PrecisionExhausted, "approximate scalar has no exact value");
  return q_;
}

PadicScalar PadicScalar::approximate() const {
  if (kind_ != Kind::Exact) return *this;
  return from_unit(unit(), v_, p_, n_);
}

PadicScalar PadicScalar::with_precision(std::int64_t precision) const {
  PadicScalar s = *this;
  s.n_ = precision;
  if (kind_ == Kind::Approx && precision < n_) s.u_ = reduce_mod(u_, ppow(p_, precision));
  return s;
}

PadicScalar PadicScalar::integral_part() const {
  if (kind_ == Kind::Zero || v_ >= 0) return *this;
  if (kind_ == Kind::Exact) {
    const mpz_class den = ppow(p_, -v_);
    const mpz_class r = scaled_residue(-v_, -v_);
    return make_exact(q_ - mpq_class(r, den), p_, n_);
  }
  if (v_ + n_ <= 0) fail(ErrorKind::PrecisionExhausted, "no integral digits are known");
  mpz_class w;
  mpz_fdiv_q(w.get_mpz_t(), u_.get_mpz_t(), ppow(p_, -v_).get_mpz_t());
  if (w == 0) return zero(p_, n_);
  return from_residue(w, v_ + n_, p_, n_);
}

PadicScalar PadicScalar::operator-() const {
  PadicScalar s = *this;
  if (kind_ == Kind::Exact) s.q_ = -q_;
  if (kind_ == Kind::Approx) s.u_ = ppow(p_, n_) - u_;
  return s;
}

PadicScalar PadicScalar::add_approx(const PadicScalar& x, const PadicScalar& y) {
  const std::int64_t a = std::min(x.absolute_precision(), y.absolute_precision());
  const std::int64_t vmin = std::min(x.v_, y.v_);
  const std::int64_t k = a - vmin;
  if (k <= 0) fail(ErrorKind::PrecisionExhausted, "sum has no known digits");
  mpz_class r = x.scaled_residue(-vmin, k) + y.scaled_residue(-vmin, k);
  r = reduce_mod(r, ppow(x.p_, k));
  if (r == 0) fail(ErrorKind::PrecisionExhausted, "cancellation exhausted the known digits");
  const std::int64_t t = remove_p(r, x.p_);
  const std::int64_t rel = std::min(k - t, std::max(x.n_, y.n_));
  return from_unit(r, vmin + t, x.p_, rel);
}

PadicScalar operator+(const PadicScalar& x, const PadicScalar& y) {
  x.check_prime(y);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.kind_ == PadicScalar::Kind::Exact && y.kind_ == PadicScalar::Kind::Exact)
    return PadicScalar::make_exact(x.q_ + y.q_, x.p_, std::max(x.n_, y.n_));
  return PadicScalar::add_approx(x, y);
}

PadicScalar operator-(const PadicScalar& x, const PadicScalar& y) { return x + (-y); }

PadicScalar operator*(const PadicScalar& x, const PadicScalar& y) {
  x.check_prime(y);
  if (x.is_zero() || y.is_zero()) return PadicScalar::zero(x.p_, std::max(x.n_, y.n_));
  if (x.is_exact() && y.is_exact()) return PadicScalar::make_exact(x.q_ * y.q_, x.p_, std::max(x.n_, y.n_));
  const std::int64_t n = x.is_exact() ? y.n_ : y.is_exact() ? x.n_ : std::min(x.n_, y.n_);
  const mpz_class ux = x.is_exact() ? rational_unit(x.q_, x.p_, n, nullptr) : x.u_;
  const mpz_class uy = y.is_exact() ? rational_unit(y.q_, y.p_, n, nullptr) : y.u_;
  return PadicScalar::from_unit(ux * uy, x.v_ + y.v_, x.p_, n);
}

PadicScalar PadicScalar::inverse() const {
  if (kind_ == Kind::Zero) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (kind_ == Kind::Exact) return make_exact(1 / q_, p_, n_);
  return from_unit(inverse_mod(u_, ppow(p_, n_)), -v_, p_, n_);
}

PadicScalar operator/(const PadicScalar& x, const PadicScalar& y) {
  x.check_prime(y);
  if (y.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (x.is_zero()) return x;
  if (x.is_exact() && y.is_exact()) return PadicScalar::make_exact(x.q_ / y.q_, x.p_, std::max(x.n_, y.n_));
  return x * y.inverse();
}

PadicScalar PadicScalar::times_p_power(std::int64_t k) const {
  if (kind_ == Kind::Zero || k == 0) return *this;
  if (kind_ == Kind::Exact) {
    mpq_class q = q_;
    if (k > 0) q *= mpq_class(ppow(p_, k));
    else q /= mpq_class(ppow(p_, -k));
    return make_exact(std::move(q), p_, n_);
  }
  PadicScalar s = *this;
  s.v_ += k;
  return s;
}

bool operator==(const PadicScalar& x, const PadicScalar& y) {
  if (x.p_ != y.p_ || x.kind_ != y.kind_) return false;
  switch (x.kind_) {
    case PadicScalar::Kind::Zero: return true;
    case PadicScalar::Kind::Exact: return x.q_ == y.q_;
    case PadicScalar::Kind::Approx: return x.v_ == y.v_ && x.n_ == y.n_ && x.u_ == y.u_;
  }
  return false;
}

std::string PadicScalar::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Exact: return q_.get_str();
    case Kind::Approx:
      if (v_ >= 0) return mpz_class(u_ * ppow(p_, v_)).get_str();
      return mpq_class(u_, ppow(p_, -v_)).get_str();
  }
  return "";
}

}  // namespace padiclat
