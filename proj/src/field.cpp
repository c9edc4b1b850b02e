#include "padiclat/field.hpp"

#include <algorithm>

#include "padiclat/detail/zmod.hpp"

namespace padiclat {

namespace {

std::int64_t add_capped(std::int64_t a, std::int64_t b) {
  if (a == kInfiniteValuation || b == kInfiniteValuation) return kInfiniteValuation;
  return a + b;
}

std::int64_t factorial_valuation(std::int64_t k, unsigned long p) {
  std::int64_t v = 0;
  for (std::int64_t q = k / static_cast<std::int64_t>(p); q > 0; q /= static_cast<std::int64_t>(p)) v += q;
  return v;
}

std::int64_t small_valuation(std::int64_t k, unsigned long p) {
  std::int64_t v = 0;
  while (k % static_cast<std::int64_t>(p) == 0) {
    k /= static_cast<std::int64_t>(p);
    ++v;
  }
  return v;
}

void require_same(const FieldElement& x, const FieldElement& y) {
  if (x.degree() != y.degree() || !x.context() || !y.context() || x.context()->p() != y.context()->p())
    fail(ErrorKind::InvalidArgument, "field elements from different contexts");
}

// Shift needed to make every coefficient integral.
std::int64_t integral_shift(const FieldElement& x) {
  const std::int64_t v = x.min_valuation();
  return v == kInfiniteValuation || v >= 0 ? 0 : -v;
}

// Digits of x * p^shift that are known.
std::int64_t known_digits(const FieldElement& x, std::int64_t shift) {
  std::int64_t cap = kInfiniteValuation;
  for (const auto& c : x.coeffs()) cap = std::min(cap, add_capped(c.absolute_precision(), shift));
  return cap;
}

template <class R>
std::vector<typename R::T> residues(const R& ring, const FieldElement& x, std::int64_t shift) {
  std::vector<typename R::T> out;
  out.reserve(x.coeffs().size());
  for (const auto& c : x.coeffs()) out.push_back(ring.from_mpz(c.scaled_residue(shift, ring.digits)));
  return out;
}

template <class R>
std::vector<typename R::T> poly_residues(const R& ring, const Poly& F) {
  std::vector<typename R::T> out;
  for (std::size_t i = 0; i + 1 < F.size(); ++i) out.push_back(ring.from_mpz(F[i].residue(ring.digits)));
  return out;
}

template <class R>
detail::Determinant<R> norm_at(const R& ring, const std::vector<typename R::T>& x,
                               const std::vector<typename R::T>& f_low) {
  bool any = false;
  for (const auto& c : x) any = any || !ring.is_zero(c);
  if (!any) return {};
  return detail::determinant(ring, detail::multiplication_matrix(ring, x, f_low), x.size());
}

detail::Determinant<detail::ZmodBig> big_norm(const FieldContext& ctx, const FieldElement& x, std::int64_t shift,
                                              std::int64_t digits) {
  const detail::ZmodBig ring(ctx.p(), static_cast<int>(digits));
  return norm_at(ring, residues(ring, x, shift), poly_residues(ring, ctx.F()));
}

}  // namespace

// ---------------------------------------------------------------- context

Context FieldContext::make(unsigned long p, std::int64_t precision, Poly F, std::optional<int> e,
                           std::optional<int> f) {
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
    fail(ErrorKind::InvalidArgument, "p must be prime");
  if (precision < 1 || precision > kMaxPrecision) fail(ErrorKind::InvalidArgument, "precision out of range");
  if (F.size() < 3) fail(ErrorKind::InvalidArgument, "extension degree must be at least 2");
  for (const auto& c : F)
    if (c.prime() != p) fail(ErrorKind::InvalidArgument, "coefficient over a different prime");
  if (!(F.back() == PadicScalar::from_integer(1, p, F.back().precision())))
    fail(ErrorKind::NotMonic, "leading coefficient is not 1");
  for (const auto& c : F)
    if (!c.is_integral()) fail(ErrorKind::NotIntegral, "coefficient outside Z_p");
  const int n = static_cast<int>(F.size()) - 1;
  if (e && f && *e * *f != n) fail(ErrorKind::InvalidArgument, "e * f must equal the degree");

  std::shared_ptr<FieldContext> ctx(new FieldContext());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->precision_ = precision;
  ctx->e_ = e;
  ctx->f_ = f;
  for (int i = 0; i < n; ++i) ctx->poly_prec_ = std::min(ctx->poly_prec_, F[static_cast<std::size_t>(i)].absolute_precision());
  ctx->F_ = std::move(F);

  if (p < (1UL << 31)) {
    ctx->a32_ = static_cast<int>(std::min<std::int64_t>(detail::word_digits(p, 32), ctx->poly_prec_));
    ctx->a64_ = static_cast<int>(std::min<std::int64_t>(detail::word_digits(p, 62), ctx->poly_prec_));
    if (ctx->a32_ > 0) ctx->f32_ = poly_residues(detail::Zmod32(p, ctx->a32_), ctx->F_);
    if (ctx->a64_ > 0) ctx->f64_ = poly_residues(detail::Zmod64(p, ctx->a64_), ctx->F_);
  }
  return ctx;
}

Context FieldContext::make(unsigned long p, std::int64_t precision, const std::vector<mpq_class>& F,
                           std::optional<int> e, std::optional<int> f) {
  Poly poly;
  for (const auto& q : F) poly.push_back(PadicScalar::from_rational(q, p, precision));
  return make(p, precision, std::move(poly), e, f);
}

// ---------------------------------------------------------------- elements

FieldElement::FieldElement(Context ctx, std::vector<PadicScalar> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (!ctx_) fail(ErrorKind::InvalidArgument, "missing context");
  if (static_cast<int>(c_.size()) != ctx_->n()) fail(ErrorKind::InvalidArgument, "coefficient count differs from degree");
  for (const auto& c : c_)
    if (c.prime() != ctx_->p()) fail(ErrorKind::InvalidArgument, "coefficient over a different prime");
}

FieldElement FieldElement::zero(const Context& ctx) {
  return FieldElement(ctx, std::vector<PadicScalar>(static_cast<std::size_t>(ctx->n()),
                                                    PadicScalar::zero(ctx->p(), ctx->precision())));
}

FieldElement FieldElement::constant(const Context& ctx, const PadicScalar& c) {
  FieldElement x = zero(ctx);
  x.c_[0] = c;
  return x;
}

FieldElement FieldElement::one(const Context& ctx) { return constant(ctx, ctx->scalar(1)); }

FieldElement FieldElement::generator(const Context& ctx) { return monomial(ctx, 1); }

FieldElement FieldElement::monomial(const Context& ctx, int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "negative monomial degree");
  const int n = ctx->n();
  if (k < n) {
    FieldElement x = zero(ctx);
    x.c_[static_cast<std::size_t>(k)] = ctx->scalar(1);
    return x;
  }
  FieldElement x = monomial(ctx, n - 1);
  for (int d = n - 1; d < k; ++d) {
    const PadicScalar top = x.c_.back();
    for (int i = n - 1; i > 0; --i) x.c_[static_cast<std::size_t>(i)] = x.c_[static_cast<std::size_t>(i - 1)];
    x.c_[0] = PadicScalar::zero(ctx->p(), ctx->precision());
    if (!top.is_zero())
      for (int i = 0; i < n; ++i) x.c_[static_cast<std::size_t>(i)] -= top * ctx->F()[static_cast<std::size_t>(i)];
  }
  return x;
}

FieldElement FieldElement::from_rationals(const Context& ctx, const std::vector<mpq_class>& coeffs) {
  std::vector<PadicScalar> c;
  for (const auto& q : coeffs) c.push_back(ctx->scalar(q));
  return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::from_integers(const Context& ctx, const std::vector<long>& coeffs) {
  std::vector<PadicScalar> c;
  for (long v : coeffs) c.push_back(ctx->scalar(v));
  return FieldElement(ctx, std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const PadicScalar& c) { return c.is_zero(); });
}

bool FieldElement::is_exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const PadicScalar& c) { return c.is_exact(); });
}

std::int64_t FieldElement::min_valuation() const {
  std::int64_t v = kInfiniteValuation;
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  FieldElement r = x;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
  return r;
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  FieldElement r = x;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= y.c_[i];
  return r;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  const auto& ctx = x.ctx_;
  const std::size_t n = x.c_.size();
  std::vector<PadicScalar> prod(2 * n - 1, PadicScalar::zero(ctx->p(), ctx->precision()));
  for (std::size_t i = 0; i < n; ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!y.c_[j].is_zero()) prod[i + j] += x.c_[i] * y.c_[j];
  }
  const Poly& F = ctx->F();
  for (std::size_t d = 2 * n - 2; d >= n; --d) {
    const PadicScalar top = prod[d];
    if (top.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!F[i].is_zero()) prod[d - n + i] -= top * F[i];
  }
  prod.resize(n);
  return FieldElement(ctx, std::move(prod));
}

FieldElement operator*(const PadicScalar& a, const FieldElement& x) {
  FieldElement r = x;
  for (auto& c : r.c_) c = a * c;
  return r;
}

FieldElement operator*(long a, const FieldElement& x) { return x.context()->scalar(a) * x; }

FieldElement FieldElement::pow(unsigned k) const {
  FieldElement result = one(ctx_);
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

FieldElement FieldElement::times_p_power(std::int64_t k) const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = c.times_p_power(k);
  return r;
}

bool operator==(const FieldElement& x, const FieldElement& y) { return x.c_ == y.c_; }

// ---------------------------------------------------------------- norms

PadicScalar field_norm(const Context& ctx, const FieldElement& x) {
  if (x.is_zero()) return PadicScalar::zero(ctx->p(), ctx->precision());
  const std::int64_t shift = integral_shift(x);
  const std::int64_t cap = std::min({kMaxPrecision, ctx->poly_abs_precision(), known_digits(x, shift)});
  const std::int64_t n = ctx->n();
  for (std::int64_t a = std::min(ctx->precision(), cap); a > 0; a = std::min(2 * a, cap)) {
    auto det = big_norm(*ctx, x, shift, a);
    if (det.certified) {
      if (a - det.valuation < ctx->precision() && a < cap) {
        a = std::min(cap, ctx->precision() + det.valuation);
        det = big_norm(*ctx, x, shift, a);
      }
      return PadicScalar::from_residue(det.value, a, ctx->p(), ctx->precision(), -n * shift);
    }
    if (a == cap) break;
  }
  fail(ErrorKind::PrecisionExhausted, "norm valuation not certified");
}

AbsValue abs_value(const Context& ctx, const FieldElement& x) {
  if (x.is_zero()) return AbsValue::zero_norm();
  const std::int64_t shift = integral_shift(x);
  const std::int64_t cap = std::min({kMaxPrecision, ctx->poly_abs_precision(), known_digits(x, shift)});
  const std::int64_t n = ctx->n();
  auto finish = [&](std::int64_t val) { return AbsValue(Exponent(val - n * shift, n)); };

  if (ctx->digits32() > 0 && ctx->digits32() <= cap) {
    const detail::Zmod32 ring(ctx->p(), ctx->digits32());
    const auto det = norm_at(ring, residues(ring, x, shift), ctx->f_low32());
    if (det.certified) return finish(det.valuation);
  }
  if (ctx->digits64() > ctx->digits32() && ctx->digits64() <= cap) {
    const detail::Zmod64 ring(ctx->p(), ctx->digits64());
    const auto det = norm_at(ring, residues(ring, x, shift), ctx->f_low64());
    if (det.certified) return finish(det.valuation);
  }
  for (std::int64_t a = std::min(ctx->precision(), cap); a > 0; a = std::min(2 * a, cap)) {
    const auto det = big_norm(*ctx, x, shift, a);
    if (det.certified) return finish(det.valuation);
    if (a == cap) break;
  }
  fail(ErrorKind::PrecisionExhausted, "absolute value not certified");
}

namespace detail {

std::optional<std::int64_t> word_norm_valuation(const FieldContext& ctx, const std::vector<std::uint64_t>& x,
                                                bool wide) {
  if (wide) {
    const Zmod64 ring(ctx.p(), ctx.digits64());
    const auto det = norm_at(ring, x, ctx.f_low64());
    if (det.certified) return det.valuation;
    return std::nullopt;
  }
  const Zmod32 ring(ctx.p(), ctx.digits32());
  const auto det = norm_at(ring, x, ctx.f_low32());
  if (det.certified) return det.valuation;
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------- char poly

namespace {

constexpr int kExactCharPolyDegree = 48;

Poly char_poly_exact(const Context& ctx, const FieldElement& x) {
  const std::size_t n = static_cast<std::size_t>(ctx->n());
  std::vector<mpq_class> f(n + 1);
  for (std::size_t i = 0; i <= n; ++i) f[i] = ctx->F()[i].exact_value();
  std::vector<mpq_class> s(n);
  s[0] = static_cast<long>(n);
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class acc = mpq_class(static_cast<long>(k)) * f[n - k];
    for (std::size_t i = 1; i < k; ++i) acc += f[n - i] * s[k - i];
    s[k] = -acc;
  }
  std::vector<mpq_class> xs(n), pw(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x.coeffs()[i].exact_value();
  pw = xs;
  std::vector<mpq_class> P(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += pw[i] * s[i];
    P[k] = tr;
    if (k == n) break;
    std::vector<mpq_class> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(pw[i]) != 0)
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += pw[i] * xs[j];
    for (std::size_t d = 2 * n - 2; d >= n; --d)
      if (sgn(prod[d]) != 0)
        for (std::size_t i = 0; i < n; ++i) prod[d - n + i] -= prod[d] * f[i];
    std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n), pw.begin());
  }
  std::vector<mpq_class> a(n + 1);
  a[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[n - k + i] * P[i];
    a[n - k] = -acc / mpq_class(static_cast<long>(k));
  }
  Poly out;
  for (const auto& c : a) out.push_back(ctx->scalar(c));
  return out;
}

// Newton identities over Z/p^M; returns nullopt when some coefficient vanishes
// at its known precision.
std::optional<Poly> char_poly_padic(const Context& ctx, const FieldElement& x, std::int64_t M) {
  const std::size_t n = static_cast<std::size_t>(ctx->n());
  const unsigned long p = ctx->p();
  const std::int64_t shift = integral_shift(x);
  const detail::ZmodBig R(p, static_cast<int>(M));
  const auto f = poly_residues(R, ctx->F());
  const auto y = residues(R, x, shift);

  std::vector<mpz_class> s(n);
  s[0] = static_cast<unsigned long>(n);
  for (std::size_t k = 1; k < n; ++k) {
    mpz_class acc = f[n - k] * static_cast<unsigned long>(k);
    for (std::size_t i = 1; i < k; ++i) acc += f[n - i] * s[k - i];
    s[k] = R.norm(-acc);
  }
  std::vector<mpz_class> P(n + 1), pw = y;
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += pw[i] * s[i];
    P[k] = R.norm(tr);
    if (k == n) break;
    std::vector<mpz_class> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (pw[i] != 0)
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += pw[i] * y[j];
    for (std::size_t d = 2 * n - 2; d >= n; --d) {
      const mpz_class top = R.norm(prod[d]);
      if (top != 0)
        for (std::size_t i = 0; i < n; ++i) prod[d - n + i] -= top * f[i];
    }
    for (std::size_t i = 0; i < n; ++i) pw[i] = R.norm(prod[i]);
  }

  std::vector<mpz_class> a(n + 1);
  std::vector<std::int64_t> prec(n + 1, M);
  a[n] = 1;
  std::int64_t known = M;
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[n - k + i] * P[i];
    const std::int64_t v = small_valuation(static_cast<std::int64_t>(k), p);
    if (known <= v) return std::nullopt;
    mpz_class m = ppow(p, known);
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    const mpz_class pv = ppow(p, v);
    if (!mpz_divisible_p(acc.get_mpz_t(), pv.get_mpz_t())) return std::nullopt;
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), pv.get_mpz_t());
    known -= v;
    mpz_class unit = static_cast<unsigned long>(k);
    mpz_divexact(unit.get_mpz_t(), unit.get_mpz_t(), pv.get_mpz_t());
    const mpz_class mk = ppow(p, known);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mk.get_mpz_t());
    a[n - k] = -acc * inv;
    mpz_fdiv_r(a[n - k].get_mpz_t(), a[n - k].get_mpz_t(), mk.get_mpz_t());
    prec[n - k] = known;
  }

  Poly out;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] == 0) return std::nullopt;
    out.push_back(PadicScalar::from_residue(a[j], prec[j], p, ctx->precision(),
                                            -shift * static_cast<std::int64_t>(n - j)));
  }
  out.push_back(ctx->scalar(1));
  return out;
}

}  // namespace

Poly char_poly(const Context& ctx, const FieldElement& x) {
  const std::int64_t n = ctx->n();
  const bool exact = x.is_exact() && ctx->poly_is_exact();
  if (exact && n <= kExactCharPolyDegree) return char_poly_exact(ctx, x);
  const std::int64_t shift = integral_shift(x);
  const std::int64_t cap = std::min({kMaxPrecision, ctx->poly_abs_precision(), known_digits(x, shift)});
  std::int64_t m = std::min(cap, ctx->precision() + factorial_valuation(n, ctx->p()));
  while (m > 0) {
    if (auto poly = char_poly_padic(ctx, x, m)) return *poly;
    if (m >= cap) break;
    m = std::min(cap, 2 * m);
  }
  fail(ErrorKind::PrecisionExhausted, "characteristic polynomial coefficient not certified");
}

FieldElement evaluate(const Poly& poly, const FieldElement& x) {
  FieldElement acc = FieldElement::zero(x.context());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + FieldElement::constant(x.context(), *it);
  return acc;
}

bool is_eisenstein(unsigned long p, const Poly& poly) {
  if (poly.size() < 2 || !(poly.back() == PadicScalar::from_integer(1, p, poly.back().precision()))) return false;
  if (poly[0].valuation() != 1) return false;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i)
    if (poly[i].valuation() < 1) return false;
  return true;
}

// ---------------------------------------------------------------- solves

std::vector<PadicScalar> coordinates_in(const Context& ctx, const FieldElement& target,
                                        const std::vector<FieldElement>& vectors) {
  const std::size_t n = static_cast<std::size_t>(ctx->n());
  const std::size_t m = vectors.size();
  if (m == 0) {
    if (target.is_zero()) return {};
    fail(ErrorKind::NotInSpan, "nonzero target and empty family");
  }
  if (m > n) fail(ErrorKind::SingularSystem, "more vectors than the degree");
  // rows: coordinates; columns: vectors, then the target
  std::vector<std::vector<PadicScalar>> a(n, std::vector<PadicScalar>(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = vectors[j][static_cast<int>(i)];
    a[i][m] = target[static_cast<int>(i)];
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (!a[r][c].is_zero() && (piv == n || a[r][c].valuation() < a[piv][c].valuation())) piv = r;
    if (piv == n) fail(ErrorKind::SingularSystem, "dependent vectors");
    std::swap(a[piv], a[c]);
    const PadicScalar inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const PadicScalar factor = a[r][c] * inv;
      a[r][c] = PadicScalar::zero(ctx->p(), ctx->precision());
      for (std::size_t k = c + 1; k <= m; ++k) {
        if (a[c][k].is_zero()) continue;
        if (k < m) {
          a[r][k] -= factor * a[c][k];
          continue;
        }
        // an approximate right-hand side that cancels is zero to the known digits
        try {
          a[r][k] -= factor * a[c][k];
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PrecisionExhausted) throw;
          a[r][k] = PadicScalar::zero(ctx->p(), ctx->precision());
        }
      }
    }
  }
  for (std::size_t r = m; r < n; ++r)
    if (!a[r][m].is_zero()) fail(ErrorKind::NotInSpan, "target outside the span");
  std::vector<PadicScalar> x(m);
  for (std::size_t c = m; c-- > 0;) {
    PadicScalar acc = a[c][m];
    for (std::size_t k = c + 1; k < m; ++k)
      if (!a[c][k].is_zero() && !x[k].is_zero()) acc -= a[c][k] * x[k];
    x[c] = acc / a[c][c];
  }
  return x;
}

}  // namespace padiclat
