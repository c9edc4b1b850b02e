#include "padiclat/lattice.hpp"

#include <algorithm>
#include <map>

#include "padiclat/detail/zmod.hpp"
#include "padiclat/reduction.hpp"

namespace padiclat {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Floor and ceiling of a rational exponent.
std::int64_t floor_of(const Exponent& e) { return floor_div(e.numerator(), e.denominator()); }
std::int64_t ceil_of(const Exponent& e) { return ceil_div(e.numerator(), e.denominator()); }

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > budget / base) fail(ErrorKind::BudgetExceeded, "enumeration larger than the budget");
    r *= base;
  }
  return r;
}

FieldElement combination(const Context& ctx, const std::vector<FieldElement>& basis, const std::vector<long>& a) {
  FieldElement x = FieldElement::zero(ctx);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (a[i] != 0) x += ctx->scalar(a[i]) * basis[i];
  return x;
}

struct Bucket {
  std::uint64_t count = 0;
  std::vector<long> first;
};

// Norm histogram of sum a_i beta_i over a in [0, p^depth)^m, keyed by the
// valuation of the norm; zero vectors are counted separately.
struct Histogram {
  std::map<std::int64_t, Bucket> buckets;
  std::uint64_t zeros = 0;
  std::uint64_t total = 0;
};

Histogram enumerate_norms(const Context& ctx, const std::vector<FieldElement>& basis, int depth, std::uint64_t budget) {
  if (basis.empty()) fail(ErrorKind::InvalidArgument, "empty basis");
  if (depth < 1) fail(ErrorKind::InvalidArgument, "depth must be positive");
  const std::size_t m = basis.size();
  const std::size_t n = static_cast<std::size_t>(ctx->n());
  const unsigned long p = ctx->p();
  const std::uint64_t P = checked_power(p, static_cast<std::uint64_t>(depth), budget);
  const std::uint64_t total = checked_power(P, m, budget);

  std::int64_t shift = 0;
  for (const auto& b : basis) {
    const std::int64_t v = b.min_valuation();
    if (v != kInfiniteValuation && v < 0) shift = std::max(shift, -v);
  }
  const int a = ctx->digits32();
  bool fast = a > 0;
  for (const auto& b : basis)
    for (const auto& c : b.coeffs())
      if (!c.is_exact() && c.absolute_precision() + shift < a) fast = false;

  Histogram h;
  h.total = total;
  std::vector<long> digits(m, 0);
  auto record = [&](std::int64_t val) {
    auto& bucket = h.buckets[val];
    if (bucket.count++ == 0) bucket.first = digits;
  };
  auto slow = [&]() {
    const FieldElement x = combination(ctx, basis, digits);
    const AbsValue av = abs_value(ctx, x);
    if (av.is_zero()) {
      ++h.zeros;
      return;
    }
    record((av.exponent() * Exponent(static_cast<std::int64_t>(n))).numerator());
  };

  if (!fast) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      slow();
      for (std::size_t i = 0; i < m; ++i) {
        if (++digits[i] < static_cast<long>(P)) break;
        digits[i] = 0;
      }
    }
    return h;
  }

  const detail::Zmod32 ring(p, a);
  std::vector<std::vector<std::uint64_t>> step(m), wrap(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t r = ring.from_mpz(basis[i][static_cast<int>(j)].scaled_residue(shift, a));
      step[i].push_back(r);
      // moving digit i from P-1 back to 0 subtracts (P-1) beta_i
      wrap[i].push_back(ring.mul(r, ring.from_mpz(mpz_class(static_cast<unsigned long>(P - 1)))));
    }
  }
  std::vector<std::uint64_t> cur(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (idx == 0) {
      ++h.zeros;
    } else {
      const auto val = detail::word_norm_valuation(*ctx, cur, false);
      if (val) record(*val - static_cast<std::int64_t>(n) * shift);
      else slow();
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (++digits[i] < static_cast<long>(P)) {
        for (std::size_t j = 0; j < n; ++j) cur[j] = ring.add(cur[j], step[i][j]);
        break;
      }
      digits[i] = 0;
      for (std::size_t j = 0; j < n; ++j) cur[j] = ring.sub(cur[j], wrap[i][j]);
    }
  }
  return h;
}

}  // namespace

int exponent_class(const AbsValue& a, int n) {
  const Exponent& e = a.exponent();
  const Exponent frac = e - Exponent(floor_of(e));
  const Exponent j = frac * Exponent(n);
  if (j.denominator() != 1) fail(ErrorKind::InvalidArgument, "exponent denominator does not divide the degree");
  return static_cast<int>(j.numerator());
}

bool is_orthogonal(const Context& ctx, const std::vector<FieldElement>& vectors, std::uint64_t budget) {
  const int n = ctx->n();
  std::map<int, std::vector<FieldElement>> classes;
  for (const auto& v : vectors) {
    const AbsValue a = abs_value(ctx, v);
    if (a.is_zero()) return false;
    // scale into the norm band [p^-1, 1)
    classes[exponent_class(a, n)].push_back(v.times_p_power(-floor_of(a.exponent())));
  }
  std::uint64_t work = 0;
  for (const auto& [cls, members] : classes)
    if (members.size() > 1) work += checked_power(ctx->p(), members.size(), budget);
  if (work > budget) fail(ErrorKind::BudgetExceeded, "orthogonality check larger than the budget");

  const long p = static_cast<long>(ctx->p());
  for (const auto& [cls, members] : classes) {
    const std::size_t k = members.size();
    if (k < 2) continue;
    const AbsValue target(Exponent(cls, n));
    // tuples whose first nonzero digit is 1
    for (std::size_t lead = 0; lead + 1 < k; ++lead) {
      std::vector<long> digits(k, 0);
      digits[lead] = 1;
      while (true) {
        std::size_t i = lead + 1;
        for (; i < k; ++i) {
          if (++digits[i] < p) break;
          digits[i] = 0;
        }
        if (i == k) break;
        if (abs_value(ctx, combination(ctx, members, digits)) != target) return false;
      }
    }
  }
  return true;
}

LvpResult lvp_oracle(const Context& ctx, const std::vector<FieldElement>& basis, int depth, std::uint64_t budget) {
  const Histogram h = enumerate_norms(ctx, basis, depth, budget);
  const std::int64_t n = ctx->n();
  // candidates: valuation -> digits, enumeration first, then p * beta_i
  std::map<std::int64_t, std::vector<long>> cands;
  for (const auto& [val, bucket] : h.buckets) cands.emplace(val, bucket.first);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const AbsValue a = abs_value(ctx, basis[i]).scaled_by_p_power(1);
    const Exponent e = a.exponent() * Exponent(n);
    std::vector<long> digits(basis.size(), 0);
    digits[i] = static_cast<long>(ctx->p());
    cands.emplace(e.numerator(), digits);
  }
  if (cands.size() < 2) fail(ErrorKind::OracleInconclusive, "no norm below the maximum at this depth");
  auto it = cands.begin();
  LvpResult r;
  r.lambda1 = AbsValue(Exponent(it->first, n));
  ++it;
  r.lambda2 = AbsValue(Exponent(it->first, n));
  r.witness_digits = it->second;
  r.witness = combination(ctx, basis, it->second);
  r.enumerated = h.total;
  return r;
}

std::vector<AbsValue> successive_maxima_oracle(const Context& ctx, const std::vector<FieldElement>& basis, int depth,
                                               std::uint64_t budget) {
  const Histogram h = enumerate_norms(ctx, basis, depth, budget);
  const std::int64_t n = ctx->n();
  const std::int64_t m = static_cast<std::int64_t>(basis.size());
  if (h.buckets.empty()) fail(ErrorKind::OracleInconclusive, "only the zero vector was enumerated");
  const std::int64_t w0 = h.buckets.begin()->first;
  const std::int64_t window = w0 + n * depth;

  std::vector<std::int64_t> levels;
  for (const auto& [w, bucket] : h.buckets)
    if (w < window) levels.push_back(w);
  levels.push_back(window);

  // D(w) = depth*m - log_p #{representatives with valuation >= w}
  auto deficiency = [&](std::int64_t w) {
    std::uint64_t count = h.zeros;
    for (auto it = h.buckets.lower_bound(w); it != h.buckets.end(); ++it) count += it->second.count;
    std::int64_t lg = 0;
    while (count > 1) {
      if (count % ctx->p() != 0) fail(ErrorKind::OracleInconclusive, "ball count is not a power of p");
      count /= ctx->p();
      ++lg;
    }
    return depth * m - lg;
  };

  std::vector<std::int64_t> found;
  for (std::size_t j = 0; j + 1 < levels.size() && static_cast<std::int64_t>(found.size()) < m; ++j) {
    const std::int64_t w = levels[j];
    std::int64_t mult = deficiency(levels[j + 1]) - deficiency(w);
    for (std::int64_t mu : found)
      if (mu < w && (w - mu) % n == 0) --mult;
    if (mult < 0) fail(ErrorKind::OracleInconclusive, "inconsistent ball counts");
    for (std::int64_t c = 0; c < mult; ++c) found.push_back(w);
  }
  if (static_cast<std::int64_t>(found.size()) != m)
    fail(ErrorKind::OracleInconclusive, "successive maxima not all visible at this depth");
  std::vector<AbsValue> out;
  for (std::int64_t w : found) out.emplace_back(Exponent(w, n));
  return out;
}

std::vector<AbsValue> successive_maxima(const Context& ctx, const std::vector<FieldElement>& basis) {
  auto norms = orthogonalize(ctx, basis).norms;
  std::sort(norms.begin(), norms.end(), std::greater<>());
  return norms;
}

std::vector<FieldElement> complete_orthogonal(const Context& ctx, const std::vector<FieldElement>& partial,
                                              const FieldElement& gamma) {
  const int n = ctx->n();
  if (abs_value(ctx, gamma) != AbsValue(Exponent(1, n))) fail(ErrorKind::NotUniformizer, "gamma is not a uniformizer");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& v : partial) {
    const AbsValue a = abs_value(ctx, v);
    if (a.is_zero()) fail(ErrorKind::SingularSystem, "zero vector in partial basis");
    const auto j = static_cast<std::size_t>(exponent_class(a, n));
    if (seen[j]) fail(ErrorKind::ClassCollision, "two vectors share an exponent class");
    seen[j] = true;
  }
  std::vector<FieldElement> out = partial;
  FieldElement power = FieldElement::one(ctx);
  for (int j = 0; j < n; ++j) {
    if (!seen[static_cast<std::size_t>(j)]) out.push_back(power);
    if (j + 1 < n) power = power * gamma;
  }
  return out;
}

CvpResult cvp_orthogonal(const Context& ctx, const std::vector<FieldElement>& g, const std::vector<FieldElement>& h,
                         const FieldElement& t) {
  std::vector<FieldElement> all = g;
  all.insert(all.end(), h.begin(), h.end());
  const auto coords = coordinates_in(ctx, t, all);
  const std::size_t m = g.size();

  std::vector<AbsValue> gnorm;
  for (const auto& x : g) gnorm.push_back(abs_value(ctx, x));
  AbsValue dist = AbsValue::zero_norm();
  for (std::size_t k = 0; k < m; ++k)
    if (coords[k].valuation() < 0) dist = std::max(dist, gnorm[k].scaled_by_p_power(coords[k].valuation()));
  for (std::size_t j = m; j < all.size(); ++j)
    if (!coords[j].is_zero()) dist = std::max(dist, abs_value(ctx, all[j]).scaled_by_p_power(coords[j].valuation()));

  CvpResult r;
  r.dist = dist;
  r.v = FieldElement::zero(ctx);
  for (std::size_t k = 0; k < m; ++k) {
    PadicScalar a = coords[k].integral_part();
    if (!dist.is_zero()) {
      const std::int64_t tk = std::max<std::int64_t>(0, ceil_of(dist.exponent() - gnorm[k].exponent()));
      a = PadicScalar::from_rational(mpq_class(a.residue(tk)), ctx->p(), ctx->precision());
    }
    if (!a.is_zero()) r.v += a * g[k];
    r.coords.push_back(a);
  }
  if (dist.is_zero()) r.v = t;
  return r;
}

bool in_lattice(const Context& ctx, const FieldElement& x, const std::vector<FieldElement>& basis) {
  try {
    const auto a = coordinates_in(ctx, x, basis);
    return std::all_of(a.begin(), a.end(), [](const PadicScalar& c) { return c.is_integral(); });
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInSpan) return false;
    throw;
  }
}

}  // namespace padiclat
