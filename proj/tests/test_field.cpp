#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padiclat/field.hpp"
#include "toy_data.hpp"

using namespace padiclat;

namespace {

Context ints(unsigned long p, const std::vector<long>& F, std::int64_t n = kDefaultPrecision) {
  std::vector<mpq_class> q(F.begin(), F.end());
  return FieldContext::make(p, n, q);
}

Context toy() {
  static const Context ctx = ints(2, kToyF);
  return ctx;
}

FieldElement elem(const Context& ctx, const std::vector<long>& c) { return FieldElement::from_integers(ctx, c); }

Exponent exponent(const Context& ctx, const FieldElement& x) { return abs_value(ctx, x).exponent(); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("contexts") {
  CHECK(ints(2, {-2, 0, 1})->n() == 2);
  CHECK(toy()->n() == 20);
  CHECK(kind_of([] { ints(2, {-2, 0, 2}); }) == ErrorKind::NotMonic);
  CHECK(kind_of([] { FieldContext::make(2, 64, std::vector<mpq_class>{mpq_class(1, 2), 0, 1}); }) ==
        ErrorKind::NotIntegral);
}

TEST_CASE("element arithmetic") {
  auto ctx = ints(2, {-2, 0, 1});
  auto s = FieldElement::generator(ctx);
  CHECK(s * s == elem(ctx, {2, 0}));
  CHECK((s + (-s)).is_zero());

  auto t = toy();
  auto z = FieldElement::generator(t);
  auto top = FieldElement::monomial(t, 19);
  std::vector<long> expect;
  for (int i = 0; i < 20; ++i) expect.push_back(-kToyF[static_cast<std::size_t>(i)]);
  CHECK(z * top == elem(t, expect));
  CHECK(FieldElement::monomial(t, 20) == elem(t, expect));
  CHECK(z.pow(23) == FieldElement::monomial(t, 23));
}

TEST_CASE("field norm") {
  auto ctx = ints(2, {-2, 0, 1});
  auto one = field_norm(ctx, FieldElement::one(ctx));
  CHECK(one.valuation() == 0);
  CHECK(one.residue(64) == 1);
  auto n2 = field_norm(ctx, FieldElement::generator(ctx));
  CHECK(n2.valuation() == 1);
  CHECK(n2.residue(64) == ppow(2, 64) - 2);

  auto t = toy();
  auto g = FieldElement::generator(t) - FieldElement::one(t);
  CHECK(field_norm(t, g).valuation() == 1);

  // p = 3, F = x^2 - 2x - 2: N(1 + z) = F(-1) = 1, N(2 + z) = F(-2) = 6
  auto c3 = ints(3, {-2, -2, 1});
  CHECK(field_norm(c3, elem(c3, {1, 1})).residue(20) == 1);
  CHECK(field_norm(c3, elem(c3, {2, 1})).residue(20) == 6);
}

TEST_CASE("absolute values on the toy field") {
  auto t = toy();
  auto one = FieldElement::one(t);
  CHECK(abs_value(t, one).exponent() == Exponent(0));
  CHECK(abs_value(t, FieldElement::zero(t)).is_zero());
  const std::vector<std::pair<std::vector<int>, Exponent>> table = {
      {{1, 3, 5, 7, 9, 11, 13, 15, 17, 19}, Exponent(1, 20)},
      {{2, 6, 10, 14, 18}, Exponent(1, 10)},
      {{4, 12}, Exponent(1, 5)},
      {{8}, Exponent(2, 5)},
      {{16}, Exponent(4, 5)},
  };
  for (const auto& [is, e] : table)
    for (int i : is) CHECK(exponent(t, FieldElement::monomial(t, i) - one) == e);
  // non-integral input
  auto half = FieldElement::constant(t, t->scalar(mpq_class(1, 2)));
  CHECK(exponent(t, half) == Exponent(-1));
  CHECK(exponent(t, half * (FieldElement::generator(t) - one)) == Exponent(-19, 20));
}

TEST_CASE("characteristic polynomials") {
  auto t = toy();
  auto F = char_poly(t, FieldElement::generator(t));
  for (std::size_t i = 0; i < F.size(); ++i) CHECK(F[i].exact_value() == kToyF[i]);

  auto zero = char_poly(t, FieldElement::zero(t));
  for (std::size_t i = 0; i < 20; ++i) CHECK(zero[i].is_zero());
  CHECK(zero[20].exact_value() == 1);

  auto c = ints(3, {-3, 0, 1});
  auto cp = char_poly(c, elem(c, {1, 1}));
  CHECK(cp[0].exact_value() == -2);
  CHECK(cp[1].exact_value() == -2);
  CHECK(cp[2].exact_value() == 1);
}

TEST_CASE("approximate characteristic polynomial") {
  auto t = toy();
  std::vector<long> xc(20, 0);
  xc[0] = 1;
  xc[1] = 1;
  xc[3] = 3;
  auto x = elem(t, xc);
  auto exact = char_poly(t, x);
  std::vector<PadicScalar> approx_coeffs;
  for (const auto& c : x.coeffs()) approx_coeffs.push_back(c.approximate());
  auto approx = char_poly(t, FieldElement(t, approx_coeffs));
  for (std::size_t i = 0; i < exact.size(); ++i) {
    CHECK(approx[i].valuation() == exact[i].valuation());
    CHECK(approx[i].residue(100) == exact[i].residue(100));
  }
  // Cayley-Hamilton
  CHECK(evaluate(exact, x).is_zero());
}

TEST_CASE("eisenstein") {
  auto poly = [](unsigned long p, const std::vector<long>& c) {
    Poly out;
    for (long v : c) out.push_back(PadicScalar::from_integer(v, p, 64));
    return out;
  };
  CHECK(is_eisenstein(2, poly(2, {-2, 0, 1})));
  CHECK_FALSE(is_eisenstein(2, poly(2, kToyF)));
  CHECK_FALSE(is_eisenstein(2, poly(2, {-4, 0, 1})));
  CHECK(is_eisenstein(2, poly(2, {2, 2, 0, 0, 1})));
}

TEST_CASE("coordinates") {
  auto t = toy();
  auto one = FieldElement::one(t);
  auto z = FieldElement::generator(t);
  auto a = coordinates_in(t, z, {one, z - one});
  CHECK(a[0].exact_value() == 1);
  CHECK(a[1].exact_value() == 1);

  std::vector<FieldElement> basis = {one, z, z * z + one, z.pow(5)};
  auto b = coordinates_in(t, basis[0], basis);
  CHECK(b[0].exact_value() == 1);
  CHECK(b[1].is_zero());

  CHECK(kind_of([&] { coordinates_in(t, z.pow(7), basis); }) == ErrorKind::NotInSpan);
  CHECK(kind_of([&] { coordinates_in(t, z, {z, 2L * z}); }) == ErrorKind::SingularSystem);
}

TEST_CASE("property: field absolute value is multiplicative and ultrametric") {
  std::mt19937_64 rng(7);
  const std::vector<Context> ctxs = {ints(2, {-2, 0, 1}), ints(3, {-2, -2, 1}), ints(2, {2, 2, 0, 0, 1}),
                                     ints(5, {5, 5, 5, 1}), ints(2, {1, 1, 1})};
  std::uniform_int_distribution<long> coef(-40, 40);
  int checks = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& ctx = ctxs[static_cast<std::size_t>(trial) % ctxs.size()];
    std::vector<long> a(static_cast<std::size_t>(ctx->n())), b(a.size());
    for (auto& v : a) v = coef(rng);
    for (auto& v : b) v = coef(rng);
    auto x = elem(ctx, a), y = elem(ctx, b);
    if (x.is_zero() || y.is_zero()) continue;
    const auto ex = abs_value(ctx, x), ey = abs_value(ctx, y);
    CHECK(abs_value(ctx, x * y) == ex * ey);
    auto s = x + y;
    if (!s.is_zero()) {
      const auto es = abs_value(ctx, s);
      CHECK(es <= std::max(ex, ey));
      if (ex != ey) CHECK(es == std::max(ex, ey));
    }
    ++checks;
  }
  CHECK(checks > 9900);
}
