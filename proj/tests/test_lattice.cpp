#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padiclat/lattice.hpp"
#include "padiclat/reduction.hpp"
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

Context sqrt2() {
  static const Context ctx = ints(2, {-2, 0, 1});
  return ctx;
}

FieldElement elem(const Context& ctx, const std::vector<long>& c) { return FieldElement::from_integers(ctx, c); }

Exponent ex(long a, long b = 1) { return Exponent(a, b); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

std::vector<FieldElement> powers(const FieldElement& x, int count) {
  std::vector<FieldElement> out;
  FieldElement y = FieldElement::one(x.context());
  for (int i = 0; i < count; ++i) {
    out.push_back(y);
    y *= x;
  }
  return out;
}

FieldElement random_integral(const Context& ctx, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(0, bound - 1);
  std::vector<long> c;
  for (int i = 0; i < ctx->n(); ++i) c.push_back(d(rng));
  return elem(ctx, c);
}

bool integral(const std::vector<PadicScalar>& c) {
  for (const auto& a : c)
    if (!a.is_zero() && a.valuation() < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("exponent classes") {
  CHECK(exponent_class(AbsValue(ex(0)), 20) == 0);
  CHECK(exponent_class(AbsValue(ex(21, 20)), 20) == 1);
  CHECK(exponent_class(AbsValue(ex(-1, 20)), 20) == 19);
}

TEST_CASE("orthogonality") {
  auto t = toy();
  auto z = FieldElement::generator(t);
  CHECK_FALSE(is_orthogonal(t, {FieldElement::one(t), z}));
  CHECK(is_orthogonal(t, powers(z - FieldElement::one(t), 20)));
  CHECK(is_orthogonal(t, {z}));
  auto s = sqrt2();
  CHECK(is_orthogonal(s, {FieldElement::one(s), FieldElement::generator(s)}));
  CHECK_FALSE(is_orthogonal(s, {FieldElement::one(s), elem(s, {1, 1})}));
  CHECK(is_orthogonal(s, {elem(s, {1, 1}), elem(s, {0, 2})}));
}

TEST_CASE("lvp oracle") {
  auto s = sqrt2();
  auto one = FieldElement::one(s);

  auto r1 = lvp_oracle(s, {one});
  CHECK(r1.lambda1 == AbsValue(ex(0)));
  CHECK(r1.lambda2 == AbsValue(ex(1)));
  CHECK(r1.witness == elem(s, {2, 0}));

  auto r2 = lvp_oracle(s, {one, elem(s, {1, 1})});
  CHECK(r2.lambda1 == AbsValue(ex(0)));
  CHECK(r2.lambda2 == AbsValue(ex(1, 2)));
  CHECK(abs_value(s, r2.witness) == r2.lambda2);
  CHECK(in_lattice(s, r2.witness, {one, elem(s, {1, 1})}));

  auto r3 = lvp_oracle(s, {one, elem(s, {0, 2})});
  CHECK(r3.lambda2 == AbsValue(ex(1)));
  CHECK(r3.witness == elem(s, {2, 0}));

  CHECK(kind_of([&] { lvp_oracle(toy(), powers(FieldElement::generator(toy()), 20), 2, 1000); }) ==
        ErrorKind::BudgetExceeded);
}

TEST_CASE("successive maxima") {
  auto t = toy();
  auto sm = successive_maxima(t, powers(FieldElement::generator(t), 20));
  REQUIRE(sm.size() == 20);
  for (long i = 0; i < 20; ++i) CHECK(sm[static_cast<std::size_t>(i)] == AbsValue(ex(i, 20)));

  auto s = sqrt2();
  CHECK(successive_maxima(s, {FieldElement::one(s)}) == std::vector<AbsValue>{AbsValue(ex(0))});
  auto b = std::vector<FieldElement>{FieldElement::one(s), elem(s, {1, 1})};
  CHECK(successive_maxima(s, b) == std::vector<AbsValue>{AbsValue(ex(0)), AbsValue(ex(1, 2))});
  CHECK(successive_maxima_oracle(s, b) == successive_maxima(s, b));
}

TEST_CASE("completion") {
  auto t = toy();
  auto gamma = FieldElement::generator(t) - FieldElement::one(t);
  auto full = complete_orthogonal(t, {}, gamma);
  CHECK(full == powers(gamma, 20));

  CHECK(kind_of([&] { complete_orthogonal(t, {FieldElement::one(t), FieldElement::generator(t)}, gamma); }) ==
        ErrorKind::ClassCollision);
  CHECK(kind_of([&] { complete_orthogonal(t, {}, FieldElement::generator(t)); }) == ErrorKind::NotUniformizer);

  auto part = std::vector<FieldElement>{gamma.pow(3), FieldElement::constant(t, t->scalar(2))};
  auto done = complete_orthogonal(t, part, gamma);
  CHECK(done.size() == 20);
  CHECK(is_orthogonal(t, done));
}

TEST_CASE("closest vectors") {
  auto s = sqrt2();
  auto one = FieldElement::one(s);
  auto root = FieldElement::generator(s);

  auto r = cvp_orthogonal(s, {one}, {root}, elem(s, {1, 1}));
  CHECK(r.v == one);
  CHECK(r.dist == AbsValue(ex(1, 2)));

  auto inside = cvp_orthogonal(s, {one, root}, {}, elem(s, {3, -5}));
  CHECK(inside.dist.is_zero());
  CHECK(inside.v == elem(s, {3, -5}));

  // 1/2 + sqrt2/4: drop both fractional parts
  auto frac = cvp_orthogonal(s, {one, root}, {}, FieldElement::from_rationals(s, {mpq_class(1, 2), mpq_class(1, 4)}));
  CHECK(frac.v.is_zero());
  CHECK(frac.dist == AbsValue(ex(-3, 2)));
}

TEST_CASE("oracle agreement on random lattices") {
  std::mt19937_64 rng(7);
  struct Case {
    unsigned long p;
    std::vector<long> F;
  };
  const std::vector<Case> cases = {
      {2, {-2, 0, 1}}, {3, {3, 0, 1}}, {2, {2, 2, 0, 1}}, {3, {-3, 3, 0, 1}}, {5, {5, 0, 1}}, {2, {-2, 0, 0, 0, 1}},
  };
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& c = cases[static_cast<std::size_t>(trial) % cases.size()];
    auto ctx = ints(c.p, c.F);
    const int n = ctx->n();
    auto pi = FieldElement::generator(ctx);
    // Random unimodular mix of an orthogonal basis with distinct classes.
    std::vector<FieldElement> ortho;
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned long>(n));
    std::vector<int> js;
    for (int j = 0; j < n; ++j) js.push_back(j);
    std::shuffle(js.begin(), js.end(), rng);
    js.resize(static_cast<std::size_t>(m));
    std::sort(js.begin(), js.end());
    for (int j : js) ortho.push_back(pi.pow(static_cast<unsigned>(j)));
    std::vector<FieldElement> basis = ortho;
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        if (k != i && rng() % 2) basis[static_cast<std::size_t>(i)] += ctx->scalar(static_cast<long>(rng() % c.p)) *
                                                                       basis[static_cast<std::size_t>(k)];
    std::shuffle(basis.begin(), basis.end(), rng);

    auto oracle = lvp_oracle(ctx, basis);
    auto alg = find_second_longest(ctx, basis);
    CHECK(alg.lambda1 == oracle.lambda1);
    CHECK(alg.lambda2 == oracle.lambda2);
    CHECK(abs_value(ctx, alg.witness) == alg.lambda2);
    CHECK(in_lattice(ctx, alg.witness, basis));
    CHECK(alg.abs_value_count <= second_longest_bound(static_cast<std::uint64_t>(m), c.p));

    auto sm = successive_maxima(ctx, basis);
    CHECK(sm == successive_maxima_oracle(ctx, basis));
    CHECK(sm == successive_maxima(ctx, ortho));
    CHECK(sm.front() == oracle.lambda1);

    // CVP against random lattice vectors.
    std::vector<FieldElement> h;
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    for (int j : js) used[static_cast<std::size_t>(j)] = 1;
    for (int j = 0; j < n; ++j)
      if (!used[static_cast<std::size_t>(j)]) h.push_back(pi.pow(static_cast<unsigned>(j)));
    auto orth = orthogonalize(ctx, basis);
    auto target = random_integral(ctx, rng, 64).times_p_power(-1);
    auto cv = cvp_orthogonal(ctx, orth.basis, h, target);
    CHECK(in_lattice(ctx, cv.v, basis));
    CHECK(abs_value(ctx, target - cv.v) == cv.dist);
    for (int w = 0; w < 8; ++w) {
      FieldElement lv = FieldElement::zero(ctx);
      for (const auto& b : basis) lv += ctx->scalar(static_cast<long>(rng() % (c.p * c.p))) * b;
      CHECK(cv.dist <= abs_value(ctx, target - lv));
    }
    auto again = cvp_orthogonal(ctx, orth.basis, h, target - cv.v);
    CHECK(again.dist == cv.dist);
    CHECK(again.v.is_zero());
    CHECK(integral(coordinates_in(ctx, cv.v, basis)));
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("fast path agrees with enumeration") {
  auto ctx = ints(3, {3, 0, 0, 1});
  auto pi = FieldElement::generator(ctx);
  std::vector<FieldElement> v = {elem(ctx, {1, 1, 0}), pi, pi * pi + elem(ctx, {0, 3, 0})};
  CHECK(is_orthogonal(ctx, v));
  // Two unit vectors: only enumeration can decide.
  CHECK_FALSE(is_orthogonal(ctx, {FieldElement::one(ctx), elem(ctx, {-2, 0, 0})}));
  auto unr = ints(2, {1, 1, 1});
  CHECK(is_orthogonal(unr, {FieldElement::one(unr), FieldElement::generator(unr)}));
  CHECK(is_orthogonal(unr, {elem(unr, {1, 1}), FieldElement::generator(unr)}));
  CHECK_FALSE(is_orthogonal(unr, {FieldElement::one(unr), elem(unr, {3, 0})}));
}
