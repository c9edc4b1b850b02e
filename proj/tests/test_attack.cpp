#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "padiclat/attack.hpp"
#include "padiclat/io.hpp"

using namespace padiclat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

const ParsedKey& toy_key() {
  static const ParsedKey key = parse_key_file(read_file(std::string(PADICLAT_FIXTURES) + "/toy.pub"));
  return key;
}

Context ints(unsigned long p, const std::vector<long>& F) {
  std::vector<mpq_class> q(F.begin(), F.end());
  return FieldContext::make(p, kDefaultPrecision, q);
}

}  // namespace

TEST_CASE("uniformizer recovery") {
  const auto& pk = toy_key().pub;
  auto u = recover_uniformizer(pk);
  CHECK(u.lambda2 == AbsValue(Exponent(1, 20)));
  CHECK(u.gamma == FieldElement::generator(pk.ctx) - FieldElement::one(pk.ctx));
  CHECK(u.abs_value_count <= second_longest_bound(20, 2));
  CHECK(kind_of([&] { uniformizer_shortcut(pk); }) == ErrorKind::NotCoprime);

  auto c3 = ints(3, {-2, -2, 1});
  auto g = recover_uniformizer(c3);
  CHECK(abs_value(c3, g.gamma) == AbsValue(Exponent(1, 2)));
  auto s = uniformizer_shortcut(c3);
  CHECK(s == FieldElement::from_integers(c3, {2, 1}));
  CHECK(abs_value(c3, s) == AbsValue(Exponent(1, 2)));

  auto eis = ints(3, {3, 3, 0, 0, 1});
  CHECK(uniformizer_shortcut(eis) == FieldElement::generator(eis));

  auto unr = ints(2, {1, 1, 1});
  CHECK(kind_of([&] { recover_uniformizer(unr); }) == ErrorKind::ReductionFailed);
}

TEST_CASE("toy ciphertext") {
  const auto& key = toy_key();
  const auto C = parse_ciphertext(key, read_file(std::string(PADICLAT_FIXTURES) + "/toy.ct"));
  auto basis = prepare_attack(key.pub);
  CHECK_FALSE(basis.used_shortcut);
  CHECK(basis.g.size() == 4);
  CHECK(basis.h.size() == 16);
  auto r = attack_decrypt(key.pub, basis, C);
  CHECK(r.plaintext == std::vector<unsigned long>{1, 1, 0, 1});
  std::vector<PadicScalar> expect;
  for (long c : {-1L, 1L, 0L, 1L}) expect.push_back(key.pub.ctx->scalar(c));
  CHECK(r.beta_coords == expect);
  CHECK(r.v == key.pub.beta[1] + key.pub.beta[3] - key.pub.beta[0]);
  // C = beta_1 + beta_2 + beta_4 + noise with the noise below the bound
  const auto noise = C - key.pub.beta[0] - key.pub.beta[1] - key.pub.beta[3];
  CHECK(abs_value(key.pub.ctx, noise) < AbsValue(Exponent(1, 5)));

  CHECK(attack_decrypt(key.pub, basis, FieldElement::zero(key.pub.ctx)).plaintext ==
        std::vector<unsigned long>{0, 0, 0, 0});
}

TEST_CASE("attack against random keys") {
  Shake256Stream rng(std::vector<std::uint8_t>{'a', 't', 'k'});
  {
    auto kp = random_keypair(3, 4, 2, mpq_class(1, 2), rng);
    auto basis = prepare_attack(kp.pub);
    for (unsigned long a0 = 0; a0 < 3; ++a0)
      for (unsigned long a1 = 0; a1 < 3; ++a1) {
        const std::vector<unsigned long> a = {a0, a1};
        const auto C = encrypt(kp.pub, a, rng);
        CHECK(attack_decrypt(kp.pub, basis, C).plaintext == a);
        CHECK(decrypt(kp, C) == a);
      }
  }
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned long p = std::vector<unsigned long>{2, 3, 5}[static_cast<std::size_t>(trial % 3)];
    const int n = 3 + trial % 4;
    const int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
    auto kp = random_keypair(p, n, m, std::nullopt, rng);
    auto basis = prepare_attack(kp.pub);
    CHECK(abs_value(kp.pub.ctx, basis.gamma) == AbsValue(Exponent(1, n)));
    for (int i = 0; i < 5; ++i) {
      const std::string msg = "forged " + std::to_string(i);
      auto sig = forge_signature(kp.pub, basis, msg, rng);
      CHECK(verify(kp.pub, msg, sig));
      const auto t = hash_to_W(kp.pub, msg, sig.salt);
      CHECK(abs_value(kp.pub.ctx, t - sig.v) < AbsValue::one());
    }
    if (std::gcd(static_cast<unsigned long>(n), p) == 1) {
      CHECK(basis.used_shortcut);
      CHECK(abs_value(kp.pub.ctx, uniformizer_shortcut(kp.pub)) == recover_uniformizer(kp.pub).lambda2);
    }
  }
}
