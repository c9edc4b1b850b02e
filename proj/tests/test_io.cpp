#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

std::string fixture(const std::string& name) { return read_file(std::string(PADICLAT_FIXTURES) + "/" + name); }

std::string replace_line(const std::string& text, const std::string& key, const std::string& line) {
  const auto at = text.find(key);
  const auto end = text.find('\n', at);
  return text.substr(0, at) + line + text.substr(end);
}

}  // namespace

TEST_CASE("toy fixtures parse") {
  const auto key = parse_key_file(fixture("toy.pub"));
  CHECK(key.pub.n() == 20);
  CHECK(key.pub.m() == 4);
  CHECK(key.pub.ctx->p() == 2);
  CHECK(*key.pub.delta == mpq_class(1, 5));
  CHECK_FALSE(key.pair.has_value());
  REQUIRE(key.gamma.has_value());
  CHECK(key.pub.beta[1] == FieldElement::generator(key.pub.ctx));
  const auto C = parse_ciphertext(key, fixture("toy.ct"));
  CHECK(C.degree() == 20);

  // β3 carries the denominator 755873885678037304696930874820307 exactly
  CHECK(key.pub.beta[2][0].exact_value().get_den() == mpz_class("755873885678037304696930874820307"));

  auto again = parse_key_file(emit_public_key(key.pub));
  CHECK(emit_public_key(again.pub) == emit_public_key(key.pub));
}

TEST_CASE("malformed input") {
  const auto text = fixture("toy.pub");
  CHECK(kind_of([&] { parse_key_file(replace_line(text, "beta.1=", "beta.1= 1 0")); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_key_file(replace_line(text, "beta.1=", "beta.1= 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0")); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_key_file(replace_line(text, "n=", "n=19")); }) == ErrorKind::InconsistentHeader);
  CHECK(kind_of([&] { parse_key_file(text + "colour=blue\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_key_file(replace_line(text, "p=", "p=two")); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_key_file(replace_line(text, "beta.2.gamma=", "beta.2.gamma= 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0")); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_key_file(replace_line(text, "beta.1=", "beta.1= 1/0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0")); }) ==
        ErrorKind::ParseError);
  try {
    parse_key_file(text + "junk\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 16") != std::string::npos);
  }
}

TEST_CASE("generated keys round trip") {
  Shake256Stream rng(std::vector<std::uint8_t>{'i', 'o'});
  for (int trial = 0; trial < 6; ++trial) {
    auto kp = random_keypair(trial % 2 ? 3 : 5, 3 + trial % 3, 2, trial % 2 ? std::optional<mpq_class>(mpq_class(2, 3))
                                                                               : std::nullopt,
                             rng);
    const auto text = emit_key_pair(kp);
    const auto parsed = parse_key_file(text);
    REQUIRE(parsed.pair.has_value());
    CHECK(emit_key_pair(*parsed.pair) == text);
    CHECK(emit_public_key(parse_key_file(emit_public_key(kp.pub)).pub) == emit_public_key(kp.pub));

    auto sig = sign(kp, "io", rng);
    const auto st = emit_signature(sig);
    const auto back = parse_signature(parsed.pub, st);
    CHECK(emit_signature(back) == st);
    CHECK(verify(parsed.pub, "io", back));
    if (kp.pub.delta) {
      const auto C = encrypt(kp.pub, {1, 2}, rng);
      const auto ct = emit_ciphertext(C);
      CHECK(emit_ciphertext(parse_ciphertext(parsed, ct)) == ct);
      CHECK(decrypt(*parsed.pair, parse_ciphertext(parsed, ct)) == std::vector<unsigned long>{1, 2});
    }
    CHECK(kind_of([&] { parse_key_file(replace_line(text, "j=", "j= 0 0")); }) == ErrorKind::BadExponents);
  }
}

TEST_CASE("tampered private section") {
  Shake256Stream rng(std::vector<std::uint8_t>{'t'});
  auto kp = random_keypair(3, 3, 2, std::nullopt, rng);
  auto text = emit_key_pair(kp);
  auto other = random_keypair(3, 3, 2, std::nullopt, rng);
  const auto pos = text.find("f=");
  const auto other_text = emit_key_pair(other);
  const auto mixed = text.substr(0, pos) + other_text.substr(other_text.find("f="));
  CHECK(kind_of([&] { parse_key_file(mixed); }) == ErrorKind::InconsistentHeader);
}
