#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padiclat/lattice.hpp"
#include "padiclat/xof.hpp"

namespace padiclat {

inline constexpr const char* kDefaultHashTag = "padiclat/hash-to-W/v1";

/// (F, beta_1..beta_m, delta, hash tag); F lives in ctx.
struct PublicKey {
  Context ctx;
  std::vector<FieldElement> beta;
  std::optional<mpq_class> delta;  // encryption keys only
  std::string tag = kDefaultHashTag;

  int n() const { return ctx->n(); }
  int m() const { return static_cast<int>(beta.size()); }
};

struct PrivateKey {
  Poly f;                          // Eisenstein, in theta
  std::vector<PadicScalar> zeta;   // zeta over 1, theta, ..., theta^(n-1)
  std::vector<int> j;              // alpha_i = theta^(j_i), all n entries
  std::vector<std::vector<PadicScalar>> A;  // m x m
  std::vector<FieldElement> alpha;          // over zeta, derived
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

struct KeygenParams {
  unsigned long p = 2;
  std::int64_t precision = kDefaultPrecision;
  std::vector<mpq_class> f;         // constant term first, monic
  std::vector<mpq_class> zeta;      // over theta
  std::vector<int> j;               // m or n entries; missing classes are appended ascending
  std::vector<std::vector<mpq_class>> A;
  std::optional<mpq_class> delta;
  std::string tag = kDefaultHashTag;
};

KeyPair keygen(const KeygenParams& params);

/// Random key with small digits: an Eisenstein f, a generator zeta with unit
/// theta-coefficient, exponents below delta*n (or n), and a digit matrix A.
KeyPair random_keypair(unsigned long p, int n, int m, std::optional<mpq_class> delta, WordStream& rng,
                       std::int64_t precision = kDefaultPrecision);

using Salt = std::array<std::uint8_t, 32>;

struct Signature {
  Salt salt{};
  FieldElement v;
  int attempts = 1;
};

Salt draw_salt(WordStream& rng);

/// Rejection sampler over an arbitrary digit stream.
FieldElement hash_to_W(const PublicKey& pk, WordStream& digits);
/// SHAKE256 seeded with le64|tag| tag le64|M| M r.
FieldElement hash_to_W(const PublicKey& pk, const std::string& message, const Salt& salt);

Signature sign(const KeyPair& key, const std::string& message, WordStream& salts);
bool verify(const PublicKey& pk, const std::string& message, const Signature& sig);

/// Noise r with |r| < p^(-delta).
FieldElement sample_noise(const PublicKey& pk, WordStream& rng);
FieldElement encrypt(const PublicKey& pk, const std::vector<unsigned long>& plaintext, WordStream& rng);
FieldElement encrypt_with_noise(const PublicKey& pk, const std::vector<unsigned long>& plaintext,
                                const FieldElement& noise);
std::vector<unsigned long> decrypt(const KeyPair& key, const FieldElement& C);

/// Solves a * M = b over F_p for a row vector a.  Throws BadMatrix when M is
/// singular mod p.
std::vector<unsigned long> solve_row_mod_p(const std::vector<std::vector<unsigned long>>& M,
                                           const std::vector<unsigned long>& b, unsigned long p);

}  // namespace padiclat
