#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padiclat/reduction.hpp"
#include "padiclat/schemes.hpp"

namespace padiclat {

// Everything here reads public data only.

struct Uniformizer {
  FieldElement gamma;
  AbsValue lambda2;
  std::uint64_t abs_value_count = 0;
};

/// Second longest vector of O_K = L(1, zeta, ..., zeta^(n-1)); its norm is
/// p^(-1/n) in a totally ramified field.
Uniformizer recover_uniformizer(const Context& ctx);
Uniformizer recover_uniformizer(const PublicKey& pk);

/// zeta + (F_(n-1) / n mod p).  Requires gcd(n, p) = 1.
FieldElement uniformizer_shortcut(const Context& ctx);
FieldElement uniformizer_shortcut(const PublicKey& pk);

/// An orthogonal basis g of the public lattice and its completion h by
/// powers of the recovered uniformizer.
struct AttackBasis {
  FieldElement gamma;
  bool used_shortcut = false;
  std::vector<FieldElement> g;
  std::vector<FieldElement> h;
  std::uint64_t abs_value_count = 0;
};

AttackBasis prepare_attack(const PublicKey& pk);

struct AttackDecryption {
  std::vector<unsigned long> plaintext;
  FieldElement v;                     // closest lattice vector
  std::vector<PadicScalar> beta_coords;
  AbsValue dist;
};

AttackDecryption attack_decrypt(const PublicKey& pk, const AttackBasis& basis, const FieldElement& C);
AttackDecryption attack_decrypt(const PublicKey& pk, const FieldElement& C);

Signature forge_signature(const PublicKey& pk, const AttackBasis& basis, const std::string& message,
                          WordStream& salts);
Signature forge_signature(const PublicKey& pk, const std::string& message, WordStream& salts);

}  // namespace padiclat
