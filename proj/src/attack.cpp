#include "padiclat/attack.hpp"

#include <numeric>

namespace padiclat {

Uniformizer recover_uniformizer(const Context& ctx) {
  std::vector<FieldElement> basis;
  for (int i = 0; i < ctx->n(); ++i) basis.push_back(FieldElement::monomial(ctx, i));
  auto r = find_second_longest(ctx, basis);
  if (r.lambda2 != AbsValue(Exponent(1, ctx->n())))
    fail(ErrorKind::NotUniformizer, "second longest vector has norm p^-" + r.lambda2.exponent_string());
  return {std::move(r.witness), r.lambda2, r.abs_value_count};
}

Uniformizer recover_uniformizer(const PublicKey& pk) { return recover_uniformizer(pk.ctx); }

FieldElement uniformizer_shortcut(const Context& ctx) {
  const unsigned long p = ctx->p();
  const int n = ctx->n();
  if (std::gcd(static_cast<unsigned long>(n), p) != 1) fail(ErrorKind::NotCoprime, "p divides n");
  const PadicScalar shift = ctx->F()[static_cast<std::size_t>(n - 1)] / ctx->scalar(n);
  const long digit = shift.is_zero() ? 0 : static_cast<long>(shift.residue_digit());
  FieldElement gamma = FieldElement::generator(ctx) + FieldElement::constant(ctx, ctx->scalar(digit));
  if (abs_value(ctx, gamma) != AbsValue(Exponent(1, n)))
    fail(ErrorKind::NotUniformizer, "shifted generator is not a uniformizer");
  return gamma;
}

FieldElement uniformizer_shortcut(const PublicKey& pk) { return uniformizer_shortcut(pk.ctx); }

AttackBasis prepare_attack(const PublicKey& pk) {
  AttackBasis out;
  const auto& ctx = pk.ctx;
  if (std::gcd(static_cast<unsigned long>(ctx->n()), ctx->p()) == 1) {
    try {
      out.gamma = uniformizer_shortcut(ctx);
      out.used_shortcut = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotUniformizer) throw;
    }
  }
  if (!out.used_shortcut) {
    auto u = recover_uniformizer(ctx);
    out.gamma = std::move(u.gamma);
    out.abs_value_count += u.abs_value_count;
  }
  auto o = orthogonalize(ctx, pk.beta);
  out.abs_value_count += o.abs_value_count;
  out.g = std::move(o.basis);
  auto full = complete_orthogonal(ctx, out.g, out.gamma);
  out.h.assign(full.begin() + static_cast<std::ptrdiff_t>(out.g.size()), full.end());
  return out;
}

AttackDecryption attack_decrypt(const PublicKey& pk, const AttackBasis& basis, const FieldElement& C) {
  auto cv = cvp_orthogonal(pk.ctx, basis.g, basis.h, C);
  AttackDecryption out;
  out.v = std::move(cv.v);
  out.dist = cv.dist;
  out.beta_coords = coordinates_in(pk.ctx, out.v, pk.beta);
  for (const auto& a : out.beta_coords) {
    if (!a.is_zero() && !a.is_integral()) fail(ErrorKind::NotIntegral, "closest vector left the lattice");
    out.plaintext.push_back(a.is_zero() ? 0 : a.residue_digit());
  }
  return out;
}

AttackDecryption attack_decrypt(const PublicKey& pk, const FieldElement& C) {
  return attack_decrypt(pk, prepare_attack(pk), C);
}

Signature forge_signature(const PublicKey& pk, const AttackBasis& basis, const std::string& message,
                          WordStream& salts) {
  Signature sig;
  for (sig.attempts = 1; sig.attempts <= 64; ++sig.attempts) {
    sig.salt = draw_salt(salts);
    auto cv = cvp_orthogonal(pk.ctx, basis.g, basis.h, hash_to_W(pk, message, sig.salt));
    if (cv.dist < AbsValue::one()) {
      sig.v = std::move(cv.v);
      return sig;
    }
  }
  fail(ErrorKind::HashFailure, "no salt gave a close lattice vector");
}

Signature forge_signature(const PublicKey& pk, const std::string& message, WordStream& salts) {
  return forge_signature(pk, prepare_attack(pk), message, salts);
}

}  // namespace padiclat
