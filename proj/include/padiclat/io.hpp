#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padiclat/schemes.hpp"

namespace padiclat {

/// Line-oriented text formats.  Every line is `key= values` or `key=value`,
/// coefficients are decimal rationals with the constant term first, and
/// emission is canonical: fixed field order, single spaces, LF endings.

struct ParsedKey {
  PublicKey pub;
  std::optional<KeyPair> pair;      // present when the private section is
  std::optional<FieldElement> gamma;  // optional cross-check uniformizer
};

/// A given precision overrides the file's `precision=` line.
ParsedKey parse_key_file(const std::string& text, std::optional<std::int64_t> precision = {});
std::string emit_public_key(const PublicKey& pk);
std::string emit_key_pair(const KeyPair& kp);

/// `C=` and an optional `C.gamma=` checked against the key's gamma.
FieldElement parse_ciphertext(const ParsedKey& key, const std::string& text);
std::string emit_ciphertext(const FieldElement& C);

Signature parse_signature(const PublicKey& pk, const std::string& text);
std::string emit_signature(const Signature& sig);

std::string format_coefficients(const std::vector<PadicScalar>& c);
std::vector<mpq_class> parse_rationals(const std::string& values);
/// Value of sum c_k x^k for rational c.
FieldElement combine_powers(const FieldElement& x, const std::vector<mpq_class>& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace padiclat
