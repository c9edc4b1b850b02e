#include "padiclat/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace padiclat {

namespace {

struct Line {
  int number;
  std::string value;
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

// key -> (line number, value); rejects duplicates and malformed lines.
std::map<std::string, Line> split_lines(const std::string& text) {
  std::map<std::string, Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos || eq == 0) parse_fail(number, "expected key=value");
    std::string key = raw.substr(0, eq);
    std::string value = raw.substr(eq + 1);
    const auto b = value.find_first_not_of(' ');
    value = b == std::string::npos ? "" : value.substr(b);
    if (!out.emplace(key, Line{number, value}).second) parse_fail(number, "duplicate key " + key);
  }
  return out;
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos)
    fail(ErrorKind::ParseError, "bad rational '" + s + "'");
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(ErrorKind::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) fail(ErrorKind::ParseError, "zero denominator");
  q.canonicalize();
  return q;
}

long parse_long(const Line& line, const std::string& key) {
  try {
    std::size_t used = 0;
    const long v = std::stol(line.value, &used);
    if (used != line.value.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line.number, "bad integer for " + key);
  }
}

class Fields {
 public:
  explicit Fields(const std::string& text) : lines_(split_lines(text)) {}

  bool has(const std::string& key) const { return lines_.count(key) != 0; }
  const Line& get(const std::string& key) {
    auto it = lines_.find(key);
    if (it == lines_.end()) fail(ErrorKind::ParseError, "missing " + key);
    used_.insert(key);
    return it->second;
  }
  std::vector<mpq_class> rationals(const std::string& key) {
    const Line& l = get(key);
    try {
      return parse_rationals(l.value);
    } catch (const Error& e) {
      parse_fail(l.number, e.what());
    }
  }
  std::vector<mpq_class> vector(const std::string& key, int n) {
    auto v = rationals(key);
    if (v.size() != static_cast<std::size_t>(n))
      parse_fail(lines_.at(key).number, key + " needs " + std::to_string(n) + " coefficients");
    return v;
  }
  void reject_unknown() const {
    for (const auto& [key, line] : lines_)
      if (!used_.count(key)) parse_fail(line.number, "unknown key " + key);
  }

 private:
  std::map<std::string, Line> lines_;
  std::set<std::string> used_;
};

std::string index_key(const std::string& prefix, int i, const std::string& suffix = "") {
  return prefix + "." + std::to_string(i) + suffix;
}

void emit_public(std::ostringstream& out, const PublicKey& pk) {
  out << "p=" << pk.ctx->p() << "\n";
  out << "n=" << pk.n() << "\n";
  out << "m=" << pk.m() << "\n";
  if (pk.delta) out << "delta=" << pk.delta->get_str() << "\n";
  out << "precision=" << pk.ctx->precision() << "\n";
  if (pk.tag != kDefaultHashTag) out << "tag=" << pk.tag << "\n";
  out << "F= " << format_coefficients(pk.ctx->F()) << "\n";
  for (int i = 0; i < pk.m(); ++i)
    out << "beta." << i + 1 << "= " << format_coefficients(pk.beta[static_cast<std::size_t>(i)].coeffs()) << "\n";
}

}  // namespace

std::string format_coefficients(const std::vector<PadicScalar>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += c[i].to_string();
  }
  return s;
}

std::vector<mpq_class> parse_rationals(const std::string& values) {
  std::istringstream in(values);
  std::vector<mpq_class> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_rational(tok));
  return out;
}

FieldElement combine_powers(const FieldElement& x, const std::vector<mpq_class>& c) {
  const auto& ctx = x.context();
  FieldElement acc = FieldElement::zero(ctx);
  FieldElement pw = FieldElement::one(ctx);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) acc += ctx->scalar(c[k]) * pw;
    if (k + 1 < c.size()) pw *= x;
  }
  return acc;
}

ParsedKey parse_key_file(const std::string& text, std::optional<std::int64_t> precision_override) {
  Fields f(text);
  const long p = parse_long(f.get("p"), "p");
  const long n = parse_long(f.get("n"), "n");
  const long m = parse_long(f.get("m"), "m");
  const long declared = parse_long(f.get("precision"), "precision");
  const long precision = precision_override ? *precision_override : declared;
  if (p < 2) parse_fail(f.get("p").number, "p must be a prime");
  if (n < 2) parse_fail(f.get("n").number, "n must be at least 2");
  if (m < 1 || m > n) parse_fail(f.get("m").number, "m must lie in [1, n]");
  if (precision < 1 || precision > kMaxPrecision) fail(ErrorKind::InvalidArgument, "precision out of range");

  ParsedKey key;
  auto& pk = key.pub;
  if (f.has("delta")) {
    const Line& l = f.get("delta");
    try {
      pk.delta = parse_rational(l.value);
    } catch (const Error& e) {
      parse_fail(l.number, e.what());
    }
  }
  if (f.has("tag")) pk.tag = f.get("tag").value;

  const auto F = f.rationals("F");
  if (F.size() != static_cast<std::size_t>(n + 1))
    fail(ErrorKind::InconsistentHeader, "F has degree " + std::to_string(static_cast<long>(F.size()) - 1) +
                                            " but n=" + std::to_string(n));
  pk.ctx = FieldContext::make(static_cast<unsigned long>(p), precision, F, static_cast<int>(n), 1);
  for (int i = 1; i <= m; ++i)
    pk.beta.push_back(FieldElement::from_rationals(pk.ctx, f.vector(index_key("beta", i), static_cast<int>(n))));
  if (f.has(index_key("beta", static_cast<int>(m) + 1)))
    fail(ErrorKind::InconsistentHeader, "more beta lines than m=" + std::to_string(m));

  if (f.has("gamma")) {
    key.gamma = FieldElement::from_rationals(pk.ctx, f.vector("gamma", static_cast<int>(n)));
    for (int i = 1; i <= m; ++i) {
      const std::string k = index_key("beta", i, ".gamma");
      if (!f.has(k)) continue;
      const int line = f.get(k).number;
      if (combine_powers(*key.gamma, f.vector(k, static_cast<int>(n))) != pk.beta[static_cast<std::size_t>(i - 1)])
        parse_fail(line, k + " disagrees with beta." + std::to_string(i));
    }
  }

  const bool priv = f.has("f") || f.has("zeta") || f.has("j") || f.has("A.row.1");
  if (priv) {
    KeygenParams kg;
    kg.p = static_cast<unsigned long>(p);
    kg.precision = precision;
    kg.delta = pk.delta;
    kg.tag = pk.tag;
    kg.f = f.rationals("f");
    kg.zeta = f.rationals("zeta");
    {
      const Line& l = f.get("j");
      std::istringstream in(l.value);
      std::string tok;
      while (in >> tok) kg.j.push_back(static_cast<int>(parse_long(Line{l.number, tok}, "j")));
    }
    for (int i = 1; i <= m; ++i) kg.A.push_back(f.vector(index_key("A.row", i), static_cast<int>(m)));
    KeyPair kp = keygen(kg);
    if (kp.pub.n() != n) fail(ErrorKind::InconsistentHeader, "f has the wrong degree");
    if (!(kp.pub.ctx->F() == pk.ctx->F()))
      fail(ErrorKind::InconsistentHeader, "F does not match the private key");
    for (std::size_t i = 0; i < pk.beta.size(); ++i)
      if (!(FieldElement(kp.pub.ctx, pk.beta[i].coeffs()) == kp.pub.beta[i]))
        fail(ErrorKind::InconsistentHeader, "beta." + std::to_string(i + 1) + " does not match the private key");
    pk = kp.pub;
    key.pair = std::move(kp);
    if (key.gamma) key.gamma = FieldElement(pk.ctx, key.gamma->coeffs());
  }
  f.reject_unknown();
  return key;
}

std::string emit_public_key(const PublicKey& pk) {
  std::ostringstream out;
  emit_public(out, pk);
  return out.str();
}

std::string emit_key_pair(const KeyPair& kp) {
  std::ostringstream out;
  emit_public(out, kp.pub);
  out << "f= " << format_coefficients(kp.priv.f) << "\n";
  out << "zeta= " << format_coefficients(kp.priv.zeta) << "\n";
  out << "j=";
  for (int j : kp.priv.j) out << ' ' << j;
  out << "\n";
  for (std::size_t i = 0; i < kp.priv.A.size(); ++i) out << "A.row." << i + 1 << "= " << format_coefficients(kp.priv.A[i]) << "\n";
  return out.str();
}

FieldElement parse_ciphertext(const ParsedKey& key, const std::string& text) {
  Fields f(text);
  const int n = key.pub.n();
  FieldElement C = FieldElement::from_rationals(key.pub.ctx, f.vector("C", n));
  if (f.has("C.gamma")) {
    const int line = f.get("C.gamma").number;
    if (!key.gamma) parse_fail(line, "C.gamma needs a key with a gamma line");
    if (combine_powers(*key.gamma, f.vector("C.gamma", n)) != C) parse_fail(line, "C.gamma disagrees with C");
  }
  f.reject_unknown();
  return C;
}

std::string emit_ciphertext(const FieldElement& C) { return "C= " + format_coefficients(C.coeffs()) + "\n"; }

Signature parse_signature(const PublicKey& pk, const std::string& text) {
  Fields f(text);
  Signature sig;
  const Line& r = f.get("r");
  std::vector<std::uint8_t> bytes;
  try {
    bytes = from_hex(r.value);
  } catch (const Error& e) {
    parse_fail(r.number, e.what());
  }
  if (bytes.size() != sig.salt.size()) parse_fail(r.number, "salt must be 32 bytes");
  std::copy(bytes.begin(), bytes.end(), sig.salt.begin());
  sig.v = FieldElement::from_rationals(pk.ctx, f.vector("v", pk.n()));
  f.reject_unknown();
  return sig;
}

std::string emit_signature(const Signature& sig) {
  return "r=" + to_hex(sig.salt.data(), sig.salt.size()) + "\nv= " + format_coefficients(sig.v.coeffs()) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail(ErrorKind::InvalidArgument, "cannot write " + path);
}

}  // namespace padiclat
