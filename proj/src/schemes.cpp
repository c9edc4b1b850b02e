#include "padiclat/schemes.hpp"

#include <algorithm>
#include <numeric>

namespace padiclat {

namespace {

using u128 = unsigned __int128;

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return static_cast<unsigned long>(static_cast<u128>(a) * b % p);
}

unsigned long invmod(unsigned long a, unsigned long p) {
  unsigned long r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

// Row-reduces M (rows x cols, entries mod p) in place; returns the rank.
std::size_t rank_mod_p(std::vector<std::vector<unsigned long>> M, unsigned long p) {
  std::size_t rank = 0;
  const std::size_t cols = M.empty() ? 0 : M[0].size();
  for (std::size_t c = 0; c < cols && rank < M.size(); ++c) {
    std::size_t piv = rank;
    while (piv < M.size() && M[piv][c] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[rank]);
    const unsigned long inv = invmod(M[rank][c], p);
    for (std::size_t r = rank + 1; r < M.size(); ++r) {
      const unsigned long factor = mulmod(M[r][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) M[r][k] = (M[r][k] + p - mulmod(factor, M[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<unsigned long>> residues(const std::vector<std::vector<PadicScalar>>& A) {
  std::vector<std::vector<unsigned long>> out;
  for (const auto& row : A) {
    out.emplace_back();
    for (const auto& a : row) out.back().push_back(a.residue_digit());
  }
  return out;
}

void put_le64(std::vector<std::uint8_t>& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

mpq_class digit(WordStream& rng, unsigned long bound) { return mpq_class(mpz_class(rng.next_below(bound))); }

std::vector<FieldElement> powers(const FieldElement& x, int count) {
  std::vector<FieldElement> out;
  FieldElement y = FieldElement::one(x.context());
  for (int i = 0; i < count; ++i) {
    out.push_back(y);
    y *= x;
  }
  return out;
}

}  // namespace

std::vector<unsigned long> solve_row_mod_p(const std::vector<std::vector<unsigned long>>& M,
                                           const std::vector<unsigned long>& b, unsigned long p) {
  const std::size_t m = M.size();
  if (b.size() != m) fail(ErrorKind::InvalidArgument, "right-hand side has the wrong length");
  // Augmented transpose: M^T a^T = b^T.
  std::vector<std::vector<unsigned long>> T(m, std::vector<unsigned long>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    if (M[r].size() != m) fail(ErrorKind::BadMatrix, "matrix is not square");
    for (std::size_t c = 0; c < m; ++c) T[c][r] = M[r][c] % p;
  }
  for (std::size_t r = 0; r < m; ++r) T[r][m] = b[r] % p;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && T[piv][c] == 0) ++piv;
    if (piv == m) fail(ErrorKind::BadMatrix, "matrix is singular mod p");
    std::swap(T[piv], T[c]);
    const unsigned long inv = invmod(T[c][c], p);
    for (auto& x : T[c]) x = mulmod(x, inv, p);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || T[r][c] == 0) continue;
      const unsigned long factor = T[r][c];
      for (std::size_t k = c; k <= m; ++k) T[r][k] = (T[r][k] + p - mulmod(factor, T[c][k], p)) % p;
    }
  }
  std::vector<unsigned long> a(m);
  for (std::size_t r = 0; r < m; ++r) a[r] = T[r][m];
  return a;
}

KeyPair keygen(const KeygenParams& params) {
  const unsigned long p = params.p;
  const Context theta_ctx = FieldContext::make(p, params.precision, params.f);
  const int n = theta_ctx->n();
  if (!is_eisenstein(p, theta_ctx->F())) fail(ErrorKind::NotEisenstein, "f is not Eisenstein at p");

  if (params.zeta.size() > static_cast<std::size_t>(n)) fail(ErrorKind::InvalidArgument, "zeta has too many coefficients");
  std::vector<mpq_class> zc = params.zeta;
  zc.resize(static_cast<std::size_t>(n), 0);
  const FieldElement zeta = FieldElement::from_rationals(theta_ctx, zc);
  for (const auto& c : zeta.coeffs())
    if (!c.is_integral()) fail(ErrorKind::NotIntegral, "zeta is not integral");
  if (zeta[1].residue_digit() == 0)
    fail(ErrorKind::DegenerateGenerator, "theta-coefficient of zeta is divisible by p");

  const int m = static_cast<int>(params.A.size());
  if (m < 1 || m > n) fail(ErrorKind::BadMatrix, "A must be m x m with 1 <= m <= n");

  std::vector<int> j = params.j;
  if (j.size() != static_cast<std::size_t>(m) && j.size() != static_cast<std::size_t>(n))
    fail(ErrorKind::BadExponents, "exponent list must have m or n entries");
  if (j[0] != 0) fail(ErrorKind::BadExponents, "j_1 must be 0");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] < 0 || j[i] >= n || seen[static_cast<std::size_t>(j[i])])
      fail(ErrorKind::BadExponents, "exponents must be distinct in [0, n)");
    seen[static_cast<std::size_t>(j[i])] = true;
    if (i > 0 && i < static_cast<std::size_t>(m) && j[i] <= j[i - 1])
      fail(ErrorKind::BadExponents, "the first m exponents must increase");
  }
  for (int k = 0; k < n; ++k)
    if (!seen[static_cast<std::size_t>(k)]) j.push_back(k);

  if (params.delta) {
    if (*params.delta < 0) fail(ErrorKind::DeltaTooSmall, "delta must be nonnegative");
    for (int i = 0; i < m; ++i)
      if (mpq_class(j[static_cast<std::size_t>(i)]) > *params.delta * n)
        fail(ErrorKind::DeltaTooSmall, "j_" + std::to_string(i + 1) + " exceeds delta * n");
  }

  std::vector<std::vector<PadicScalar>> A;
  for (const auto& row : params.A) {
    if (row.size() != static_cast<std::size_t>(m)) fail(ErrorKind::BadMatrix, "A is not square");
    A.emplace_back();
    for (const auto& q : row) {
      A.back().push_back(theta_ctx->scalar(q));
      if (!A.back().back().is_integral()) fail(ErrorKind::BadMatrix, "A has a non-integral entry");
    }
    if (!A.back()[0].is_unit()) fail(ErrorKind::BadMatrix, "first column of A must be units");
  }
  const auto Ares = residues(A);
  if (rank_mod_p(Ares, p) != static_cast<std::size_t>(m)) fail(ErrorKind::BadMatrix, "det A is not a unit");

  const Poly F = char_poly(theta_ctx, zeta);
  const Context ctx = FieldContext::make(p, params.precision, F, n, 1);

  const auto zeta_powers = powers(zeta, n);
  std::vector<FieldElement> alpha;
  for (int k = 0; k < n; ++k) {
    const auto theta_j = FieldElement::monomial(theta_ctx, j[static_cast<std::size_t>(k)]);
    alpha.emplace_back(ctx, coordinates_in(theta_ctx, theta_j, zeta_powers));
  }

  KeyPair kp;
  kp.pub.ctx = ctx;
  kp.pub.delta = params.delta;
  kp.pub.tag = params.tag;
  for (int i = 0; i < m; ++i) {
    FieldElement b = FieldElement::zero(ctx);
    for (int k = 0; k < m; ++k)
      b += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * alpha[static_cast<std::size_t>(k)];
    kp.pub.beta.push_back(std::move(b));
  }
  kp.priv.f = theta_ctx->F();
  kp.priv.zeta = zeta.coeffs();
  kp.priv.j = std::move(j);
  kp.priv.A = std::move(A);
  kp.priv.alpha = std::move(alpha);
  return kp;
}

KeyPair random_keypair(unsigned long p, int n, int m, std::optional<mpq_class> delta, WordStream& rng,
                       std::int64_t precision) {
  if (n < 2 || m < 1 || m > n) fail(ErrorKind::InvalidArgument, "need n >= 2 and 1 <= m <= n");
  KeygenParams kg;
  kg.p = p;
  kg.precision = precision;
  kg.delta = delta;
  kg.f.push_back(mpq_class(p) * (1 + digit(rng, p - 1)));
  for (int i = 1; i < n; ++i) kg.f.push_back(mpq_class(p) * digit(rng, p));
  kg.f.push_back(1);
  for (int i = 0; i < n; ++i) kg.zeta.push_back(i == 1 ? 1 + digit(rng, p - 1) : digit(rng, p));

  int top = n - 1;
  if (delta) {
    const mpq_class bound = *delta * n;
    const mpz_class fl = bound.get_num() / bound.get_den();
    top = static_cast<int>(std::min<long>(fl.get_si(), n - 1));
  }
  if (top < m - 1) fail(ErrorKind::DeltaTooSmall, "delta * n leaves fewer than m exponents");
  std::vector<int> pool(static_cast<std::size_t>(top));
  std::iota(pool.begin(), pool.end(), 1);
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m); ++i)
    std::swap(pool[i], pool[i + rng.next_below(pool.size() - i)]);
  kg.j = {0};
  kg.j.insert(kg.j.end(), pool.begin(), pool.begin() + (m - 1));
  std::sort(kg.j.begin(), kg.j.end());

  while (true) {
    std::vector<std::vector<unsigned long>> res(static_cast<std::size_t>(m), std::vector<unsigned long>(static_cast<std::size_t>(m)));
    for (auto& row : res) {
      row[0] = 1 + rng.next_below(p - 1);
      for (std::size_t k = 1; k < row.size(); ++k) row[k] = rng.next_below(p);
    }
    if (rank_mod_p(res, p) != static_cast<std::size_t>(m)) continue;
    kg.A.clear();
    for (const auto& row : res) {
      kg.A.emplace_back();
      for (unsigned long x : row) kg.A.back().push_back(mpq_class(mpz_class(x)));
    }
    break;
  }
  return keygen(kg);
}

Salt draw_salt(WordStream& rng) {
  Salt s{};
  for (std::size_t i = 0; i < s.size(); i += 8) {
    const std::uint64_t w = rng.next_u64();
    for (std::size_t k = 0; k < 8; ++k) s[i + k] = static_cast<std::uint8_t>(w >> (8 * k));
  }
  return s;
}

FieldElement hash_to_W(const PublicKey& pk, WordStream& digits) {
  const int n = pk.n();
  if (pk.m() >= n) fail(ErrorKind::InvalidArgument, "hash target set is empty when m = n");
  const unsigned long p = pk.ctx->p();
  for (int iter = 0; iter < (1 << 16); ++iter) {
    std::vector<long> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = static_cast<long>(digits.next_below(p));
    FieldElement t = FieldElement::from_integers(pk.ctx, c);
    if (t.is_zero() || abs_value(pk.ctx, t) != AbsValue::one()) continue;
    if (in_lattice(pk.ctx, t, pk.beta)) continue;
    return t;
  }
  fail(ErrorKind::HashFailure, "no hash candidate accepted");
}

FieldElement hash_to_W(const PublicKey& pk, const std::string& message, const Salt& salt) {
  std::vector<std::uint8_t> seed;
  put_le64(seed, pk.tag.size());
  seed.insert(seed.end(), pk.tag.begin(), pk.tag.end());
  put_le64(seed, message.size());
  seed.insert(seed.end(), message.begin(), message.end());
  seed.insert(seed.end(), salt.begin(), salt.end());
  Shake256Stream stream(std::move(seed));
  return hash_to_W(pk, stream);
}

Signature sign(const KeyPair& key, const std::string& message, WordStream& salts) {
  const auto& pk = key.pub;
  const auto m = static_cast<std::ptrdiff_t>(pk.m());
  const std::vector<FieldElement> g(key.priv.alpha.begin(), key.priv.alpha.begin() + m);
  const std::vector<FieldElement> h(key.priv.alpha.begin() + m, key.priv.alpha.end());
  Signature sig;
  for (sig.attempts = 1; sig.attempts <= 64; ++sig.attempts) {
    sig.salt = draw_salt(salts);
    const auto cv = cvp_orthogonal(pk.ctx, g, h, hash_to_W(pk, message, sig.salt));
    if (cv.dist < AbsValue::one()) {
      sig.v = cv.v;
      return sig;
    }
  }
  fail(ErrorKind::HashFailure, "no salt gave a close lattice vector");
}

bool verify(const PublicKey& pk, const std::string& message, const Signature& sig) {
  try {
    if (sig.v.context() == nullptr || sig.v.degree() != pk.n()) return false;
    const FieldElement t = hash_to_W(pk, message, sig.salt);
    if (!in_lattice(pk.ctx, sig.v, pk.beta)) return false;
    return abs_value(pk.ctx, t - sig.v) < AbsValue::one();
  } catch (const Error&) {
    return false;
  }
}

FieldElement sample_noise(const PublicKey& pk, WordStream& rng) {
  if (!pk.delta) fail(ErrorKind::InvalidArgument, "key has no noise bound");
  const unsigned long p = pk.ctx->p();
  const Exponent delta(pk.delta->get_num().get_si(), pk.delta->get_den().get_si());
  auto draw = [&] {
    std::vector<long> c(static_cast<std::size_t>(pk.n()));
    for (auto& x : c) x = static_cast<long>(rng.next_below(p * p));
    return FieldElement::from_integers(pk.ctx, c);
  };
  for (int tries = 0; tries < 64; ++tries) {
    FieldElement r = draw();
    const AbsValue a = abs_value(pk.ctx, r);
    if (a.is_zero() || a.exponent() > delta) return r;
  }
  const std::int64_t s = boost::rational_cast<std::int64_t>(delta) + 1;  // floor(delta) + 1
  return draw().times_p_power(s);
}

FieldElement encrypt_with_noise(const PublicKey& pk, const std::vector<unsigned long>& plaintext,
                                const FieldElement& noise) {
  if (plaintext.size() != pk.beta.size()) fail(ErrorKind::InvalidArgument, "plaintext must have m digits");
  FieldElement C = noise;
  for (std::size_t i = 0; i < plaintext.size(); ++i) {
    if (plaintext[i] >= pk.ctx->p()) fail(ErrorKind::InvalidArgument, "plaintext digits must lie in [0, p)");
    C += pk.ctx->scalar(static_cast<long>(plaintext[i])) * pk.beta[i];
  }
  return C;
}

FieldElement encrypt(const PublicKey& pk, const std::vector<unsigned long>& plaintext, WordStream& rng) {
  return encrypt_with_noise(pk, plaintext, sample_noise(pk, rng));
}

std::vector<unsigned long> decrypt(const KeyPair& key, const FieldElement& C) {
  const auto& pk = key.pub;
  const auto m = static_cast<std::size_t>(pk.m());
  const std::vector<FieldElement> g(key.priv.alpha.begin(), key.priv.alpha.begin() + static_cast<std::ptrdiff_t>(m));
  const std::vector<FieldElement> h(key.priv.alpha.begin() + static_cast<std::ptrdiff_t>(m), key.priv.alpha.end());
  const auto cv = cvp_orthogonal(pk.ctx, g, h, C);
  const AbsValue bound(Exponent(key.priv.j[m - 1], pk.n()));
  if (cv.dist >= bound) fail(ErrorKind::DecryptionAmbiguous, "ciphertext is not within the noise bound");
  std::vector<unsigned long> b;
  for (const auto& c : cv.coords) b.push_back(c.is_zero() ? 0 : c.residue_digit());
  return solve_row_mod_p(residues(key.priv.A), b, pk.ctx->p());
}

}  // namespace padiclat
