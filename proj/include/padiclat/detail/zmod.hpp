#pragma once

// Residue rings Z/p^A and the valuation-pivoted determinant kernel shared by
// the norm computations and the enumeration oracle.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace padiclat::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 word_pow(u64 p, int k) {
  u64 r = 1;
  while (k-- > 0) r *= p;
  return r;
}

/// Largest A with p^A below 2^bits.
inline int word_digits(u64 p, int bits) {
  const u128 limit = u128{1} << bits;
  u128 acc = 1;
  int a = 0;
  while (acc * p < limit) {
    acc *= p;
    ++a;
  }
  return a;
}

inline u64 inverse_word(u64 a, u64 m) {
  std::int64_t t = 0, nt = 1;
  u64 r = m, nr = a % m;
  while (nr != 0) {
    const u64 q = r / nr;
    const std::int64_t tt = t - static_cast<std::int64_t>(q) * nt;
    t = nt;
    nt = tt;
    const u64 rr = r - q * nr;
    r = nr;
    nr = rr;
  }
  return t < 0 ? static_cast<u64>(t + static_cast<std::int64_t>(m)) : static_cast<u64>(t);
}

/// Z/p^A for p^A < 2^32, Barrett reduction of 64-bit products.
struct Zmod32 {
  using T = u64;
  u64 p, mod, barrett;
  int digits;

  Zmod32(u64 prime, int a) : p(prime), mod(word_pow(prime, a)), barrett(~u64{0} / mod), digits(a) {}

  T reduce(u64 x) const {
    const u64 q = static_cast<u64>((static_cast<u128>(x) * barrett) >> 64);
    u64 r = x - q * mod;
    while (r >= mod) r -= mod;
    return r;
  }
  T add(T a, T b) const { const T s = a + b; return s >= mod ? s - mod : s; }
  T sub(T a, T b) const { return a >= b ? a - b : a + mod - b; }
  T mul(T a, T b) const { return reduce(a * b); }
  bool is_zero(T a) const { return a == 0; }
  bool is_unit(T a) const { return a % p != 0; }
  std::int64_t val(T a) const {
    if (p == 2) return __builtin_ctzll(a);
    std::int64_t v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
  }
  T div_p_pow(T a, std::int64_t w) const { return a / word_pow(p, static_cast<int>(w)); }
  T inv(T a) const { return inverse_word(a, mod); }
  T from_mpz(const mpz_class& x) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), mod);
    return r.get_ui();
  }
  mpz_class to_mpz(T a) const { return mpz_class(static_cast<unsigned long>(a)); }
};

/// Z/p^A for p^A < 2^62.
struct Zmod64 {
  using T = u64;
  u64 p, mod;
  int digits;

  Zmod64(u64 prime, int a) : p(prime), mod(word_pow(prime, a)), digits(a) {}

  T add(T a, T b) const { const T s = a + b; return s >= mod ? s - mod : s; }
  T sub(T a, T b) const { return a >= b ? a - b : a + mod - b; }
  T mul(T a, T b) const { return static_cast<u64>(static_cast<u128>(a) * b % mod); }
  bool is_zero(T a) const { return a == 0; }
  bool is_unit(T a) const { return a % p != 0; }
  std::int64_t val(T a) const {
    if (p == 2) return __builtin_ctzll(a);
    std::int64_t v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
  }
  T div_p_pow(T a, std::int64_t w) const { return a / word_pow(p, static_cast<int>(w)); }
  T inv(T a) const { return inverse_word(a, mod); }
  T from_mpz(const mpz_class& x) const {
    mpz_class m(static_cast<unsigned long>(mod));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r.get_ui();
  }
  mpz_class to_mpz(T a) const { return mpz_class(static_cast<unsigned long>(a)); }
};

/// Z/p^A for arbitrary A.
struct ZmodBig {
  using T = mpz_class;
  unsigned long p;
  mpz_class mod;
  int digits;

  ZmodBig(unsigned long prime, int a) : p(prime), digits(a) {
    mpz_ui_pow_ui(mod.get_mpz_t(), prime, static_cast<unsigned long>(a));
  }

  T norm(T x) const {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    return x;
  }
  T add(const T& a, const T& b) const { T s = a + b; if (s >= mod) s -= mod; return s; }
  T sub(const T& a, const T& b) const { T s = a - b; if (s < 0) s += mod; return s; }
  T mul(const T& a, const T& b) const { return norm(a * b); }
  bool is_zero(const T& a) const { return a == 0; }
  bool is_unit(const T& a) const { return !mpz_divisible_ui_p(a.get_mpz_t(), p); }
  std::int64_t val(const T& a) const {
    if (p == 2) return static_cast<std::int64_t>(mpz_scan1(a.get_mpz_t(), 0));
    mpz_class t = a;
    mpz_class pp(p);
    return static_cast<std::int64_t>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
  }
  T div_p_pow(const T& a, std::int64_t w) const {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), p, static_cast<unsigned long>(w));
    T r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
  }
  T inv(const T& a) const {
    T r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    return r;
  }
  T from_mpz(const mpz_class& x) const { return norm(x); }
  mpz_class to_mpz(const T& a) const { return a; }
};

/// Matrix of multiplication by x in the basis 1, z, ..., z^(n-1) of
/// R[z]/(F), F monic given by its n low coefficients.  Row-major, entry
/// (i, k) is coefficient i of x * z^k.
template <class R>
std::vector<typename R::T> multiplication_matrix(const R& ring, const std::vector<typename R::T>& x,
                                                 const std::vector<typename R::T>& f_low) {
  const std::size_t n = x.size();
  std::vector<typename R::T> m(n * n);
  std::vector<typename R::T> col = x;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i * n + k] = col[i];
    if (k + 1 == n) break;
    const typename R::T top = col[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) col[i] = col[i - 1];
    col[0] = typename R::T(0);
    if (!ring.is_zero(top))
      for (std::size_t i = 0; i < n; ++i) col[i] = ring.sub(col[i], ring.mul(top, f_low[i]));
  }
  return m;
}

template <class R>
struct Determinant {
  bool certified = false;
  std::int64_t valuation = 0;
  typename R::T value{};
};

/// Determinant over Z/p^A by elimination with full pivoting on minimal
/// valuation.  The valuation is certified when no stage runs out of nonzero
/// entries; it may then exceed A.
template <class R>
Determinant<R> determinant(const R& ring, std::vector<typename R::T> m, std::size_t n) {
  using T = typename R::T;
  Determinant<R> out;
  T det(1);
  bool negate = false;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    std::int64_t best = 0;
    for (std::size_t c = k; c < n && best != -1; ++c) {
      for (std::size_t r = k; r < n; ++r) {
        const T& e = m[r * n + c];
        if (ring.is_zero(e)) continue;
        if (ring.is_unit(e)) {
          pr = r;
          pc = c;
          best = -1;
          break;
        }
        const std::int64_t v = ring.val(e);
        if (pr == n || v < best) {
          pr = r;
          pc = c;
          best = v;
        }
      }
    }
    if (pr == n) return out;
    if (pr != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[pr * n + c], m[k * n + c]);
      negate = !negate;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(m[r * n + pc], m[r * n + k]);
      negate = !negate;
    }
    const std::int64_t w = best < 0 ? 0 : best;
    total += w;
    const T pivot = m[k * n + k];
    det = ring.mul(det, pivot);
    const T inv_unit = ring.inv(w == 0 ? pivot : ring.div_p_pow(pivot, w));
    for (std::size_t r = k + 1; r < n; ++r) {
      const T e = m[r * n + k];
      if (ring.is_zero(e)) continue;
      const T factor = ring.mul(w == 0 ? e : ring.div_p_pow(e, w), inv_unit);
      for (std::size_t c = k + 1; c < n; ++c)
        m[r * n + c] = ring.sub(m[r * n + c], ring.mul(factor, m[k * n + c]));
    }
  }
  out.certified = true;
  out.valuation = total;
  out.value = negate ? ring.sub(T(0), det) : det;
  return out;
}

}  // namespace padiclat::detail
