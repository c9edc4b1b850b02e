#include "padiclat/reduction.hpp"

#include <algorithm>

namespace padiclat {

namespace {

std::size_t argmax(const std::vector<AbsValue>& norms, std::size_t from) {
  std::size_t best = from;
  for (std::size_t i = from + 1; i < norms.size(); ++i)
    if (norms[i] > norms[best]) best = i;
  return best;
}

// Moves entry k to the front, keeping the order of the others.
template <class T>
void to_front(std::vector<T>& v, std::size_t k) {
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.begin() + static_cast<std::ptrdiff_t>(k) + 1);
}

struct Reduced {
  std::vector<FieldElement> basis;
  std::vector<AbsValue> norms;
  std::uint64_t count = 0;
};

// One pass of Algorithm 1 without the final choice of s.
Reduced reduce_against_longest(const Context& ctx, const std::vector<FieldElement>& basis) {
  if (basis.empty()) fail(ErrorKind::InvalidArgument, "empty basis");
  Reduced r;
  r.basis = basis;
  for (const auto& b : basis) r.norms.push_back(abs_value(ctx, b));
  r.count = basis.size();
  const std::size_t top = argmax(r.norms, 0);
  to_front(r.basis, top);
  to_front(r.norms, top);
  const AbsValue lambda1 = r.norms[0];
  if (lambda1.is_zero()) fail(ErrorKind::SingularSystem, "zero basis");
  const long p = static_cast<long>(ctx->p());
  for (std::size_t i = 1; i < r.basis.size(); ++i) {
    if (r.norms[i] < lambda1) continue;  // j = 0
    bool reduced = false;
    for (long j = 1; j < p && !reduced; ++j) {
      FieldElement cand = r.basis[i] - ctx->scalar(j) * r.basis[0];
      const AbsValue a = abs_value(ctx, cand);
      ++r.count;
      if (a < lambda1) {
        r.basis[i] = std::move(cand);
        r.norms[i] = a;
        reduced = true;
      }
    }
    if (!reduced) fail(ErrorKind::ReductionFailed, "no digit multiple shortens a longest vector");
  }
  return r;
}

}  // namespace

std::uint64_t second_longest_bound(std::uint64_t m, std::uint64_t p) { return m + p * (m - 1); }

std::uint64_t orthogonalize_bound(std::uint64_t m, std::uint64_t p) { return m * (m - 1) + p * (m - 1) * (m - 1); }

SecondLongest find_second_longest(const Context& ctx, const std::vector<FieldElement>& basis) {
  Reduced r = reduce_against_longest(ctx, basis);
  SecondLongest out;
  out.lambda1 = r.norms[0];
  out.abs_value_count = r.count;
  const AbsValue scaled = r.norms[0].scaled_by_p_power(1);
  if (r.basis.size() > 1) {
    const std::size_t s = argmax(r.norms, 1);
    if (r.norms[s] >= scaled) {
      out.lambda2 = r.norms[s];
      out.witness = r.basis[s];
    }
  }
  if (out.witness.degree() == 0) {
    out.lambda2 = scaled;
    out.witness = ctx->scalar(static_cast<long>(ctx->p())) * r.basis[0];
  }
  out.reduced = std::move(r.basis);
  return out;
}

Orthogonalized orthogonalize(const Context& ctx, const std::vector<FieldElement>& basis) {
  Orthogonalized out;
  out.basis = basis;
  const std::size_t m = basis.size();
  if (m == 0) return out;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    std::vector<FieldElement> tail(out.basis.begin() + static_cast<std::ptrdiff_t>(i), out.basis.end());
    Reduced r = reduce_against_longest(ctx, tail);
    out.abs_value_count += r.count;
    std::copy(r.basis.begin(), r.basis.end(), out.basis.begin() + static_cast<std::ptrdiff_t>(i));
    out.norms.resize(i);
    out.norms.insert(out.norms.end(), r.norms.begin(), r.norms.end());
  }
  if (m == 1) {
    out.norms = {abs_value(ctx, basis[0])};
    out.abs_value_count = 0;  // nothing to compare
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (!(out.norms[i] > out.norms[i + 1]))
      fail(ErrorKind::ReductionFailed, "norms of the reduced basis do not strictly decrease");
  return out;
}

SecondLongestGeneral find_second_longest_general(const Context& ctx, const std::vector<FieldElement>& basis, int f,
                                                 std::uint64_t budget) {
  if (basis.empty()) fail(ErrorKind::InvalidArgument, "empty basis");
  if (f < 1) fail(ErrorKind::InvalidArgument, "residue degree must be positive");
  const long p = static_cast<long>(ctx->p());
  std::uint64_t tuples = 1;
  for (int i = 0; i < f; ++i) {
    if (tuples > budget / static_cast<std::uint64_t>(p)) fail(ErrorKind::BudgetExceeded, "p^f exceeds the budget");
    tuples *= static_cast<std::uint64_t>(p);
  }

  SecondLongestGeneral out;
  std::vector<FieldElement> b = basis;
  std::vector<AbsValue> norms;
  for (const auto& x : b) norms.push_back(abs_value(ctx, x));
  out.abs_value_count = b.size();
  const std::size_t top = argmax(norms, 0);
  to_front(b, top);
  to_front(norms, top);
  const AbsValue lambda1 = norms[0];
  if (lambda1.is_zero()) fail(ErrorKind::SingularSystem, "zero basis");

  std::vector<std::size_t> in_list = {0};
  std::vector<bool> listed(b.size(), false);
  listed[0] = true;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (norms[i] < lambda1) continue;  // the zero tuple
    const std::size_t t = in_list.size();
    std::vector<long> digits(t, 0);
    bool reduced = false;
    while (!reduced) {
      std::size_t k = 0;
      for (; k < t; ++k) {
        if (++digits[k] < p) break;
        digits[k] = 0;
      }
      if (k == t) break;
      FieldElement cand = b[i];
      for (std::size_t q = 0; q < t; ++q)
        if (digits[q] != 0) cand -= ctx->scalar(digits[q]) * b[in_list[q]];
      const AbsValue a = abs_value(ctx, cand);
      ++out.abs_value_count;
      if (a < lambda1) {
        b[i] = std::move(cand);
        norms[i] = a;
        reduced = true;
      }
    }
    if (!reduced) {
      if (static_cast<int>(t) >= f) fail(ErrorKind::ReductionFailed, "more than f orthogonal longest vectors");
      in_list.push_back(i);
      listed[i] = true;
    }
  }

  out.lambda1 = lambda1;
  const AbsValue scaled = lambda1.scaled_by_p_power(1);
  out.lambda2 = scaled;
  out.witness = ctx->scalar(p) * b[0];
  bool have = false;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (listed[i] || norms[i] < scaled) continue;
    if (!have || norms[i] > out.lambda2) {
      out.lambda2 = norms[i];
      out.witness = b[i];
      have = true;
    }
  }
  for (std::size_t i : in_list) out.longest.push_back(b[i]);
  out.reduced = std::move(b);
  return out;
}

}  // namespace padiclat
