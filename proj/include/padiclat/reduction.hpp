#pragma once

#include <cstdint>
#include <vector>

#include "padiclat/lattice.hpp"

namespace padiclat {

struct SecondLongest {
  AbsValue lambda1;
  AbsValue lambda2;
  FieldElement witness;
  std::vector<FieldElement> reduced;  // same lattice, reduced[0] the unique longest vector
  std::uint64_t abs_value_count = 0;
};

/// Algorithm 1 bound: m + p(m-1).
std::uint64_t second_longest_bound(std::uint64_t m, std::uint64_t p);
/// Algorithm 2 bound: m(m-1) + p(m-1)^2.
std::uint64_t orthogonalize_bound(std::uint64_t m, std::uint64_t p);

/// lambda_2 for lattices with an orthogonal basis of strictly decreasing norms
/// all above |p alpha_1|.  Throws ReductionFailed when no digit multiple of
/// the longest vector shortens another longest vector.
SecondLongest find_second_longest(const Context& ctx, const std::vector<FieldElement>& basis);

struct Orthogonalized {
  std::vector<FieldElement> basis;  // strictly decreasing norms
  std::vector<AbsValue> norms;
  std::uint64_t abs_value_count = 0;
};

Orthogonalized orthogonalize(const Context& ctx, const std::vector<FieldElement>& basis);

struct SecondLongestGeneral {
  AbsValue lambda1;
  AbsValue lambda2;
  FieldElement witness;
  std::vector<FieldElement> reduced;
  std::vector<FieldElement> longest;  // the certified orthogonal longest vectors
  std::uint64_t abs_value_count = 0;
};

/// Algorithm 3: lambda_2 when f basis vectors share the maximal norm.  f bounds
/// the digit search (p^f tuples per vector) and is checked against the result.
SecondLongestGeneral find_second_longest_general(const Context& ctx, const std::vector<FieldElement>& basis, int f,
                                                 std::uint64_t budget = kDefaultBudget);

}  // namespace padiclat
