#pragma once

#include <cstdint>
#include <vector>

#include "padiclat/field.hpp"

namespace padiclat {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Z_p-span of independent field elements.
struct Lattice {
  Context ctx;
  std::vector<FieldElement> basis;

  int rank() const noexcept { return static_cast<int>(basis.size()); }
};

/// Exponent of |x| as a class j/n modulo 1, returned as j in [0, n).
int exponent_class(const AbsValue& a, int n);

/// Whether |sum a_i v_i| = max |a_i v_i| for all coefficients.  Vectors with
/// pairwise distinct exponent classes pass at once; otherwise every class is
/// checked on digit tuples with leading digit 1.
bool is_orthogonal(const Context& ctx, const std::vector<FieldElement>& vectors,
                   std::uint64_t budget = kDefaultBudget);

struct LvpResult {
  AbsValue lambda1;
  AbsValue lambda2;
  FieldElement witness;
  std::vector<long> witness_digits;  // digit tuple, or p at position i for p * beta_i
  std::uint64_t enumerated = 0;
};

/// Brute force over sum a_i beta_i with a_i in [0, p^depth), plus p * beta_i.
LvpResult lvp_oracle(const Context& ctx, const std::vector<FieldElement>& basis, int depth = 2,
                     std::uint64_t budget = kDefaultBudget);

/// Successive maxima recovered from the same enumeration by counting how many
/// representatives fall in each ball; sorted by ascending exponent.
std::vector<AbsValue> successive_maxima_oracle(const Context& ctx, const std::vector<FieldElement>& basis,
                                               int depth = 2, std::uint64_t budget = kDefaultBudget);

/// Norms of an orthogonal basis found by reduction, ascending exponent.
std::vector<AbsValue> successive_maxima(const Context& ctx, const std::vector<FieldElement>& basis);

/// Appends gamma^j for every exponent class j/n not yet present.
std::vector<FieldElement> complete_orthogonal(const Context& ctx, const std::vector<FieldElement>& partial,
                                              const FieldElement& gamma);

struct CvpResult {
  FieldElement v;
  AbsValue dist;
  std::vector<PadicScalar> coords;  // coordinates of v on the lattice basis g
};

/// Closest vector to t in L(g) given an orthogonal basis g of L completed by h
/// to an orthogonal basis of K.  Among the closest vectors the one whose
/// g-coordinates lie in [0, p^t_k) is returned, t_k being the least t with
/// |p^t g_k| <= dist.
CvpResult cvp_orthogonal(const Context& ctx, const std::vector<FieldElement>& g, const std::vector<FieldElement>& h,
                         const FieldElement& t);

/// Whether x lies in L(basis): solvable with coordinates in Z_p.
bool in_lattice(const Context& ctx, const FieldElement& x, const std::vector<FieldElement>& basis);

}  // namespace padiclat
