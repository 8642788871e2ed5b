#pragma once

#include "hexa/matrix.hpp"

namespace hexa {

// <ij|U^G|kl> = <il|U|kj>; requires dim a perfect square.
ExactMatrix partial_transpose(const ExactMatrix& U);
// <ij|U^R|kl> = <ik|U|jl>.
ExactMatrix realignment(const ExactMatrix& U);
// Flip operator |ij> -> |ji> on C^d x C^d.
ExactMatrix flip(long d);

struct TwoUnitaryFlags {
  bool unitary = false;
  bool dual = false;        // U^R unitary
  bool gamma_dual = false;  // U^G unitary
  bool all() const { return unitary && dual && gamma_dual; }
  bool operator==(const TwoUnitaryFlags& o) const = default;
};

TwoUnitaryFlags is_two_unitary(const ExactMatrix& U);

struct LatinSquare {
  long d = 0;
  std::vector<long> table;  // row-major d x d over Z_d

  long at(long i, long j) const { return table[i * d + j]; }
  bool is_latin() const;
};

bool are_orthogonal(const LatinSquare& K, const LatinSquare& L);

// K_ij = i + j, L_ij = i + alpha*j over Z_d, d prime, alpha not in {0,1}.
std::pair<LatinSquare, LatinSquare> linear_ols(long d, long alpha);

// Permutation unitary |K_ij, L_ij><ij|. Throws if the pair is not orthogonal.
ExactMatrix ols_to_unitary(const LatinSquare& K, const LatinSquare& L);

// Exhaustive search over all pairs of order-2 Latin squares; returns whether
// an orthogonal pair exists (it does not).
bool order2_ols_exists();

// Reindexes U1 x U2 from (A1,B1,A2,B2) to (A1,A2,B1,B2) order so the result
// is an order d1*d2 operator on (C^{d1} x C^{d2})^{x2}.
ExactMatrix box_product(const ExactMatrix& U1, long d1, const ExactMatrix& U2,
                        long d2);

}  // namespace hexa
