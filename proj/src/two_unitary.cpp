#include "hexa/two_unitary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hexa {

namespace {
long isqrt_exact(long n) {
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  if (r * r != n) throw std::invalid_argument("dimension not a perfect square");
  return r;
}
}  // namespace

ExactMatrix partial_transpose(const ExactMatrix& U) {
  if (U.rows != U.cols) throw std::invalid_argument("non-square");
  long d = isqrt_exact(U.rows);
  ExactMatrix out(U.rows, U.cols, U.d, U.denom);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k)
        for (long l = 0; l < d; ++l)
          out.at(i * d + j, k * d + l) = U.at(i * d + l, k * d + j);
  return out;
}

ExactMatrix realignment(const ExactMatrix& U) {
  if (U.rows != U.cols) throw std::invalid_argument("non-square");
  long d = isqrt_exact(U.rows);
  ExactMatrix out(U.rows, U.cols, U.d, U.denom);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k)
        for (long l = 0; l < d; ++l)
          out.at(i * d + j, k * d + l) = U.at(i * d + k, j * d + l);
  return out;
}

ExactMatrix flip(long d) {
  ExactMatrix F(d * d, d * d, d, 1);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) F.at(i * d + j, j * d + i) = Cyc(1);
  return F;
}

TwoUnitaryFlags is_two_unitary(const ExactMatrix& U) {
  TwoUnitaryFlags f;
  f.unitary = U.is_unitary();
  f.dual = realignment(U).is_unitary();
  f.gamma_dual = partial_transpose(U).is_unitary();
  return f;
}

bool LatinSquare::is_latin() const {
  for (long i = 0; i < d; ++i) {
    std::vector<bool> row(d, false), col(d, false);
    for (long j = 0; j < d; ++j) {
      long r = at(i, j), c = at(j, i);
      if (r < 0 || r >= d || c < 0 || c >= d) return false;
      if (row[r] || col[c]) return false;
      row[r] = col[c] = true;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& K, const LatinSquare& L) {
  if (K.d != L.d) return false;
  long d = K.d;
  std::vector<bool> seen(d * d, false);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      long idx = K.at(i, j) * d + L.at(i, j);
      if (seen[idx]) return false;
      seen[idx] = true;
    }
  return true;
}

std::pair<LatinSquare, LatinSquare> linear_ols(long d, long alpha) {
  auto is_prime = [](long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) return false;
    return true;
  };
  if (!is_prime(d)) throw std::invalid_argument("d must be prime");
  alpha = ((alpha % d) + d) % d;
  if (alpha == 0 || alpha == 1)
    throw std::invalid_argument("alpha must avoid {0,1}");
  LatinSquare K{d, std::vector<long>(d * d)}, L{d, std::vector<long>(d * d)};
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      K.table[i * d + j] = (i + j) % d;
      L.table[i * d + j] = (i + alpha * j) % d;
    }
  return {K, L};
}

ExactMatrix ols_to_unitary(const LatinSquare& K, const LatinSquare& L) {
  if (!K.is_latin() || !L.is_latin() || !are_orthogonal(K, L))
    throw std::invalid_argument("not an orthogonal Latin square pair");
  long d = K.d;
  ExactMatrix U(d * d, d * d, d, 1);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      U.at(K.at(i, j) * d + L.at(i, j), i * d + j) = Cyc(1);
  return U;
}

bool order2_ols_exists() {
  // All order-2 Latin squares: permutations of {0,1} per row with column
  // constraint; there are exactly 2.
  std::vector<LatinSquare> all;
  for (long a = 0; a < 2; ++a) {
    LatinSquare s{2, {a, 1 - a, 1 - a, a}};
    if (s.is_latin()) all.push_back(s);
  }
  for (const auto& K : all)
    for (const auto& L : all)
      if (are_orthogonal(K, L)) return true;
  return false;
}

ExactMatrix box_product(const ExactMatrix& U1, long d1, const ExactMatrix& U2,
                        long d2) {
  ExactMatrix T = U1.kron(U2);
  long d = d1 * d2;
  ExactMatrix out(d * d, d * d, d, T.denom);
  // Index of (a1,b1,a2,b2) in the kron order vs (a1,a2,b1,b2) in the target.
  auto remap = [&](long idx) {
    long b2 = idx % d2;
    idx /= d2;
    long a2 = idx % d2;
    idx /= d2;
    long b1 = idx % d1;
    long a1 = idx / d1;
    return ((a1 * d2 + a2) * d1 + b1) * d2 + b2;
  };
  for (long r = 0; r < T.rows; ++r)
    for (long c = 0; c < T.cols; ++c) {
      const Cyc& v = T.at(r, c);
      if (!v.is_zero()) out.at(remap(r), remap(c)) = v;
    }
  return out;
}

}  // namespace hexa
