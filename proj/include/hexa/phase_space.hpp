#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hexa {

// A point of the discrete phase space V = Z_d^{2n}, coordinate order
// (p-block, q-block).
struct PhasePoint {
  long d = 1;
  long n = 1;
  std::vector<long> coords;  // length 2n, reduced into {0..d-1}

  PhasePoint() = default;
  PhasePoint(long d_, long n_, std::vector<long> c);
  static PhasePoint zero(long d, long n) {
    return PhasePoint(d, n, std::vector<long>(2 * n, 0));
  }

  long p(long i) const { return coords[i]; }
  long q(long i) const { return coords[n + i]; }
  PhasePoint operator+(const PhasePoint& o) const;
  PhasePoint operator-(const PhasePoint& o) const;
  PhasePoint operator-() const;
  bool operator==(const PhasePoint& o) const = default;

  // Lexicographic index with coords[0] slowest.
  long index() const;
  static PhasePoint from_index(long d, long n, long idx);
};

// [a,b] = a^t J b mod d with J = [[0,I],[-I,0]].
long symp_form(const PhasePoint& a, const PhasePoint& b);

// 2n x 2n matrix over Z_d tagged with a similitude scale.
struct SymplecticMap {
  long d = 1;
  long n = 1;
  std::vector<long> m;  // row-major 2n x 2n
  long scale = 1;

  long at(long r, long c) const { return m[r * 2 * n + c]; }
  PhasePoint apply(const PhasePoint& a) const;
  // Checks S^t J S == scale * J mod d.
  bool is_similitude() const;
};

// Z_6 <-> Z_3 x Z_2 Chinese-remainder coordinates, (k,x) -> 4k+3x.
std::pair<long, long> crt_split(long a);
long crt_merge(long k, long x);

struct DecomposedPoint {
  bool singlet = false;
  long k = 0, l = 0;  // Z_3
  long m = 0;         // Z_3, meaningful iff !singlet
  bool operator==(const DecomposedPoint& o) const = default;
};

// Z_6^2 -> Z_3^2 (singlet, (x,y)=(1,1)) or Z_3^3 (triplet, m = x-hat - y-hat).
DecomposedPoint decompose6(const PhasePoint& a);
PhasePoint compose6(const DecomposedPoint& dp);

using Mat2 = std::array<long, 4>;  // row-major 2x2

// Element lists for small matrix groups over Z_3.
enum class SmallGroup { GL3_2, SL3_2, O3_2, SO3_2 };
std::vector<Mat2> enumerate_group(SmallGroup g);

// Ghat = 4G + 3*I mod 6 for invertible G over Z_3.
Mat2 lift_gl3_to_z6(const Mat2& g);

long det2(const Mat2& g, long mod);
Mat2 mat2_mul(const Mat2& a, const Mat2& b, long mod);
Mat2 mat2_transpose(const Mat2& a);
Mat2 mat2_inverse(const Mat2& a, long mod);  // throws if singular

struct Rank1Orbit {
  Mat2 representative;    // symmetric rank-1 matrix over Z_3
  std::vector<Mat2> members;
};

// Orbits of rank-one symmetric 2x2 matrices over Z_3 under S -> G S G^t,
// G in O(Z_3^2).
std::vector<Rank1Orbit> rank1_symmetric_orbits();

// General small modular linear algebra helpers.
long mod_inverse(long a, long m);  // throws if not invertible
// Inverse of a k x k matrix mod d (d in {2,3,5,7,6}); row-major. Throws if
// singular.
std::vector<long> mat_inverse_mod(const std::vector<long>& m, long k, long d);
// Kernel triviality of a k x k matrix over prime Z_d.
bool trivial_kernel_mod_prime(const std::vector<long>& m, long k, long d);

}  // namespace hexa
