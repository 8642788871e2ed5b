#include "hexa/phase_space.hpp"

#include <numeric>

namespace hexa {

namespace {
long um(long v, long d) {
  v %= d;
  return v < 0 ? v + d : v;
}
}  // namespace

PhasePoint::PhasePoint(long d_, long n_, std::vector<long> c)
    : d(d_), n(n_), coords(std::move(c)) {
  if (d < 1 || n < 1 || static_cast<long>(coords.size()) != 2 * n)
    throw std::invalid_argument("bad phase point shape");
  for (auto& v : coords) v = um(v, d);
}

PhasePoint PhasePoint::operator+(const PhasePoint& o) const {
  if (d != o.d || n != o.n) throw std::invalid_argument("shape mismatch");
  std::vector<long> c(coords);
  for (long i = 0; i < 2 * n; ++i) c[i] = um(c[i] + o.coords[i], d);
  return PhasePoint(d, n, std::move(c));
}

PhasePoint PhasePoint::operator-(const PhasePoint& o) const {
  return *this + (-o);
}

PhasePoint PhasePoint::operator-() const {
  std::vector<long> c(coords);
  for (auto& v : c) v = um(-v, d);
  return PhasePoint(d, n, std::move(c));
}

long PhasePoint::index() const {
  long idx = 0;
  for (long i = 0; i < 2 * n; ++i) idx = idx * d + coords[i];
  return idx;
}

PhasePoint PhasePoint::from_index(long d, long n, long idx) {
  std::vector<long> c(2 * n, 0);
  for (long i = 2 * n - 1; i >= 0; --i) {
    c[i] = idx % d;
    idx /= d;
  }
  return PhasePoint(d, n, std::move(c));
}

long symp_form(const PhasePoint& a, const PhasePoint& b) {
  if (a.d != b.d || a.n != b.n) throw std::invalid_argument("shape mismatch");
  long s = 0;
  for (long i = 0; i < a.n; ++i) s += a.p(i) * b.q(i) - a.q(i) * b.p(i);
  return um(s, a.d);
}

PhasePoint SymplecticMap::apply(const PhasePoint& a) const {
  if (a.d != d || a.n != n) throw std::invalid_argument("shape mismatch");
  std::vector<long> c(2 * n, 0);
  for (long r = 0; r < 2 * n; ++r) {
    long s = 0;
    for (long k = 0; k < 2 * n; ++k) s += at(r, k) * a.coords[k];
    c[r] = um(s, d);
  }
  return PhasePoint(d, n, std::move(c));
}

bool SymplecticMap::is_similitude() const {
  // J = [[0,I],[-I,0]] block form of size 2n.
  auto J = [&](long r, long c) -> long {
    if (r < n && c >= n && c - n == r) return 1;
    if (r >= n && c < n && r - n == c) return d - 1;
    return 0;
  };
  for (long r = 0; r < 2 * n; ++r) {
    for (long c = 0; c < 2 * n; ++c) {
      long lhs = 0;
      for (long i = 0; i < 2 * n; ++i)
        for (long j = 0; j < 2 * n; ++j) lhs += at(i, r) * J(i, j) * at(j, c);
      if (um(lhs, d) != um(scale * J(r, c), d)) return false;
    }
  }
  return true;
}

std::pair<long, long> crt_split(long a) {
  a = um(a, 6);
  return {a % 3, a % 2};
}

long crt_merge(long k, long x) { return um(4 * k + 3 * x, 6); }

DecomposedPoint decompose6(const PhasePoint& a) {
  if (a.d != 6 || a.n != 1) throw std::invalid_argument("expect d=6, n=1");
  auto [k, x] = crt_split(a.p(0));
  auto [l, y] = crt_split(a.q(0));
  DecomposedPoint dp;
  dp.k = k;
  dp.l = l;
  if (x == 1 && y == 1) {
    dp.singlet = true;
  } else {
    dp.singlet = false;
    dp.m = um(x - y, 3);  // natural lifts of {0,1} into Z_3
    // stash qubit part implicitly: recover via m and singlet flag
    // (x,y) != (1,1): m determines (x,y) uniquely.
  }
  return dp;
}

PhasePoint compose6(const DecomposedPoint& dp) {
  long x, y;
  if (dp.singlet) {
    x = 1;
    y = 1;
  } else {
    // (x,y) in {(0,0),(1,0),(0,1)} with m = x-y mod 3.
    switch (dp.m) {
      case 0: x = 0; y = 0; break;
      case 1: x = 1; y = 0; break;
      case 2: x = 0; y = 1; break;
      default: throw std::invalid_argument("bad m");
    }
  }
  return PhasePoint(6, 1, {crt_merge(dp.k, x), crt_merge(dp.l, y)});
}

long det2(const Mat2& g, long mod) {
  return um(g[0] * g[3] - g[1] * g[2], mod);
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b, long mod) {
  return {um(a[0] * b[0] + a[1] * b[2], mod), um(a[0] * b[1] + a[1] * b[3], mod),
          um(a[2] * b[0] + a[3] * b[2], mod), um(a[2] * b[1] + a[3] * b[3], mod)};
}

Mat2 mat2_transpose(const Mat2& a) { return {a[0], a[2], a[1], a[3]}; }

long mod_inverse(long a, long m) {
  a = um(a, m);
  for (long x = 1; x < m; ++x)
    if (um(a * x, m) == 1) return x;
  throw std::invalid_argument("not invertible");
}

Mat2 mat2_inverse(const Mat2& a, long mod) {
  long det = det2(a, mod);
  long di = mod_inverse(det, mod);
  return {um(a[3] * di, mod), um(-a[1] * di, mod), um(-a[2] * di, mod),
          um(a[0] * di, mod)};
}

std::vector<Mat2> enumerate_group(SmallGroup g) {
  std::vector<Mat2> out;
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long c = 0; c < 3; ++c)
        for (long e = 0; e < 3; ++e) {
          Mat2 m{a, b, c, e};
          long det = det2(m, 3);
          if (det == 0) continue;
          bool keep = false;
          switch (g) {
            case SmallGroup::GL3_2:
              keep = true;
              break;
            case SmallGroup::SL3_2:
              keep = (det == 1);
              break;
            case SmallGroup::O3_2: {
              Mat2 mt = mat2_transpose(m);
              keep = (mat2_mul(m, mt, 3) == Mat2{1, 0, 0, 1});
              break;
            }
            case SmallGroup::SO3_2: {
              Mat2 mt = mat2_transpose(m);
              keep = (det == 1 && mat2_mul(m, mt, 3) == Mat2{1, 0, 0, 1});
              break;
            }
          }
          if (keep) out.push_back(m);
        }
  return out;
}

Mat2 lift_gl3_to_z6(const Mat2& g) {
  if (det2(g, 3) == 0) throw std::invalid_argument("singular G");
  Mat2 out;
  for (int i = 0; i < 4; ++i) {
    long v = 4 * g[i];
    if (i == 0 || i == 3) v += 3;
    out[i] = um(v, 6);
  }
  return out;
}

namespace {
long mat2_rank3(const Mat2& s) {
  bool any = s[0] || s[1] || s[2] || s[3];
  if (!any) return 0;
  return det2(s, 3) != 0 ? 2 : 1;
}
}  // namespace

std::vector<Rank1Orbit> rank1_symmetric_orbits() {
  std::vector<Mat2> rank1;
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long c = 0; c < 3; ++c) {
        Mat2 s{a, b, b, c};
        if (mat2_rank3(s) == 1) rank1.push_back(s);
      }
  auto O = enumerate_group(SmallGroup::O3_2);
  std::vector<Rank1Orbit> orbits;
  std::vector<bool> used(rank1.size(), false);
  for (size_t i = 0; i < rank1.size(); ++i) {
    if (used[i]) continue;
    Rank1Orbit orb;
    orb.representative = rank1[i];
    for (const auto& g : O) {
      Mat2 img = mat2_mul(mat2_mul(g, rank1[i], 3), mat2_transpose(g), 3);
      for (size_t j = 0; j < rank1.size(); ++j) {
        if (rank1[j] == img && !used[j]) {
          used[j] = true;
          orb.members.push_back(img);
        }
      }
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<long> mat_inverse_mod(const std::vector<long>& m, long k, long d) {
  auto inv_prime = [&](long p) {
    // Gaussian elimination over Z_p on [m | I].
    std::vector<long> a(m);
    for (auto& v : a) v = um(v, p);
    std::vector<long> inv(k * k, 0);
    for (long i = 0; i < k; ++i) inv[i * k + i] = 1;
    for (long col = 0; col < k; ++col) {
      long piv = -1;
      for (long r = col; r < k; ++r)
        if (a[r * k + col] % p != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::invalid_argument("singular matrix");
      if (piv != col) {
        for (long c = 0; c < k; ++c) {
          std::swap(a[piv * k + c], a[col * k + c]);
          std::swap(inv[piv * k + c], inv[col * k + c]);
        }
      }
      long f = mod_inverse(a[col * k + col], p);
      for (long c = 0; c < k; ++c) {
        a[col * k + c] = um(a[col * k + c] * f, p);
        inv[col * k + c] = um(inv[col * k + c] * f, p);
      }
      for (long r = 0; r < k; ++r) {
        if (r == col) continue;
        long g = a[r * k + col];
        if (!g) continue;
        for (long c = 0; c < k; ++c) {
          a[r * k + c] = um(a[r * k + c] - g * a[col * k + c], p);
          inv[r * k + c] = um(inv[r * k + c] - g * inv[col * k + c], p);
        }
      }
    }
    return inv;
  };
  if (d == 2 || d == 3 || d == 5 || d == 7) return inv_prime(d);
  if (d == 6) {
    auto i2 = inv_prime(2), i3 = inv_prime(3);
    std::vector<long> out(k * k, 0);
    for (long i = 0; i < k * k; ++i) {
      // CRT: x = i3[i] mod 3, x = i2[i] mod 2  ->  x = 4*i3 + 3*i2 mod 6
      out[i] = um(4 * i3[i] + 3 * i2[i], 6);
    }
    return out;
  }
  throw std::invalid_argument("unsupported modulus");
}

bool trivial_kernel_mod_prime(const std::vector<long>& m, long k, long d) {
  std::vector<long> a(m);
  for (auto& v : a) v = um(v, d);
  long rank = 0;
  for (long col = 0; col < k && rank < k; ++col) {
    long piv = -1;
    for (long r = rank; r < k; ++r)
      if (a[r * k + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (long c = 0; c < k; ++c) std::swap(a[piv * k + c], a[rank * k + c]);
    long f = mod_inverse(a[rank * k + col], d);
    for (long c = 0; c < k; ++c) a[rank * k + c] = um(a[rank * k + c] * f, d);
    for (long r = 0; r < k; ++r) {
      if (r == rank) continue;
      long g = a[r * k + col];
      if (!g) continue;
      for (long c = 0; c < k; ++c)
        a[r * k + c] = um(a[r * k + c] - g * a[rank * k + c], d);
    }
    ++rank;
  }
  return rank == k;
}

}  // namespace hexa
