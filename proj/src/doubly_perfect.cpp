#include "hexa/doubly_perfect.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

namespace hexa {

namespace {
long um(long v, long d) {
  v %= d;
  return v < 0 ? v + d : v;
}
long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

PhaseFunction PhaseFunction::from_exponents(long d, long n, long base,
                                            std::vector<long> e) {
  PhaseFunction f;
  f.d = d;
  f.n = n;
  f.base = base;
  f.has_exponents = true;
  for (auto& v : e) v = um(v, base);
  f.exponents = std::move(e);
  long sz = ipow(d, 2 * n);
  if (static_cast<long>(f.exponents.size()) != sz)
    throw std::invalid_argument("bad table size");
  f.values.reserve(sz);
  for (long i = 0; i < sz; ++i) f.values.push_back(Cyc::root(base, f.exponents[i]));
  return f;
}

PhaseFunction PhaseFunction::from_values(long d, long n, std::vector<Cyc> v) {
  PhaseFunction f;
  f.d = d;
  f.n = n;
  if (static_cast<long>(v.size()) != ipow(d, 2 * n))
    throw std::invalid_argument("bad table size");
  f.values = std::move(v);
  return f;
}

bool PhaseFunction::is_unimodular() const {
  for (const auto& v : values)
    if (!v.is_unimodular()) return false;
  return true;
}

bool PhaseFunction::operator==(const PhaseFunction& o) const {
  if (d != o.d || n != o.n || values.size() != o.values.size()) return false;
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] != o.values[i]) return false;
  return true;
}

std::vector<Cyc> cross_corr(const PhaseFunction& f, const PhaseFunction& g,
                            bool twisted) {
  if (f.d != g.d || f.n != g.n) throw std::invalid_argument("shape mismatch");
  long d = f.d, n = f.n, sz = f.size();
  std::vector<Cyc> out(sz);
  for (long ia = 0; ia < sz; ++ia) {
    PhasePoint a = PhasePoint::from_index(d, n, ia);
    Cyc s(0);
    for (long ib = 0; ib < sz; ++ib) {
      PhasePoint b = PhasePoint::from_index(d, n, ib);
      Cyc term = f.values[ib].conj() * g.values[(a + b).index()];
      if (twisted) term *= Cyc::root(d, symp_form(a, b));
      s += term;
    }
    out[ia] = s;
  }
  return out;
}

DpfFlags is_doubly_perfect(const PhaseFunction& lam) {
  DpfFlags flags;
  flags.unimodular = lam.is_unimodular();
  long sz = lam.size();
  Cyc total{mpq_class(sz)};
  auto check = [&](bool twisted) {
    auto cc = cross_corr(lam, lam, twisted);
    if (cc[0] != total) return false;
    for (long i = 1; i < sz; ++i)
      if (!cc[i].is_zero()) return false;
    return true;
  };
  flags.perfect = check(false);
  flags.doubly = check(true);
  return flags;
}

namespace {
std::vector<long> exponents_from_pq(const SectorPair& pq) {
  std::vector<long> e(36);
  for (long p = 0; p < 6; ++p)
    for (long q = 0; q < 6; ++q) {
      DecomposedPoint dp = decompose6(PhasePoint(6, 1, {p, q}));
      long k = dp.k, l = dp.l;
      long ph = pq.P[0] * k * k + 2 * pq.P[1] * k * l + pq.P[3] * l * l;
      if (!dp.singlet) {
        long m = dp.m;
        ph += pq.Q[0] * k * k + pq.Q[4] * l * l + pq.Q[8] * m * m +
              2 * (pq.Q[1] * k * l + pq.Q[2] * k * m + pq.Q[5] * l * m);
      }
      e[p * 6 + q] = um(ph, 3);
    }
  return e;
}
}  // namespace

PhaseFunction lambda_from_pq(const SectorPair& pq) {
  return PhaseFunction::from_exponents(6, 1, 3, exponents_from_pq(pq));
}

std::optional<SectorPair> pq_from_lambda(const PhaseFunction& lam) {
  if (lam.d != 6 || lam.n != 1) return std::nullopt;
  // Extract a base-3 exponent table.
  std::vector<long> e(36, -1);
  for (long i = 0; i < 36; ++i) {
    for (long t = 0; t < 3; ++t)
      if (lam.values[i] == Cyc::root(3, t)) {
        e[i] = t;
        break;
      }
    if (e[i] < 0) return std::nullopt;
  }
  auto phi = [&](bool singlet, long k, long l, long m) {
    DecomposedPoint dp;
    dp.singlet = singlet;
    dp.k = k;
    dp.l = l;
    dp.m = m;
    return e[compose6(dp).index()];
  };
  long inv2 = 2;  // inverse of 2 mod 3
  SectorPair pq;
  pq.P.assign(4, 0);
  pq.Q.assign(9, 0);
  if (phi(true, 0, 0, 0) != 0) return std::nullopt;
  pq.P[0] = phi(true, 1, 0, 0);
  pq.P[3] = phi(true, 0, 1, 0);
  pq.P[1] = pq.P[2] = um((phi(true, 1, 1, 0) - pq.P[0] - pq.P[3]) * inv2, 3);
  auto psi = [&](long k, long l, long m) {
    long base = pq.P[0] * k * k + 2 * pq.P[1] * k * l + pq.P[3] * l * l;
    return um(phi(false, k, l, m) - base, 3);
  };
  if (psi(0, 0, 0) != 0) return std::nullopt;
  pq.Q[0] = psi(1, 0, 0);
  pq.Q[4] = psi(0, 1, 0);
  pq.Q[8] = psi(0, 0, 1);
  pq.Q[1] = pq.Q[3] = um((psi(1, 1, 0) - pq.Q[0] - pq.Q[4]) * inv2, 3);
  pq.Q[2] = pq.Q[6] = um((psi(1, 0, 1) - pq.Q[0] - pq.Q[8]) * inv2, 3);
  pq.Q[5] = pq.Q[7] = um((psi(0, 1, 1) - pq.Q[4] - pq.Q[8]) * inv2, 3);
  // Verify the fit over all 36 points.
  PhaseFunction rec = lambda_from_pq(pq);
  for (long i = 0; i < 36; ++i)
    if (rec.exponents[i] != e[i]) return std::nullopt;
  return pq;
}

SectorPair artisanal_pq(ArtisanalKind kind) {
  SectorPair pq;
  pq.P = {1, 0, 0, 1};  // P = k^2 + l^2
  if (kind == ArtisanalKind::Sparse) {
    // Q = (l+m)^2
    pq.Q = {0, 0, 0, 0, 1, 1, 0, 1, 1};
  } else {
    // Q = -(k+l+m)^2, i.e. 2 * all-ones mod 3
    pq.Q = {2, 2, 2, 2, 2, 2, 2, 2, 2};
  }
  return pq;
}

PhaseFunction artisanal(ArtisanalKind kind) {
  return lambda_from_pq(artisanal_pq(kind));
}

ExactMatrix u_lambda(const PhaseFunction& lam) {
  long d = lam.d, n = lam.n;
  long D = ipow(d, n);
  unsigned long den = 1;
  for (long i = 0; i < 2 * n; ++i) den *= d;
  ExactMatrix U(D * D, D * D, d, den);
  for (long ia = 0; ia < lam.size(); ++ia) {
    PhasePoint a = PhasePoint::from_index(d, n, ia);
    ExactMatrix s = wh_basis_state(a);
    std::vector<long> nz;
    for (long i = 0; i < s.rows; ++i)
      if (!s.at(i, 0).is_zero()) nz.push_back(i);
    const Cyc& lv = lam.values[ia];
    for (long i : nz) {
      Cyc li = lv * s.at(i, 0);
      for (long j : nz) U.at(i, j) += li * s.at(j, 0).conj();
    }
  }
  return U;
}

ExactMatrix sector_permutation() {
  // CRT split |x> -> |x mod 3>|x mod 2> on both legs, then regroup
  // (3,2,3,2) -> (3,3,2,2).
  ExactMatrix R(6, 6, 6, 1);
  for (long x = 0; x < 6; ++x) R.at(2 * (x % 3) + (x % 2), x) = Cyc(1);
  ExactMatrix RR = R.kron(R);
  ExactMatrix P(36, 36, 6, 1);
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 2; ++b)
      for (long c = 0; c < 3; ++c)
        for (long e = 0; e < 2; ++e)
          P.at(((a * 3 + c) * 2 + b) * 2 + e, ((a * 2 + b) * 3 + c) * 2 + e) =
              Cyc(1);
  return P * RR;
}

ExactMatrix sector_frame() {
  ExactMatrix F3 = gate_fourier(3, 1).matrix;
  ExactMatrix I4 = ExactMatrix::identity(4, 2, 1);
  return F3.kron(F3.adjoint()).kron(I4) * sector_permutation();
}

namespace {
// 9x9 matrix whose columns are the qutrit-pair WH basis states |Phi_{p,q}>.
ExactMatrix uwh_basis3() {
  ExactMatrix U(9, 9, 3, 3);
  for (long p = 0; p < 3; ++p)
    for (long q = 0; q < 3; ++q) {
      ExactMatrix s = wh_basis_state(PhasePoint(3, 1, {p, q}));
      for (long i = 0; i < 9; ++i) U.at(i, 3 * p + q) = s.at(i, 0);
    }
  return U;
}

ExactMatrix quad_diag3(const std::vector<long>& N, long n, bool conjed) {
  long dim = ipow(3, n);
  ExactMatrix D(dim, dim, 3, 1);
  std::vector<long> x(n);
  for (long idx = 0; idx < dim; ++idx) {
    long t = idx;
    for (long i = n - 1; i >= 0; --i) {
      x[i] = t % 3;
      t /= 3;
    }
    long e = 0;
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) e += x[i] * N[i * n + j] * x[j];
    Cyc v = Cyc::tau_pow(3, e);
    D.at(idx, idx) = conjed ? v.conj() : v;
  }
  return D;
}

const std::vector<long> kN2 = {1, 0, 0, 1};
std::vector<long> n3_form(ArtisanalKind kind) {
  if (kind == ArtisanalKind::Sparse) return {1, 0, 0, 0, 2, 2, 0, 2, 1};
  return {0, 1, 2, 1, 0, 1, 2, 1, 2};
}
}  // namespace

SectorBuild build_sectors(ArtisanalKind kind) {
  SectorBuild sb;
  sb.n3 = n3_form(kind);
  ExactMatrix UWH = uwh_basis3();
  ExactMatrix UWHd = UWH.adjoint();
  ExactMatrix I3 = ExactMatrix::identity(3, 3, 1);
  sb.u2.matrix = UWH * quad_diag3(kN2, 2, false) * UWHd;
  sb.u2.symp.d = 3;
  sb.u2.symp.n = 2;
  sb.u2.symp.scale = 1;
  sb.u2.symp.m = {1, 0, 1, 2, 0, 1, 2, 1, 2, 2, 1, 0, 2, 2, 0, 1};
  sb.u3 = UWH.kron(I3) * quad_diag3(sb.n3, 3, false) * UWHd.kron(I3);

  // Assembly in the CRT-rotated frame uses the adjoint gates.
  ExactMatrix U2c = UWH * quad_diag3(kN2, 2, true) * UWHd;
  ExactMatrix U3c = UWH.kron(I3) * quad_diag3(sb.n3, 3, true) * UWHd.kron(I3);

  // Qubit-pair projector onto |Phi_{1,1}> and the triplet isometry whose
  // column t = (-m) mod 3 holds |Phi_{x,y}> with m = x - y mod 3.
  ExactMatrix phi11 = wh_basis_state(PhasePoint(2, 1, {1, 1}));
  ExactMatrix P11 = phi11 * phi11.adjoint();
  ExactMatrix V(4, 3, 2, 2);
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y) {
      if (x == 1 && y == 1) continue;
      long m = um(x - y, 3);
      ExactMatrix s = wh_basis_state(PhasePoint(2, 1, {x, y}));
      for (long i = 0; i < 4; ++i) V.at(i, um(-m, 3)) = s.at(i, 0);
    }
  ExactMatrix I9 = ExactMatrix::identity(9, 3, 1);
  ExactMatrix emb = I9.kron(V);
  sb.assembled = U2c.kron(P11) + emb * U3c * emb.adjoint();

  ExactMatrix T = sector_permutation();
  sb.rotated = T * u_lambda(artisanal(kind)) * T.transpose();
  sb.matches = sb.assembled.semantic_equal(sb.rotated);
  return sb;
}

PhaseFunction quadratic_lambda(const std::vector<long>& N, long d, long n) {
  long k = 2 * n;
  if (static_cast<long>(N.size()) != k * k)
    throw std::invalid_argument("bad N size");
  long ord = d % 2 == 0 ? 2 * d : d;
  long sz = ipow(d, 2 * n);
  std::vector<long> e(sz);
  for (long idx = 0; idx < sz; ++idx) {
    PhasePoint a = PhasePoint::from_index(d, n, idx);
    long s = 0;
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j) s += a.coords[i] * N[i * k + j] * a.coords[j];
    e[idx] = um(s, ord);
  }
  if (d % 2 == 0) return PhaseFunction::from_exponents(d, n, 2 * d, std::move(e));
  // tau_d = omega_d^{(d+1)/2} for odd d.
  long half = (d + 1) / 2;
  for (auto& v : e) v = um(v * half, d);
  return PhaseFunction::from_exponents(d, n, d, std::move(e));
}

bool quadratic_criterion(const std::vector<long>& N, long d, long n) {
  long k = 2 * n;
  std::vector<long> NJ(N);
  for (long i = 0; i < n; ++i) {
    NJ[i * k + (n + i)] = um(NJ[i * k + (n + i)] + 1, d);
    NJ[(n + i) * k + i] = um(NJ[(n + i) * k + i] - 1, d);
  }
  return trivial_kernel_mod_prime(N, k, d) && trivial_kernel_mod_prime(NJ, k, d);
}

namespace {
// GF(2^n) arithmetic with a fixed primitive polynomial.
struct GF2n {
  long n;
  long poly;  // bitmask of the modulus polynomial
  explicit GF2n(long n_) : n(n_) {
    switch (n_) {
      case 2: poly = 0b111; break;        // x^2+x+1
      case 3: poly = 0b1011; break;       // x^3+x+1
      case 4: poly = 0b10011; break;      // x^4+x+1
      default: throw std::invalid_argument("gf2n supports n in {2,3,4}");
    }
  }
  long mul(long a, long b) const {
    long r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & (1L << n)) a ^= poly;
    }
    return r;
  }
  long trace(long a) const {
    long t = 0, x = a;
    for (long i = 0; i < n; ++i) {
      t ^= x;
      x = mul(x, x);
    }
    // trace lands in {0,1}
    return t & 1;
  }
  // Depth-first search for a basis with tr(b_i b_j) = delta_ij.
  bool find_orthonormal(std::vector<long>& basis) const {
    if (static_cast<long>(basis.size()) == n) {
      // Verify linear independence via span size.
      std::vector<bool> seen(1L << n, false);
      seen[0] = true;
      long cnt = 1;
      for (long mask = 1; mask < (1L << n); ++mask) {
        long v = 0;
        for (long i = 0; i < n; ++i)
          if (mask & (1L << i)) v ^= basis[i];
        if (!seen[v]) {
          seen[v] = true;
          ++cnt;
        }
      }
      return cnt == (1L << n);
    }
    for (long c = 1; c < (1L << n); ++c) {
      if (trace(mul(c, c)) != 1) continue;
      bool ok = true;
      for (long b : basis)
        if (trace(mul(c, b)) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      basis.push_back(c);
      if (find_orthonormal(basis)) return true;
      basis.pop_back();
    }
    return false;
  }
};
}  // namespace

PhaseFunction gf2n_lambda(long n, long alpha_index) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  GF2n F(n);
  long order = (1L << n) - 1;
  long alpha = 1;
  long g = 2;  // the class of x, primitive for the chosen moduli
  for (long i = 0; i < um(alpha_index, order); ++i) alpha = F.mul(alpha, g);
  if (alpha == 0 || alpha == 1)
    throw std::invalid_argument("alpha must avoid {0,1}");
  std::vector<long> basis;
  if (!F.find_orthonormal(basis))
    throw std::runtime_error("no trace-orthonormal basis found");
  std::vector<long> G(n * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      G[i * n + j] = F.trace(F.mul(basis[i], F.mul(alpha, basis[j])));
  long k = 2 * n;
  std::vector<long> N(k * k, 0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      N[i * k + j] = G[i * n + j];
      N[(n + i) * k + (n + j)] = G[i * n + j];
    }
  return quadratic_lambda(N, 2, n);
}

bool kite_matrix_check(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  std::vector<long> A(n * n, 0);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      if (i + j <= n + 1) A[(i - 1) * n + (j - 1)] = 1;
  long k = 2 * n;
  std::vector<long> N(k * k, 0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      N[i * k + j] = A[i * n + j];
      N[(n + i) * k + (n + j)] = A[i * n + j];
    }
  return quadratic_criterion(N, 2, n);
}

namespace {
// Reindex lambda by a point permutation: out(a) = lam(f(a)).
PhaseFunction precompose(const PhaseFunction& lam,
                         const std::function<PhasePoint(const PhasePoint&)>& f) {
  long d = lam.d, n = lam.n, sz = lam.size();
  PhaseFunction out;
  out.d = d;
  out.n = n;
  out.values.resize(sz);
  out.has_exponents = lam.has_exponents;
  out.base = lam.base;
  if (lam.has_exponents) out.exponents.resize(sz);
  for (long i = 0; i < sz; ++i) {
    long j = f(PhasePoint::from_index(d, n, i)).index();
    out.values[i] = lam.values[j];
    if (lam.has_exponents) out.exponents[i] = lam.exponents[j];
  }
  return out;
}
}  // namespace

PhaseFunction act_symplectic(const PhaseFunction& lam, const SymplecticMap& S) {
  if (S.d != lam.d || S.n != lam.n) throw std::invalid_argument("shape");
  // lam o S^{-1}: invert the induced point permutation.
  long sz = lam.size();
  std::vector<long> inv(sz, -1);
  for (long i = 0; i < sz; ++i) {
    long j = S.apply(PhasePoint::from_index(lam.d, lam.n, i)).index();
    if (inv[j] != -1) throw std::invalid_argument("map not invertible");
    inv[j] = i;
  }
  return precompose(lam, [&](const PhasePoint& a) {
    return PhasePoint::from_index(lam.d, lam.n, inv[a.index()]);
  });
}

PhaseFunction act_pt(const PhaseFunction& lam) {
  return precompose(lam, [&](const PhasePoint& a) {
    std::vector<long> c(a.coords);
    for (long i = 0; i < lam.n; ++i) c[lam.n + i] = um(-c[lam.n + i], lam.d);
    return PhasePoint(lam.d, lam.n, std::move(c));
  });
}

PhaseFunction act_shift(const PhaseFunction& lam, const PhasePoint& b) {
  return precompose(lam, [&](const PhasePoint& a) { return a - b; });
}

PhaseFunction act_character(const PhaseFunction& lam, const PhasePoint& b) {
  long d = lam.d, n = lam.n, sz = lam.size();
  PhaseFunction out;
  out.d = d;
  out.n = n;
  out.values.resize(sz);
  bool keep_exp = lam.has_exponents;
  long L = 0;
  if (keep_exp) {
    L = std::lcm(lam.base, d);
    out.has_exponents = true;
    out.base = L;
    out.exponents.resize(sz);
  }
  for (long i = 0; i < sz; ++i) {
    PhasePoint a = PhasePoint::from_index(d, n, i);
    long t = symp_form(b, a);
    out.values[i] = Cyc::root(d, t) * lam.values[i];
    if (keep_exp)
      out.exponents[i] =
          um(lam.exponents[i] * (L / lam.base) + t * (L / d), L);
  }
  return out;
}

PhaseFunction act_galois(const PhaseFunction& lam, long k) {
  if (!lam.has_exponents)
    throw std::invalid_argument("galois action needs root-of-unity values");
  long d = lam.d, n = lam.n;
  k = um(k, std::lcm(lam.base, d));
  if (std::gcd(k, lam.base) != 1 || std::gcd(k, d) != 1)
    throw std::invalid_argument("invalid Galois index");
  long kinv_d = mod_inverse(um(k, d), d);
  // lambda'(a) = sigma_k(lambda(M a)) with M = diag(k^{-1} 1_n, 1_n).
  PhaseFunction pre = precompose(lam, [&](const PhasePoint& a) {
    std::vector<long> c(a.coords);
    for (long i = 0; i < n; ++i) c[i] = um(c[i] * kinv_d, d);
    return PhasePoint(d, n, std::move(c));
  });
  PhaseFunction out;
  out.d = d;
  out.n = n;
  out.has_exponents = true;
  out.base = pre.base;
  out.exponents.resize(pre.size());
  out.values.resize(pre.size());
  for (long i = 0; i < pre.size(); ++i) {
    out.exponents[i] = um(pre.exponents[i] * k, pre.base);
    out.values[i] = Cyc::root(pre.base, out.exponents[i]);
  }
  return out;
}

PhaseFunction act_phase(const PhaseFunction& lam, const Cyc& c) {
  if (!c.is_unimodular()) throw std::invalid_argument("phase not unimodular");
  PhaseFunction out;
  out.d = lam.d;
  out.n = lam.n;
  out.values.reserve(lam.size());
  for (const auto& v : lam.values) out.values.push_back(c * v);
  return out;
}

PhaseFunction act_fourier(const PhaseFunction& lam) {
  long d = lam.d, n = lam.n, sz = lam.size();
  mpq_class scale(1, ipow(d, n));
  Cyc sc(scale);
  PhaseFunction out;
  out.d = d;
  out.n = n;
  out.values.resize(sz);
  for (long ia = 0; ia < sz; ++ia) {
    PhasePoint a = PhasePoint::from_index(d, n, ia);
    Cyc s(0);
    for (long ib = 0; ib < sz; ++ib) {
      PhasePoint b = PhasePoint::from_index(d, n, ib);
      s += Cyc::root(d, -symp_form(a, b)) * lam.values[ib];
    }
    out.values[ia] = sc * s;
  }
  return out;
}

Lambda3Report derive_lambda3() {
  Lambda3Report rep;
  // Rebase the symmetric solution to omega_6 exponents.
  PhaseFunction sym3 = artisanal(ArtisanalKind::Sym);
  std::vector<long> e6(36);
  for (long i = 0; i < 36; ++i) e6[i] = um(2 * sym3.exponents[i], 6);
  PhaseFunction sym = PhaseFunction::from_exponents(6, 1, 6, e6);

  // Forward sequence (applied to lambda3, yielding lambda^sym):
  //   character b=(2,2); then lambda -> lambda o G^{-1} with G=[[3,5],[1,2]];
  //   then shift by (3,3).
  Mat2 G{3, 5, 1, 2};
  SymplecticMap SG{6, 1, {G[0], G[1], G[2], G[3]}, 1};
  Mat2 Gi = mat2_inverse(G, 6);
  SymplecticMap SGi{6, 1, {Gi[0], Gi[1], Gi[2], Gi[3]}, 1};
  PhasePoint b22(6, 1, {2, 2}), b33(6, 1, {3, 3});

  // Inverse sequence applied to lambda^sym: shift^{-1}, then compose with G
  // (inverse of composing with G^{-1}), then character^{-1}.
  PhaseFunction cand =
      act_character(act_symplectic(act_shift(sym, -b33), SGi), -b22);
  // Note: lambda o G^{-1} = act_symplectic with S = G, so its inverse is
  // act_symplectic with S = G^{-1}.
  PhaseFunction fwd =
      act_shift(act_symplectic(act_character(cand, b22), SG), b33);
  rep.roundtrip = (fwd == sym);
  rep.flags = is_doubly_perfect(cand);
  rep.lambda3 = std::move(cand);
  return rep;
}

namespace {
// Exponent-table action e -> e(Ghat^t a) of a lifted GL(Z_3^2) element.
std::vector<long> act_lifted(const std::vector<long>& e, const Mat2& Ghat) {
  std::vector<long> out(36);
  Mat2 Gt = mat2_transpose(Ghat);
  for (long p = 0; p < 6; ++p)
    for (long q = 0; q < 6; ++q) {
      long pp = um(Gt[0] * p + Gt[1] * q, 6);
      long qq = um(Gt[2] * p + Gt[3] * q, 6);
      out[p * 6 + q] = e[pp * 6 + qq];
    }
  return out;
}
}  // namespace

std::vector<OrbitEntry> orbit(const SectorPair& seed) {
  PhaseFunction lam = lambda_from_pq(seed);
  std::vector<OrbitEntry> out;
  std::vector<std::vector<long>> seen;
  for (const Mat2& G : enumerate_group(SmallGroup::GL3_2)) {
    std::vector<long> e = act_lifted(lam.exponents, lift_gl3_to_z6(G));
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
    seen.push_back(e);
    OrbitEntry oe;
    oe.G = G;
    auto pq = pq_from_lambda(PhaseFunction::from_exponents(6, 1, 3, e));
    if (!pq) throw std::runtime_error("orbit left the ansatz class");
    oe.pq = *pq;
    oe.exponents = std::move(e);
    out.push_back(std::move(oe));
  }
  return out;
}

namespace {
SectorPair pq_from_candidate(long idx) {
  // idx = Pidx * 729 + Qidx; P entries (p00,p01,p11) base-3 big-endian,
  // Q entries (q00,q01,q02,q11,q12,q22) likewise.
  long Qidx = idx % 729, Pidx = idx / 729;
  long p11 = Pidx % 3, p01 = (Pidx / 3) % 3, p00 = Pidx / 9;
  long q[6];
  for (long i = 5; i >= 0; --i) {
    q[i] = Qidx % 3;
    Qidx /= 3;
  }
  SectorPair pq;
  pq.P = {p00, p01, p01, p11};
  pq.Q = {q[0], q[1], q[2], q[1], q[3], q[4], q[2], q[4], q[5]};
  return pq;
}

// Fast integer test: exponent table base 3, correlations as omega_6-power
// counting. A sum of counts c_t omega_6^t vanishes iff
// (c0-c3)+(c1-c4) == 0 and (c1-c4)+(c2-c5) == 0.
bool fast_dpf(const std::vector<long>& e, const std::vector<long>& symp6,
              const std::vector<long>& addtab) {
  for (long a = 1; a < 36; ++a) {
    long cp[6] = {0, 0, 0, 0, 0, 0}, ct[6] = {0, 0, 0, 0, 0, 0};
    for (long b = 0; b < 36; ++b) {
      long de = um(2 * (e[addtab[a * 36 + b]] - e[b]), 6);
      ++cp[de];
      ++ct[um(de + symp6[a * 36 + b], 6)];
    }
    if (cp[0] - cp[3] + cp[1] - cp[4] != 0 || cp[1] - cp[4] + cp[2] - cp[5] != 0)
      return false;
    if (ct[0] - ct[3] + ct[1] - ct[4] != 0 || ct[1] - ct[4] + ct[2] - ct[5] != 0)
      return false;
  }
  return true;
}
}  // namespace

ScanReport classification_scan(int threads) {
  if (threads < 1) threads = 1;
  const long total = 27 * 729;
  // Shared tables.
  std::vector<long> symp6(36 * 36), addtab(36 * 36);
  for (long a = 0; a < 36; ++a)
    for (long b = 0; b < 36; ++b) {
      long a1 = a / 6, a2 = a % 6, b1 = b / 6, b2 = b % 6;
      symp6[a * 36 + b] = um(a1 * b2 - a2 * b1, 6);
      addtab[a * 36 + b] = ((a1 + b1) % 6) * 6 + (a2 + b2) % 6;
    }
  std::vector<std::vector<long>> partial(threads);
  auto worker = [&](int t) {
    long lo = total * t / threads, hi = total * (t + 1) / threads;
    for (long idx = lo; idx < hi; ++idx) {
      std::vector<long> e = exponents_from_pq(pq_from_candidate(idx));
      if (fast_dpf(e, symp6, addtab)) partial[t].push_back(idx);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  ScanReport rep;
  rep.candidates = total;
  std::vector<long> surv;
  for (auto& p : partial) surv.insert(surv.end(), p.begin(), p.end());
  rep.survivors = static_cast<long>(surv.size());
  for (long idx : surv) rep.survivor_list.push_back(pq_from_candidate(idx));

  // Partition survivors into orbits under the lifted GL action.
  std::vector<std::vector<long>> tables;
  for (long idx : surv)
    tables.push_back(exponents_from_pq(pq_from_candidate(idx)));
  std::vector<bool> used(surv.size(), false);
  auto group = enumerate_group(SmallGroup::GL3_2);
  for (size_t i = 0; i < surv.size(); ++i) {
    if (used[i]) continue;
    std::vector<size_t> members;
    for (const Mat2& G : group) {
      std::vector<long> img = act_lifted(tables[i], lift_gl3_to_z6(G));
      for (size_t j = 0; j < surv.size(); ++j)
        if (!used[j] && tables[j] == img) {
          used[j] = true;
          members.push_back(j);
        }
    }
    ScanOrbit orb;
    orb.size = static_cast<long>(members.size());
    long rep_idx = surv[*std::min_element(members.begin(), members.end(),
                                          [&](size_t a, size_t b) {
                                            return surv[a] < surv[b];
                                          })];
    orb.representative = pq_from_candidate(rep_idx);
    Cyc tr(0);
    for (const Cyc& v : lambda_from_pq(orb.representative).values) tr += v;
    orb.trace = tr;
    rep.orbits.push_back(std::move(orb));
  }
  std::sort(rep.orbits.begin(), rep.orbits.end(),
            [](const ScanOrbit& a, const ScanOrbit& b) {
              if (a.representative.P != b.representative.P)
                return a.representative.P < b.representative.P;
              return a.representative.Q < b.representative.Q;
            });
  return rep;
}

}  // namespace hexa
