#include "hexa/algebra.hpp"

#include <stdexcept>

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

// Entry-level tr(X^dag Y).
Cyc raw_inner(const ExactMatrix& X, const ExactMatrix& Y) {
  if (X.rows != Y.rows || X.cols != Y.cols)
    throw std::invalid_argument("shape mismatch");
  Cyc s(0);
  for (size_t i = 0; i < X.e.size(); ++i) {
    if (X.e[i].is_zero() || Y.e[i].is_zero()) continue;
    s += X.e[i].conj() * Y.e[i];
  }
  return s;
}

// Incremental row-echelon rank over the cyclotomics.
struct EchelonRank {
  std::vector<std::vector<Cyc>> rows;
  std::vector<size_t> pivots;
  void add(std::vector<Cyc> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Cyc& c = v[pivots[r]];
      if (c.is_zero()) continue;
      Cyc f = c;  // rows are pivot-normalized
      for (size_t k = 0; k < v.size(); ++k)
        if (!rows[r][k].is_zero()) v[k] += -(f * rows[r][k]);
    }
    size_t p = v.size();
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) {
        p = k;
        break;
      }
    if (p == v.size()) return;
    Cyc inv = v[p].inverse();
    for (auto& x : v) x = inv * x;
    rows.push_back(std::move(v));
    pivots.push_back(p);
  }
  long rank() const { return static_cast<long>(rows.size()); }
};
}  // namespace

Cyc hs_inner(const ExactMatrix& X, const ExactMatrix& Y) {
  Cyc t = raw_inner(X, Y);
  unsigned long prod = X.denom * Y.denom;
  return t * Cyc(mpq_class(1, X.rows)) * Cyc::sqrt_int(prod).inverse();
}

mpq_class schatten4(const ExactMatrix& A) {
  ExactMatrix P = A * A.adjoint();
  Cyc tr(0);
  for (long i = 0; i < P.rows; ++i)
    for (long j = 0; j < P.rows; ++j) {
      if (P.at(i, j).is_zero() || P.at(j, i).is_zero()) continue;
      tr += P.at(i, j) * P.at(j, i);
    }
  // semantic (AA^dag)^2 = (E E^dag)^2 / denom^2 ; tau = tr / D.
  Cyc val = tr * Cyc(mpq_class(1, A.rows)) *
            Cyc(mpq_class(1, static_cast<unsigned long>(A.denom))) *
            Cyc(mpq_class(1, static_cast<unsigned long>(A.denom)));
  if (!val.is_rational()) throw std::runtime_error("schatten4 not rational");
  return val.rational();
}

namespace {
// Gaussian inverse of a Hermitian Gram matrix of Cycs.
std::vector<Cyc> invert_gram(std::vector<Cyc> g, long k) {
  std::vector<Cyc> inv(k * k);
  for (long i = 0; i < k; ++i) inv[i * k + i] = Cyc(1);
  for (long col = 0; col < k; ++col) {
    long piv = -1;
    for (long r = col; r < k; ++r)
      if (!g[r * k + col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("degenerate basis");
    if (piv != col)
      for (long c = 0; c < k; ++c) {
        std::swap(g[piv * k + c], g[col * k + c]);
        std::swap(inv[piv * k + c], inv[col * k + c]);
      }
    Cyc f = g[col * k + col].inverse();
    for (long c = 0; c < k; ++c) {
      g[col * k + c] = f * g[col * k + c];
      inv[col * k + c] = f * inv[col * k + c];
    }
    for (long r = 0; r < k; ++r) {
      if (r == col) continue;
      Cyc x = g[r * k + col];
      if (x.is_zero()) continue;
      for (long c = 0; c < k; ++c) {
        g[r * k + c] += -(x * g[col * k + c]);
        inv[r * k + c] += -(x * inv[col * k + c]);
      }
    }
  }
  return inv;
}
}  // namespace

mpq_class overlap_eta_sq(const std::vector<ExactMatrix>& A,
                         const std::vector<ExactMatrix>& B) {
  long ka = static_cast<long>(A.size()), kb = static_cast<long>(B.size());
  std::vector<Cyc> GA(ka * ka), GB(kb * kb), M(ka * kb);
  for (long i = 0; i < ka; ++i)
    for (long j = 0; j < ka; ++j) GA[i * ka + j] = hs_inner(A[i], A[j]);
  for (long i = 0; i < kb; ++i)
    for (long j = 0; j < kb; ++j) GB[i * kb + j] = hs_inner(B[i], B[j]);
  for (long i = 0; i < ka; ++i)
    for (long j = 0; j < kb; ++j) M[i * kb + j] = hs_inner(A[i], B[j]);
  std::vector<Cyc> GAi = invert_gram(std::move(GA), ka);
  std::vector<Cyc> GBi = invert_gram(std::move(GB), kb);
  // eta^2 = Tr(GA^{-1} M GB^{-1} M^dag)
  Cyc s(0);
  for (long i = 0; i < ka; ++i)
    for (long j = 0; j < ka; ++j) {
      if (GAi[i * ka + j].is_zero()) continue;
      // (M GB^{-1} M^dag)_{j i}
      Cyc t(0);
      for (long u = 0; u < kb; ++u)
        for (long v = 0; v < kb; ++v) {
          if (M[j * kb + u].is_zero() || GBi[u * kb + v].is_zero() ||
              M[i * kb + v].is_zero())
            continue;
          t += M[j * kb + u] * GBi[u * kb + v] * M[i * kb + v].conj();
        }
      s += GAi[i * ka + j] * t;
    }
  if (!s.is_rational()) throw std::runtime_error("eta^2 not rational");
  return s.rational();
}

std::vector<ExactMatrix> left_wh_basis(long d, long n) {
  std::vector<ExactMatrix> out;
  long sz = ipow(d, 2 * n);
  for (long i = 0; i < sz; ++i) {
    PhasePoint a = PhasePoint::from_index(d, n, i);
    std::vector<long> c(4 * n, 0);
    for (long k = 0; k < n; ++k) {
      c[k] = a.p(k);
      c[2 * n + k] = a.q(k);
    }
    out.push_back(weyl(PhasePoint(d, 2 * n, std::move(c))));
  }
  return out;
}

std::vector<ExactMatrix> right_wh_basis(long d, long n) {
  std::vector<ExactMatrix> out;
  long sz = ipow(d, 2 * n);
  for (long i = 0; i < sz; ++i) {
    PhasePoint a = PhasePoint::from_index(d, n, i);
    std::vector<long> c(4 * n, 0);
    for (long k = 0; k < n; ++k) {
      c[n + k] = a.p(k);
      c[3 * n + k] = a.q(k);
    }
    out.push_back(weyl(PhasePoint(d, 2 * n, std::move(c))));
  }
  return out;
}

EtaPair eta_conjugated_left(const ExactMatrix& U, long d, long n) {
  auto L = left_wh_basis(d, n);
  auto R = right_wh_basis(d, n);
  ExactMatrix Ud = U.adjoint();
  EtaPair eta{0, 0};
  for (const auto& La : L) {
    ExactMatrix M = U * La * Ud;
    for (size_t b = 0; b < L.size(); ++b) {
      Cyc tl = hs_inner(M, L[b]);
      Cyc tr = hs_inner(M, R[b]);
      Cyc vl = tl * tl.conj(), vr = tr * tr.conj();
      if (!vl.is_rational() || !vr.is_rational())
        throw std::runtime_error("eta^2 term not rational");
      eta.to_L += vl.rational();
      eta.to_R += vr.rational();
    }
  }
  return eta;
}

PropReport check_prop_equivalences(const ExactMatrix& U, long d, long n) {
  PropReport rep;
  rep.flags = is_two_unitary(U);
  rep.eta = eta_conjugated_left(U, d, n);
  rep.dual_matches = (rep.flags.dual == (rep.eta.to_L == 1));
  rep.gamma_matches = (rep.flags.gamma_dual == (rep.eta.to_R == 1));
  rep.consistent = rep.dual_matches && rep.gamma_matches;
  return rep;
}

std::pair<long, long> support_algebra_dim(const ExactMatrix& U) {
  if (U.rows != 36) throw std::invalid_argument("expected a 36x36 operator");
  ExactMatrix P = sector_permutation();
  ExactMatrix rot = P * U * P.transpose();
  ExactMatrix rotd = rot.adjoint();
  std::vector<ExactMatrix> w3ops, w2ops;
  for (long i = 0; i < 81; ++i)
    w3ops.push_back(weyl(PhasePoint::from_index(3, 2, i)));
  for (long i = 0; i < 16; ++i)
    w2ops.push_back(weyl(PhasePoint::from_index(2, 2, i)));
  ExactMatrix I4 = ExactMatrix::identity(4, 2, 1);
  ExactMatrix I9 = ExactMatrix::identity(9, 3, 1);

  EchelonRank r1;
  for (const auto& g : w3ops) {
    ExactMatrix M = rot * g.kron(I4) * rotd;
    for (const auto& wt : w3ops) {
      std::vector<Cyc> B(16);
      bool nz = false;
      for (long i = 0; i < 9; ++i)
        for (long j = 0; j < 9; ++j) {
          const Cyc& wv = wt.at(i, j);
          if (wv.is_zero()) continue;
          Cyc cw = wv.conj();
          for (long u = 0; u < 4; ++u)
            for (long v = 0; v < 4; ++v) {
              const Cyc& mv = M.at(i * 4 + u, j * 4 + v);
              if (mv.is_zero()) continue;
              B[u * 4 + v] += mv * cw;
              nz = true;
            }
        }
      if (nz) r1.add(std::move(B));
    }
  }
  EchelonRank r2;
  for (const auto& g : w2ops) {
    ExactMatrix M = rot * I9.kron(g) * rotd;
    for (const auto& wt : w2ops) {
      std::vector<Cyc> B(81);
      bool nz = false;
      for (long u = 0; u < 4; ++u)
        for (long v = 0; v < 4; ++v) {
          const Cyc& wv = wt.at(u, v);
          if (wv.is_zero()) continue;
          Cyc cw = wv.conj();
          for (long i = 0; i < 9; ++i)
            for (long j = 0; j < 9; ++j) {
              const Cyc& mv = M.at(i * 4 + u, j * 4 + v);
              if (mv.is_zero()) continue;
              B[i * 9 + j] += mv * cw;
              nz = true;
            }
        }
      if (nz) r2.add(std::move(B));
    }
  }
  return {r1.rank(), r2.rank()};
}

bool support_containment(const ExactMatrix& U) {
  if (U.rows != 36) throw std::invalid_argument("expected a 36x36 operator");
  ExactMatrix P = sector_permutation();
  ExactMatrix rot = P * U * P.transpose();
  ExactMatrix rotd = rot.adjoint();
  ExactMatrix Q4(4, 4, 2, 2);
  for (long i = 0; i < 4; ++i) {
    ExactMatrix s = wh_basis_state(PhasePoint::from_index(2, 1, i));
    for (long r = 0; r < 4; ++r) Q4.at(r, i) = s.at(r, 0);
  }
  ExactMatrix Q4d = Q4.adjoint();
  ExactMatrix I4 = ExactMatrix::identity(4, 2, 1);
  for (long gi = 0; gi < 81; ++gi) {
    ExactMatrix g = weyl(PhasePoint::from_index(3, 2, gi));
    ExactMatrix M = rot * g.kron(I4) * rotd;
    for (long ti = 0; ti < 81; ++ti) {
      ExactMatrix wt = weyl(PhasePoint::from_index(3, 2, ti));
      ExactMatrix B(4, 4, 2, 1);
      for (long i = 0; i < 9; ++i)
        for (long j = 0; j < 9; ++j) {
          const Cyc& wv = wt.at(i, j);
          if (wv.is_zero()) continue;
          Cyc cw = wv.conj();
          for (long u = 0; u < 4; ++u)
            for (long v = 0; v < 4; ++v) {
              const Cyc& mv = M.at(i * 4 + u, j * 4 + v);
              if (!mv.is_zero()) B.at(u, v) += mv * cw;
            }
        }
      ExactMatrix D = Q4d * B * Q4;
      for (long u = 0; u < 4; ++u)
        for (long v = 0; v < 4; ++v)
          if (u != v && !D.at(u, v).is_zero()) return false;
    }
  }
  return true;
}

namespace {
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

ExactMatrix uwh_basis3() {
  ExactMatrix U(9, 9, 3, 3);
  for (long p = 0; p < 3; ++p)
    for (long q = 0; q < 3; ++q) {
      ExactMatrix s = wh_basis_state(PhasePoint(3, 1, {p, q}));
      for (long i = 0; i < 9; ++i) U.at(i, 3 * p + q) = s.at(i, 0);
    }
  return U;
}

std::vector<long> n3_of(ArtisanalKind kind) {
  if (kind == ArtisanalKind::Sparse) return {1, 0, 0, 0, 2, 2, 0, 2, 1};
  return {0, 1, 2, 1, 0, 1, 2, 1, 2};
}

ExactMatrix mat_pow(const ExactMatrix& A, long k) {
  ExactMatrix R = ExactMatrix::identity(A.rows, A.d, 1);
  for (long i = 0; i < k; ++i) R = R * A;
  return R;
}
}  // namespace

SectorAnalysis sector_analysis(ArtisanalKind kind) {
  SectorAnalysis rep;
  const std::vector<long> N2 = {1, 0, 0, 1};
  std::vector<long> N3 = n3_of(kind);
  ExactMatrix UWH = uwh_basis3();
  ExactMatrix F3 = gate_fourier(3, 1).matrix;
  ExactMatrix sec = F3.kron(F3.adjoint()) * UWH;  // denom 27
  ExactMatrix secd = sec.adjoint();
  ExactMatrix D2c = quad_diag3(N2, 2, true);
  ExactMatrix Q3 = quad_diag3(N3, 3, true);
  auto slice_d3 = [&](long m) {
    long t = um(-m, 3);
    ExactMatrix D3(9, 9, 3, 1);
    for (long kl = 0; kl < 9; ++kl) D3.at(kl, kl) = Q3.at(kl * 3 + t, kl * 3 + t);
    return D3;
  };
  auto Wm = [&](long m) { return sec * (slice_d3(m) * D2c.adjoint()) * secd; };
  std::vector<ExactMatrix> W{Wm(0), Wm(1), Wm(2)};

  // (i) controlled-W_m form against the rotated u_lambda.
  ExactMatrix T = sector_frame();
  ExactMatrix rotU = T * u_lambda(artisanal(kind)) * T.adjoint();
  ExactMatrix rotUd = rotU.adjoint();
  ExactMatrix I9 = ExactMatrix::identity(9, 3, 1);
  auto quat = [&](long m) {
    // m in {0,1,2}; key 3 = the singlet state.
    if (m == 3) return wh_basis_state(PhasePoint(2, 1, {1, 1})).scaled(Cyc(-1));
    if (m == 0) return wh_basis_state(PhasePoint(2, 1, {0, 0}));
    if (m == 1) return wh_basis_state(PhasePoint(2, 1, {1, 0})).scaled(-Cyc::i());
    return wh_basis_state(PhasePoint(2, 1, {0, 1})).scaled(-Cyc::i());
  };
  ExactMatrix qe = quat(3);
  rep.controlled_ok = true;
  for (long m = 0; m < 3; ++m) {
    ExactMatrix proj = quat(m) * qe.adjoint();
    ExactMatrix lhs = rotU * I9.kron(proj) * rotUd;
    ExactMatrix rhs = W[m].kron(proj);
    if (!lhs.semantic_equal(rhs)) rep.controlled_ok = false;
  }

  // (ii) expansion coefficients f_m(r) = (i/sqrt3) w^{-r^2+rm}.
  Cyc third{mpq_class(1, 3)};
  Cyc gamma_over_3 = Cyc::gamma(3) * third;  // i/sqrt(3)
  rep.fm_ok = true;
  for (long m = 0; m < 3; ++m) {
    ExactMatrix M9 = slice_d3(m) * D2c.adjoint();
    // must be 1_3 x diag(g)
    std::vector<Cyc> g(3);
    for (long l = 0; l < 3; ++l) g[l] = M9.at(l, l);
    for (long k = 0; k < 3; ++k)
      for (long l = 0; l < 3; ++l)
        if (M9.at(3 * k + l, 3 * k + l) != g[l]) rep.fm_ok = false;
    for (long r = 0; r < 3; ++r) {
      Cyc f(0);
      for (long x = 0; x < 3; ++x) f += Cyc::root(3, -r * x) * g[x];
      f *= third;
      if (f != gamma_over_3 * Cyc::root(3, -r * r + r * m)) rep.fm_ok = false;
    }
  }

  // (iii) closed form W_m = (i/sqrt3)(1 + w^-1(w^m (XX)^dag + w^-m XX)).
  ExactMatrix A = weyl(PhasePoint(3, 2, {0, 0, 1, 1}));  // X x X
  rep.closed_ok = true;
  for (long m = 0; m < 3; ++m) {
    ExactMatrix cf = (ExactMatrix::identity(9, 3, 1) +
                      A.adjoint().scaled(Cyc::root(3, -1 + m)) +
                      A.scaled(Cyc::root(3, -1 - m)))
                         .scaled(gamma_over_3);
    if (!W[m].semantic_equal(cf)) rep.closed_ok = false;
  }

  // (iv) W_m W_n^dag = w^{m^2-n^2} (XX)^{m-n}.
  rep.product_ok = true;
  for (long m = 0; m < 3; ++m)
    for (long nn = 0; nn < 3; ++nn) {
      ExactMatrix lhs = W[m] * W[nn].adjoint();
      ExactMatrix rhs =
          mat_pow(A, um(m - nn, 3)).scaled(Cyc::root(3, m * m - nn * nn));
      if (!lhs.semantic_equal(rhs)) rep.product_ok = false;
    }

  // (v) K/J orthogonality to the nontrivial local WH operators.
  std::vector<ExactMatrix> locals;
  for (long i = 1; i < 9; ++i) {
    PhasePoint a = PhasePoint::from_index(3, 1, i);
    locals.push_back(weyl(PhasePoint(3, 2, {a.p(0), 0, a.q(0), 0})));
    locals.push_back(weyl(PhasePoint(3, 2, {0, a.p(0), 0, a.q(0)})));
  }
  rep.ortho_ok = true;
  auto perp = [&](const ExactMatrix& S) {
    for (const auto& g : locals)
      if (!raw_inner(g, S).is_zero()) return false;
    return true;
  };
  for (long m = 0; m < 3; ++m)
    if (!perp(W[m].adjoint() + W[m])) rep.ortho_ok = false;
  for (long m = 0; m < 3; ++m)
    for (long nn = 0; nn < 3; ++nn) {
      if (m == nn) continue;
      if (!perp(W[m] * W[nn].adjoint() + W[nn] * W[m].adjoint()))
        rep.ortho_ok = false;
    }

  // W_m = w^{m^2} sec (1 x U^Q_{(2)} Z^{-m}) sec^dag with U^Q = diag(w^{x^2}).
  ExactMatrix UQ2(3, 3, 3, 1);
  for (long x = 0; x < 3; ++x) UQ2.at(x, x) = Cyc::root(3, x * x);
  ExactMatrix Z3 = weyl(PhasePoint(3, 1, {1, 0}));
  ExactMatrix I3 = ExactMatrix::identity(3, 3, 1);
  rep.preimage_ok = true;
  for (long m = 0; m < 3; ++m) {
    ExactMatrix pre = (sec * I3.kron(UQ2 * mat_pow(Z3, um(-m, 3))) * secd)
                          .scaled(Cyc::root(3, m * m));
    if (!W[m].semantic_equal(pre)) rep.preimage_ok = false;
  }
  return rep;
}

bool verify_operator_picture(const PhaseFunction& lam) {
  long d = lam.d, n = lam.n;
  ExactMatrix U = u_lambda(lam);
  ExactMatrix Ud = U.adjoint();
  auto cc = cross_corr(lam, lam, false);
  auto cct = cross_corr(lam, lam, true);
  Cyc scale{mpq_class(static_cast<unsigned long>(U.denom))};
  for (long ia = 0; ia < lam.size(); ++ia) {
    PhasePoint a = PhasePoint::from_index(d, n, ia);
    std::vector<long> cl(4 * n, 0), cr(4 * n, 0);
    for (long k = 0; k < n; ++k) {
      cl[k] = a.p(k);
      cl[2 * n + k] = a.q(k);
      cr[n + k] = um(-a.p(k), d);
      cr[3 * n + k] = um(-a.q(k), d);
    }
    ExactMatrix La = weyl(PhasePoint(d, 2 * n, cl));
    ExactMatrix Rma = weyl(PhasePoint(d, 2 * n, cr));
    ExactMatrix M = U * La * Ud;
    if (raw_inner(La, M) != scale * cc[ia]) return false;
    if (raw_inner(Rma, M) != scale * cct[ia]) return false;
  }
  return true;
}

So4Report so4_check() {
  So4Report rep;
  auto make = [](std::initializer_list<long> v) {
    ExactMatrix m(4, 4, 2, 1);
    long i = 0;
    for (long x : v) {
      m.e[i] = Cyc(x);
      ++i;
    }
    return m;
  };
  // Index by m+1 for m in {-1,0,1}.
  std::vector<ExactMatrix> J{
      make({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}),
      make({0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0}),
      make({0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0})};
  std::vector<ExactMatrix> K{
      make({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
      make({0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0}),
      make({0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0})};
  auto br = [](const ExactMatrix& A, const ExactMatrix& B) {
    return A * B - B * A;
  };
  rep.brackets_ok = true;
  const long cyc[3][3] = {{-1, 0, 1}, {0, 1, -1}, {1, -1, 0}};
  for (auto& t : cyc) {
    long a = t[0] + 1, b = t[1] + 1, c = t[2] + 1;
    if (!br(J[a], J[b]).semantic_equal(J[c])) rep.brackets_ok = false;
    if (!br(K[a], K[b]).semantic_equal(J[c])) rep.brackets_ok = false;
    if (!br(J[a], K[b]).semantic_equal(K[c])) rep.brackets_ok = false;
    if (!br(K[a], J[b]).semantic_equal(K[c])) rep.brackets_ok = false;
  }
  rep.rl_commute_ok = true;
  for (long m = 0; m < 3; ++m)
    for (long n = 0; n < 3; ++n) {
      ExactMatrix R = J[m] + K[m], L = J[n] - K[n];
      if (!br(R, L).is_zero()) rep.rl_commute_ok = false;
    }
  // Quaternionic basis change: columns (e, -1, 0, 1).
  ExactMatrix Q4(4, 4, 2, 2);
  auto put = [&](long col, const ExactMatrix& v) {
    for (long i = 0; i < 4; ++i) Q4.at(i, col) = v.at(i, 0);
  };
  put(0, wh_basis_state(PhasePoint(2, 1, {1, 1})).scaled(Cyc(-1)));
  put(1, wh_basis_state(PhasePoint(2, 1, {0, 1})).scaled(-Cyc::i()));
  put(2, wh_basis_state(PhasePoint(2, 1, {0, 0})));
  put(3, wh_basis_state(PhasePoint(2, 1, {1, 0})).scaled(-Cyc::i()));
  rep.q4_unitary = Q4.is_unitary();
  // Conjugated traceless local qubit observables are antisymmetric.
  rep.antisym_ok = true;
  EchelonRank rk;
  ExactMatrix I2 = ExactMatrix::identity(2, 2, 1);
  for (long i = 1; i < 4; ++i) {
    PhasePoint a = PhasePoint::from_index(2, 1, i);
    ExactMatrix s = weyl(a);
    for (int side = 0; side < 2; ++side) {
      ExactMatrix op = side == 0 ? s.kron(I2) : I2.kron(s);
      ExactMatrix M = Q4.adjoint() * op * Q4;
      if (!(M + M.transpose()).is_zero()) rep.antisym_ok = false;
      rk.add(std::vector<Cyc>(M.e.begin(), M.e.end()));
    }
  }
  rep.span_dim = rk.rank();
  return rep;
}

}  // namespace hexa
