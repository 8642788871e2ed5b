#include "hexa/hadamard.hpp"

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
long pq_dot(const PhasePoint& a) {
  long s = 0;
  for (long i = 0; i < a.n; ++i) s += a.p(i) * a.q(i);
  return s;
}
// w(0,...,0,q-block) and w(p-block,0,...,0) on the doubled 2n-qudit space.
ExactMatrix z_part(long d, long n, const std::vector<long>& p) {
  std::vector<long> c(4 * n, 0);
  for (long i = 0; i < 2 * n; ++i) c[i] = p[i];
  return weyl(PhasePoint(d, 2 * n, std::move(c)));
}
ExactMatrix x_part(long d, long n, const std::vector<long>& q) {
  std::vector<long> c(4 * n, 0);
  for (long i = 0; i < 2 * n; ++i) c[2 * n + i] = q[i];
  return weyl(PhasePoint(d, 2 * n, std::move(c)));
}
bool commutes(const ExactMatrix& A, const ExactMatrix& B) {
  return (A * B).semantic_equal(B * A);
}
}  // namespace

HadamardPair build_hadamard(const PhaseFunction& lam) {
  long d = lam.d, n = lam.n;
  long sz = lam.size();
  unsigned long den = 1;
  for (long i = 0; i < 2 * n; ++i) den *= d;
  HadamardPair hp;
  hp.lambda = lam;
  hp.G = ExactMatrix(sz, sz, d, den);
  hp.H = ExactMatrix(sz, sz, d, den);
  for (long ia = 0; ia < sz; ++ia) {
    PhasePoint a = PhasePoint::from_index(d, n, ia);
    for (long ib = 0; ib < sz; ++ib) {
      PhasePoint b = PhasePoint::from_index(d, n, ib);
      const Cyc& lv = lam.values[(a - b).index()];
      hp.G.at(ia, ib) = lv * Cyc::root(d, symp_form(a, b));
      hp.H.at(ia, ib) =
          Cyc::root(d, pq_dot(a)) * lv * Cyc::root(d, -pq_dot(b));
    }
  }
  return hp;
}

HFactorizationReport verify_h_factorization(const PhaseFunction& lam) {
  long d = lam.d, n = lam.n;
  long D = ipow(d, n);
  HFactorizationReport rep;
  ExactMatrix H = build_hadamard(lam).H;
  // The eigenvalue attached to the rotated state |Phi~_a> is the symplectic
  // Fourier transform read at (p,-q): the (F x 1) rotation singles out the
  // dot-product pairing, which differs from the symplectic one by a partial
  // transpose of the argument.
  PhaseFunction flam = act_pt(act_fourier(lam));
  ExactMatrix UF = u_lambda(flam);
  ExactMatrix M = gate_fourier(d, n).matrix.kron(ExactMatrix::identity(D, d, 1));
  ExactMatrix rhs = M * UF * M.adjoint();
  rep.diag_ok = H.semantic_equal(rhs);
  rep.eigen_ok = true;
  for (long ia = 0; ia < lam.size(); ++ia) {
    PhasePoint a = PhasePoint::from_index(d, n, ia);
    ExactMatrix v = M * wh_basis_state(a);
    ExactMatrix lhs = H * v;
    ExactMatrix want = v.scaled(flam.values[ia]);
    if (!lhs.semantic_equal(want)) {
      rep.eigen_ok = false;
      rep.first_bad_a = ia;
      break;
    }
  }
  return rep;
}

bool verify_gamma_link(const PhaseFunction& lam) {
  ExactMatrix H_pt = build_hadamard(act_pt(lam)).H;
  ExactMatrix G = build_hadamard(lam).G;
  return partial_transpose(H_pt).semantic_equal(G);
}

CirculantReport circulant_checks(const PhaseFunction& lam) {
  long d = lam.d, n = lam.n;
  long D = ipow(d, n);
  CirculantReport rep;
  ExactMatrix U = u_lambda(lam);
  HadamardPair hp = build_hadamard(lam);
  rep.ulambda_stab = true;
  rep.h_stab = true;
  for (long i = 0; i < n && (rep.ulambda_stab || rep.h_stab); ++i) {
    std::vector<long> qq(2 * n, 0), pp(2 * n, 0), pz(2 * n, 0), qx(2 * n, 0);
    qq[i] = qq[n + i] = 1;                      // X_i x X_{n+i}
    pp[i] = 1; pp[n + i] = um(-1, d);           // Z_i x Z_{n+i}^dag
    pz[i] = 1; qx[n + i] = 1;                   // Z_i x X_{n+i} pieces
    ExactMatrix XX = x_part(d, n, qq);
    ExactMatrix ZZd = z_part(d, n, pp);
    if (!commutes(U, XX) || !commutes(U, ZZd)) rep.ulambda_stab = false;
    ExactMatrix ZX = z_part(d, n, pz) * x_part(d, n, qx);
    std::vector<long> px(2 * n, 0), qz(2 * n, 0);
    px[n + i] = 1;  // Z on second half
    qz[i] = 1;      // X on first half
    ExactMatrix XZ = z_part(d, n, px) * x_part(d, n, qz);
    if (!commutes(hp.H, ZX) || !commutes(hp.H, XZ)) rep.h_stab = false;
  }
  rep.g_columns = true;
  for (long iq = 0; iq < lam.size() && rep.g_columns; ++iq) {
    PhasePoint q = PhasePoint::from_index(d, n, iq);
    // (Z^{q2} x Z^{-q1}) (X^{q1} x X^{q2})
    std::vector<long> zp(2 * n), xq(2 * n);
    for (long i = 0; i < n; ++i) {
      zp[i] = q.q(i);
      zp[n + i] = um(-q.p(i), d);
      xq[i] = q.p(i);
      xq[n + i] = q.q(i);
    }
    ExactMatrix W = z_part(d, n, zp) * x_part(d, n, xq);
    for (long r = 0; r < lam.size(); ++r) {
      Cyc pred(0);
      for (long k = 0; k < lam.size(); ++k) {
        const Cyc& w = W.at(r, k);
        if (!w.is_zero()) pred += w * hp.G.at(k, 0);
      }
      if (hp.G.at(r, iq) != pred) {
        rep.g_columns = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace hexa
