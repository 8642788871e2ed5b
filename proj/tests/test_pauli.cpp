#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "hexa/pauli.hpp"

using namespace hexa;

namespace {
long um(long v, long d) {
  v %= d;
  return v < 0 ? v + d : v;
}

// Displacement operator with the tau phase evaluated at the *unreduced*
// integer pair (p,q); differs from weyl(reduced) by a power of tau at even d.
ExactMatrix wlit(long d, long p, long q) {
  long pr = um(p, d), qr = um(q, d);
  return weyl(PhasePoint(d, 1, {pr, qr}))
      .scaled(Cyc::tau_pow(d, pr * qr - p * q));
}
}  // namespace

TEST_CASE("single-qudit Weyl operators against explicit Z and X") {
  // d=3, a=(1,0): Z = diag(1, w, w^2)
  ExactMatrix Z = weyl(PhasePoint(3, 1, {1, 0}));
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y)
      CHECK(Z.at(x, y) == ((x == y) ? Cyc::root(3, x) : Cyc(0)));
  // d=2, a=(1,1): tau^{-1} Z X = -i Z X = Y (up to the standard convention)
  ExactMatrix Y = weyl(PhasePoint(2, 1, {1, 1}));
  CHECK(Y.at(0, 0).is_zero());
  CHECK(Y.at(1, 1).is_zero());
  CHECK(Y.at(0, 1) == Cyc(-1) * Cyc::i());
  CHECK(Y.at(1, 0) == Cyc::i());
}

TEST_CASE("Weyl composition law w(a)w(b) = tau^{[a,b]} w(a+b)") {
  for (auto [d, n] : std::vector<std::pair<long, long>>{
           {2, 1}, {3, 1}, {6, 1}, {3, 2}}) {
    long sz = 1;
    for (long i = 0; i < 2 * n; ++i) sz *= d;
    for (long ia = 0; ia < sz; ++ia)
      for (long ib = 0; ib < sz; ++ib) {
        PhasePoint a = PhasePoint::from_index(d, n, ia);
        PhasePoint b = PhasePoint::from_index(d, n, ib);
        ExactMatrix lhs = weyl(a) * weyl(b);
        // The sum a+b must be read literally: reducing it into {0..d-1}
        // changes the tau phase at even d, so the reduced operator needs the
        // per-qudit correction tau^{p_r q_r - p q}.
        PhasePoint s = a + b;
        long corr = 0, symp = 0;
        for (long i = 0; i < n; ++i) {
          corr += s.p(i) * s.q(i) -
                  (a.p(i) + b.p(i)) * (a.q(i) + b.q(i));
          symp += a.p(i) * b.q(i) - a.q(i) * b.p(i);  // literal, not mod d
        }
        ExactMatrix rhs = weyl(s).scaled(Cyc::tau_pow(d, symp + corr));
        CHECK(lhs.semantic_equal(rhs));
        if (!lhs.semantic_equal(rhs)) return;  // avoid noise cascades
      }
  }
}

TEST_CASE("Weyl operators are unitary and omega-commute") {
  for (long ia = 0; ia < 36; ++ia) {
    PhasePoint a = PhasePoint::from_index(6, 1, ia);
    ExactMatrix w = weyl(a);
    CHECK(w.is_unitary());
    for (long ib = 0; ib < 36; ++ib) {
      PhasePoint b = PhasePoint::from_index(6, 1, ib);
      ExactMatrix lhs = w * weyl(b);
      ExactMatrix rhs =
          (weyl(b) * w).scaled(Cyc::root(6, symp_form(a, b)));
      CHECK(lhs.semantic_equal(rhs));
      if (!lhs.semantic_equal(rhs)) return;
    }
  }
}

TEST_CASE("maximally entangled WH basis") {
  // a = 0: sum_x |xx> / sqrt d
  ExactMatrix phi0 = wh_basis_state(PhasePoint::zero(3, 1));
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y)
      CHECK(phi0.at(3 * x + y, 0) == ((x == y) ? Cyc(1) : Cyc(0)));
  // d=2, a=(1,1): proportional to |01> - |10> (a singlet-type pattern)
  ExactMatrix bell = wh_basis_state(PhasePoint(2, 1, {1, 1}));
  CHECK(bell.at(0, 0).is_zero());
  CHECK(bell.at(3, 0).is_zero());
  CHECK(bell.at(1, 0) == Cyc(-1) * bell.at(2, 0));
  CHECK_FALSE(bell.at(1, 0).is_zero());
  // Gram matrix = identity at d=3
  for (long ia = 0; ia < 9; ++ia)
    for (long ib = 0; ib < 9; ++ib) {
      PhasePoint a = PhasePoint::from_index(3, 1, ia);
      PhasePoint b = PhasePoint::from_index(3, 1, ib);
      Cyc g = (wh_basis_state(a).adjoint() * wh_basis_state(b)).at(0, 0);
      CHECK(g == ((ia == ib) ? Cyc(3) : Cyc(0)));
    }
}

TEST_CASE("WH-basis stabilizer identity with literal tau phases") {
  // (w(p1,-p2) x conj-variant w(-p1,-p2)) |Phi_{p,q}>
  //   = w^{p1 q + p2 p} |Phi_{p,q}>
  for (long d : {2L, 3L, 6L}) {
    for (long p = 0; p < d; ++p)
      for (long q = 0; q < d; ++q)
        for (long p1 = 0; p1 < d; ++p1)
          for (long p2 = 0; p2 < d; ++p2) {
            ExactMatrix op = wlit(d, p1, -p2).kron(wlit(d, -p1, -p2));
            ExactMatrix v = wh_basis_state(PhasePoint(d, 1, {p, q}));
            ExactMatrix lhs = op * v;
            ExactMatrix rhs = v.scaled(Cyc::root(d, p1 * q + p2 * p));
            CHECK(lhs.semantic_equal(rhs));
            if (!lhs.semantic_equal(rhs)) return;
          }
  }
}

TEST_CASE("Clifford gates carry correct symplectic tags") {
  for (long d : {3L, 6L}) {
    CHECK(verify_metaplectic(gate_fourier(d, 1)).ok);
    CHECK(verify_metaplectic(gate_gl({1}, d, 1)).ok);
    CHECK(verify_metaplectic(gate_quad({1}, d, 1)).ok);
  }
  CHECK(verify_metaplectic(gate_fourier(3, 2)).ok);
  CHECK(verify_metaplectic(gate_gl({1, 2, 2, 2}, 3, 2)).ok);
  CHECK(verify_metaplectic(gate_quad({1, 2, 2, 0}, 3, 2)).ok);
  // identity gate: all conjugation phases are 1
  MetaplecticReport idrep = verify_metaplectic(gate_gl({1}, 3, 1));
  for (const Cyc& c : idrep.phases) CHECK(c.is_one());
}

TEST_CASE("gate_uwh has the advertised symplectic tag") {
  for (long d : {3L, 6L}) {
    CliffordGate g = gate_uwh(d);
    CHECK(verify_metaplectic(g).ok);
    std::vector<long> want{1, 0, 0, 0, um(-1, d), 0, 0, 1,
                           0, um(-1, d), 1, 0, 0, um(-1, d), 0, 0};
    CHECK(g.symp.m == want);
    CHECK(g.symp.is_similitude());
  }
}

TEST_CASE("non-Clifford diagonal is detected") {
  // Every omega_3-power diagonal on one qutrit is Clifford (any function on
  // Z_3 is a quadratic polynomial), so a non-example needs a foreign phase.
  ExactMatrix Dq = ExactMatrix::identity(3, 3, 1);
  Dq.at(2, 2) = Cyc::root(3, 1);
  CHECK(diagonal_clifford_decompose(Dq, 3, 1).clifford);
  ExactMatrix D = ExactMatrix::identity(3, 3, 1);
  D.at(2, 2) = Cyc::i();
  CHECK_FALSE(diagonal_clifford_decompose(D, 3, 1).clifford);
  CliffordGate gD{D, SymplecticMap{}};
  // and conjugation does not stay in the Weyl frame either
  gD.symp = gate_gl({1}, 3, 1).symp;
  CHECK_FALSE(verify_metaplectic(gD).ok);
}

TEST_CASE("diagonal Clifford decomposition round trips") {
  auto rebuild = [](const DiagonalCliffordData& dc, long d, long n) {
    long sz = 1;
    for (long i = 0; i < n; ++i) sz *= d;
    ExactMatrix D(sz, sz, d, 1);
    for (long x = 0; x < sz; ++x) {
      std::vector<long> xs(n);
      long t = x;
      for (long i = n - 1; i >= 0; --i) {
        xs[i] = t % d;
        t /= d;
      }
      long ex = 0;
      for (long i = 0; i < n; ++i) {
        ex += 2 * dc.p[i] * xs[i];
        for (long j = 0; j < n; ++j) ex += dc.N[i * n + j] * xs[i] * xs[j];
      }
      D.at(x, x) = dc.phase * Cyc::tau_pow(d, ex);
    }
    return D;
  };
  // identity decomposes trivially
  DiagonalCliffordData idd =
      diagonal_clifford_decompose(ExactMatrix::identity(3, 3, 1), 3, 1);
  CHECK(idd.clifford);
  CHECK(idd.phase.is_one());
  CHECK(idd.p == std::vector<long>{0});
  CHECK(idd.N == std::vector<long>{0});
  // random quadratic diagonals round trip at d=3, n in {1,2}
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    for (long n : {1L, 2L}) {
      long d = 3, sz = (n == 1) ? 3 : 9;
      std::uniform_int_distribution<long> u(0, d - 1);
      DiagonalCliffordData src;
      src.clifford = true;
      src.phase = Cyc::root(12, u(rng));
      src.p.resize(n);
      src.N.assign(n * n, 0);
      for (long i = 0; i < n; ++i) {
        src.p[i] = u(rng);
        for (long j = 0; j <= i; ++j)
          src.N[i * n + j] = src.N[j * n + i] = u(rng);
      }
      ExactMatrix D = rebuild(src, d, n);
      DiagonalCliffordData got = diagonal_clifford_decompose(D, d, n);
      CHECK(got.clifford);
      CHECK(rebuild(got, d, n).semantic_equal(D));
      (void)sz;
    }
  }
}

TEST_CASE("CRT factorization of the Weyl operators") {
  CrtFactorization f32 = crt_factorize(3, 2);
  CHECK(f32.verified);
  CHECK(f32.kappa1 == 2);  // -1 mod 3
  CHECK(f32.kappa2 == 3);  // -1 mod 4
  CHECK(f32.R.is_unitary());
  CrtFactorization f23 = crt_factorize(2, 3);
  CHECK(f23.verified);
  CrtFactorization f53 = crt_factorize(5, 3);
  CHECK(f53.verified);
  CHECK(f53.kappa1 == 2);
  CHECK(f53.kappa2 == 2);
}
