#include "hexa/pauli.hpp"

#include <numeric>

namespace hexa {

namespace {
long um(long v, long d) {
  v %= d;
  return v < 0 ? v + d : v;
}
long tau_order(long d) { return d % 2 == 0 ? 2 * d : d; }
}  // namespace

ExactMatrix weyl(const PhasePoint& a, long m) {
  long d = a.d, n = a.n;
  if (std::gcd(um(m, tau_order(d)), tau_order(d)) != 1)
    throw std::invalid_argument("invalid Galois index");
  ExactMatrix out(1, 1, d, 1);
  out.at(0, 0) = Cyc(1);
  for (long i = 0; i < n; ++i) {
    long p = a.p(i), q = a.q(i);
    ExactMatrix w(d, d, d, 1);
    for (long x = 0; x < d; ++x) {
      // w^{(d,m)}(p,q)[(x+q) mod d, x] = tau^{-pqm} omega^{m p (x+q)}
      w.at(um(x + q, d), x) =
          Cyc::tau_pow(d, -p * q * m) * Cyc::tau_pow(d, 2 * m * p * (x + q));
    }
    out = out.kron(w);
  }
  return out;
}

ExactMatrix wh_basis_state(const PhasePoint& a) {
  long d = a.d, n = a.n;
  long D = 1;
  for (long i = 0; i < n; ++i) D *= d;
  ExactMatrix w = weyl(a);
  long pq = 0;
  for (long i = 0; i < n; ++i) pq += a.p(i) * a.q(i);
  Cyc ph = Cyc::tau_pow(d, pq);
  unsigned long den = 1;
  for (long i = 0; i < n; ++i) den *= d;
  ExactMatrix s(D * D, 1, d, den);
  for (long i = 0; i < D; ++i)
    for (long j = 0; j < D; ++j) {
      const Cyc& v = w.at(i, j);
      if (!v.is_zero()) s.at(i * D + j, 0) = ph * v;
    }
  return s;
}

CliffordGate gate_gl(const std::vector<long>& G, long d, long n) {
  std::vector<long> Ginv = mat_inverse_mod(G, n, d);  // throws if singular
  long D = 1;
  for (long i = 0; i < n; ++i) D *= d;
  ExactMatrix U(D, D, d, 1);
  std::vector<long> x(n);
  for (long idx = 0; idx < D; ++idx) {
    long t = idx;
    for (long i = n - 1; i >= 0; --i) {
      x[i] = t % d;
      t /= d;
    }
    long out = 0;
    for (long i = 0; i < n; ++i) {
      long s = 0;
      for (long j = 0; j < n; ++j) s += G[i * n + j] * x[j];
      out = out * d + um(s, d);
    }
    U.at(out, idx) = Cyc(1);
  }
  SymplecticMap S;
  S.d = d;
  S.n = n;
  S.scale = 1;
  S.m.assign(4 * n * n, 0);
  // S = diag(G^{-t}, G)
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      S.m[i * 2 * n + j] = Ginv[j * n + i];           // G^{-t}
      S.m[(n + i) * 2 * n + (n + j)] = um(G[i * n + j], d);
    }
  return {std::move(U), std::move(S)};
}

CliffordGate gate_fourier(long d, long n) {
  ExactMatrix F1(d, d, d, d);
  for (long x = 0; x < d; ++x)
    for (long y = 0; y < d; ++y) F1.at(x, y) = Cyc::root(d, x * y);
  ExactMatrix U(1, 1, d, 1);
  U.at(0, 0) = Cyc(1);
  for (long i = 0; i < n; ++i) U = U.kron(F1);
  SymplecticMap S;
  S.d = d;
  S.n = n;
  S.scale = 1;
  S.m.assign(4 * n * n, 0);
  for (long i = 0; i < n; ++i) {
    S.m[i * 2 * n + (n + i)] = 1;           // upper-right +I
    S.m[(n + i) * 2 * n + i] = um(-1, d);   // lower-left -I
  }
  return {std::move(U), std::move(S)};
}

CliffordGate gate_quad(const std::vector<long>& N, long d, long n) {
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (um(N[i * n + j] - N[j * n + i], tau_order(d)) != 0)
        throw std::invalid_argument("N must be symmetric");
  long D = 1;
  for (long i = 0; i < n; ++i) D *= d;
  ExactMatrix U(D, D, d, 1);
  std::vector<long> x(n);
  for (long idx = 0; idx < D; ++idx) {
    long t = idx;
    for (long i = n - 1; i >= 0; --i) {
      x[i] = t % d;
      t /= d;
    }
    long e = 0;
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) e += x[i] * N[i * n + j] * x[j];
    U.at(idx, idx) = Cyc::tau_pow(d, e);
  }
  SymplecticMap S;
  S.d = d;
  S.n = n;
  S.scale = 1;
  S.m.assign(4 * n * n, 0);
  for (long i = 0; i < n; ++i) {
    S.m[i * 2 * n + i] = 1;
    S.m[(n + i) * 2 * n + (n + i)] = 1;
    for (long j = 0; j < n; ++j) S.m[i * 2 * n + (n + j)] = um(N[i * n + j], d);
  }
  return {std::move(U), std::move(S)};
}

CliffordGate gate_uwh(long d) {
  // Literal product U^GL_{[[1,1],[0,1]]} (1 x F) on two qudits.
  CliffordGate cx = gate_gl({1, 1, 0, 1}, d, 2);
  CliffordGate f1 = gate_fourier(d, 1);
  ExactMatrix one = ExactMatrix::identity(d, d, 1);
  ExactMatrix U = cx.matrix * one.kron(f1.matrix);
  SymplecticMap S;
  S.d = d;
  S.n = 2;
  S.scale = 1;
  long mm = um(-1, d);
  S.m = {1, 0, 0, 0, mm, 0, 0, 1, 0, mm, 1, 0, 0, mm, 0, 0};
  return {std::move(U), std::move(S)};
}

MetaplecticReport verify_metaplectic(const CliffordGate& g) {
  MetaplecticReport rep;
  long d = g.symp.d, n = g.symp.n;
  long P = 1;
  for (long i = 0; i < 2 * n; ++i) P *= d;
  rep.phases.resize(P);
  const ExactMatrix& U = g.matrix;
  for (long idx = 0; idx < P; ++idx) {
    PhasePoint a = PhasePoint::from_index(d, n, idx);
    ExactMatrix lhs = U * weyl(a);
    ExactMatrix rhs = weyl(g.symp.apply(a)) * U;
    // lhs == c * rhs for a unimodular c?
    Cyc c;
    bool found = false;
    for (size_t i = 0; i < rhs.e.size() && !found; ++i) {
      if (!rhs.e[i].is_zero()) {
        c = lhs.e[i] * rhs.e[i].inverse();
        found = true;
      }
    }
    bool ok = found && c.is_unimodular();
    if (ok) {
      for (size_t i = 0; i < rhs.e.size(); ++i) {
        if (lhs.e[i] != c * rhs.e[i]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      rep.ok = false;
      rep.first_violation = a;
      return rep;
    }
    rep.phases[idx] = c;
  }
  return rep;
}

DiagonalCliffordData diagonal_clifford_decompose(const ExactMatrix& D, long d,
                                                 long n) {
  DiagonalCliffordData out;
  long dim = D.rows;
  long ord = tau_order(d);
  Cyc tau = Cyc::tau(d);
  Cyc l0 = D.at(0, 0);
  if (l0.is_zero()) return out;
  Cyc l0inv = l0.inverse();
  // Exponent table: lambda_x / lambda_0 = tau^{e(x)}.
  std::vector<long> e(dim, -1);
  for (long x = 0; x < dim; ++x) {
    Cyc r = D.at(x, x) * l0inv;
    Cyc t(1);
    for (long k = 0; k < ord; ++k) {
      if (r == t) {
        e[x] = k;
        break;
      }
      t *= tau;
    }
    if (e[x] < 0) return out;  // not a tau-power: not Clifford
  }
  // Fit e(x) = 2 p.x + x N x mod ord over p in Z_d^n and symmetric N.
  auto unit = [&](long i) {
    long idx = 1;
    for (long k = i + 1; k < n; ++k) idx *= d;
    return idx;
  };
  std::vector<long> p(n), N(n * n);
  std::vector<long> pv(n, 0);
  auto verify = [&]() {
    std::vector<long> x(n);
    for (long idx = 0; idx < dim; ++idx) {
      long t = idx;
      for (long i = n - 1; i >= 0; --i) {
        x[i] = t % d;
        t /= d;
      }
      long pred = 0;
      for (long i = 0; i < n; ++i) {
        pred += 2 * p[i] * x[i];
        for (long j = 0; j < n; ++j) pred += x[i] * N[i * n + j] * x[j];
      }
      if (um(pred, ord) != e[idx]) return false;
    }
    return true;
  };
  long total = 1;
  for (long i = 0; i < n; ++i) total *= d;
  for (long pc = 0; pc < total; ++pc) {
    long t = pc;
    for (long i = n - 1; i >= 0; --i) {
      p[i] = t % d;
      t /= d;
    }
    for (long i = 0; i < n; ++i)
      N[i * n + i] = um(e[unit(i)] - 2 * p[i], ord);
    // Off-diagonals: 2 N_ij = e(ei+ej) - e(ei) - e(ej) mod ord.
    bool feasible = true;
    std::vector<std::pair<long, long>> half_choices;
    for (long i = 0; i < n && feasible; ++i)
      for (long j = i + 1; j < n && feasible; ++j) {
        long delta = um(e[unit(i) + unit(j)] - e[unit(i)] - e[unit(j)], ord);
        if (ord % 2 == 1) {
          long inv2 = mod_inverse(2, ord);
          N[i * n + j] = N[j * n + i] = um(delta * inv2, ord);
        } else if (delta % 2 == 0) {
          half_choices.push_back({i, j});
          N[i * n + j] = N[j * n + i] = delta / 2;
        } else {
          feasible = false;
        }
      }
    if (!feasible) continue;
    long combos = 1;
    for (size_t k = 0; k < half_choices.size(); ++k) combos *= 2;
    for (long mask = 0; mask < combos; ++mask) {
      for (size_t k = 0; k < half_choices.size(); ++k) {
        auto [i, j] = half_choices[k];
        long delta = um(e[unit(i) + unit(j)] - e[unit(i)] - e[unit(j)], ord);
        long v = delta / 2 + ((mask >> k) & 1 ? ord / 2 : 0);
        N[i * n + j] = N[j * n + i] = um(v, ord);
      }
      if (verify()) {
        out.clifford = true;
        out.phase = l0;
        out.p = p;
        out.N = N;
        return out;
      }
    }
  }
  return out;
}

CrtFactorization crt_factorize(long d1, long d2, long m) {
  if (std::gcd(d1, d2) != 1) throw std::invalid_argument("not coprime");
  long d = d1 * d2;
  CrtFactorization out;
  out.R = ExactMatrix(d, d, d, 1);
  for (long x = 0; x < d; ++x)
    out.R.at((x % d1) * d2 + (x % d2), x) = Cyc(1);
  long m1 = d2 % (tau_order(d1));
  long m2 = d1 % (tau_order(d2));
  out.kappa1 = mod_inverse(m1 == 0 ? 1 : m1, tau_order(d1));
  out.kappa2 = mod_inverse(m2 == 0 ? 1 : m2, tau_order(d2));
  ExactMatrix Rd = out.R.adjoint();
  out.verified = true;
  for (long p = 0; p < d && out.verified; ++p) {
    for (long q = 0; q < d && out.verified; ++q) {
      ExactMatrix lhs = out.R * weyl(PhasePoint(d, 1, {p, q}), m) * Rd;
      long g1 = um(out.kappa1 * m, tau_order(d1));
      long g2 = um(out.kappa2 * m, tau_order(d2));
      // The factor phases use the unreduced (p,q): correct each reduced
      // operator by tau^{kappa ((p mod di)(q mod di) - p q)}.
      ExactMatrix w1 =
          weyl(PhasePoint(d1, 1, {p % d1, q % d1}), g1)
              .scaled(Cyc::tau_pow(d1, g1 * ((p % d1) * (q % d1) - p * q)));
      ExactMatrix w2 =
          weyl(PhasePoint(d2, 1, {p % d2, q % d2}), g2)
              .scaled(Cyc::tau_pow(d2, g2 * ((p % d2) * (q % d2) - p * q)));
      ExactMatrix rhs = w1.kron(w2);
      if (!lhs.semantic_equal(rhs)) out.verified = false;
    }
  }
  return out;
}

}  // namespace hexa
