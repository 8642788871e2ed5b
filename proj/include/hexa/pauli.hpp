#pragma once

#include <optional>

#include "hexa/matrix.hpp"
#include "hexa/phase_space.hpp"

namespace hexa {

// n-qudit Weyl-Heisenberg operator w(a) = tau^{-pq} Z^p X^q (tensor product
// over qudits), with the Galois variant tau -> tau^m. Entries are integer
// cyclotomics; denom = 1.
ExactMatrix weyl(const PhasePoint& a, long m = 1);

// Maximally entangled basis state |Phi_a> = (tau^{p.q} w(a) x 1)|Phi> as a
// d^{2n} x 1 column with denom = d^n.
ExactMatrix wh_basis_state(const PhasePoint& a);

struct CliffordGate {
  ExactMatrix matrix;
  SymplecticMap symp;
};

// U|x> = |Gx> with G an invertible n x n matrix mod d (row-major).
CliffordGate gate_gl(const std::vector<long>& G, long d, long n);
// n-fold Fourier gate, entries omega^{xy}/sqrt(d) per qudit; tag J.
CliffordGate gate_fourier(long d, long n);
// U|x> = tau^{x N x}|x> for symmetric N (row-major n x n); tag [[I,N],[0,I]].
CliffordGate gate_quad(const std::vector<long>& N, long d, long n);
// The two-qudit basis-change gate: literal product U^GL_{[[1,1],[0,1]]} (1 x F)
// with the explicit 4x4 symplectic tag (r,s,0,0) -> (r,-r,-s,-s).
CliffordGate gate_uwh(long d);

struct MetaplecticReport {
  bool ok = true;
  PhasePoint first_violation;
  std::vector<Cyc> phases;  // indexed by phase-point index
};

// Checks U w(a) U^dag proportional to w(S a) for every a, by comparing
// U w(a) == c w(Sa) U (quadratic in the dimension per point).
MetaplecticReport verify_metaplectic(const CliffordGate& g);

struct DiagonalCliffordData {
  bool clifford = false;
  Cyc phase;            // global phase e^{i phi} = first diagonal entry
  std::vector<long> p;  // length n, mod d
  std::vector<long> N;  // row-major n x n, mod (d odd ? d : 2d)
};

// Recovers (phi, p, N) with D|x> = phase * tau^{2 p.x + x N x}, or reports
// not-Clifford.
DiagonalCliffordData diagonal_clifford_decompose(const ExactMatrix& D, long d,
                                                 long n);

struct CrtFactorization {
  ExactMatrix R;  // permutation, |x> -> |x mod d1> |x mod d2>
  long kappa1 = 0;
  long kappa2 = 0;
  bool verified = false;  // sweep over all (p,q) in Z_d^2
};

CrtFactorization crt_factorize(long d1, long d2, long m = 1);

}  // namespace hexa
