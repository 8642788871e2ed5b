#pragma once

#include "hexa/doubly_perfect.hpp"

namespace hexa {

// Tracial-state inner product of the semantic values: tr(X^dag Y) / D,
// with the sqrt-denominator bookkeeping folded in. Requires the product of
// the two denoms to be a perfect square.
Cyc hs_inner(const ExactMatrix& X, const ExactMatrix& Y);

// ||A||_4^4 = tau((A A^dag)^2) of the semantic value; exact rational.
mpq_class schatten4(const ExactMatrix& A);

// eta^2 = Tr(P_A P_B) between the spans of two operator lists, via Gram
// matrices over the cyclotomics. Throws on a degenerate basis.
mpq_class overlap_eta_sq(const std::vector<ExactMatrix>& A,
                         const std::vector<ExactMatrix>& B);

// The factor-local WH operator bases on C^{d^n} x C^{d^n}.
std::vector<ExactMatrix> left_wh_basis(long d, long n);
std::vector<ExactMatrix> right_wh_basis(long d, long n);

// eta^2(U L U^dag, L) and eta^2(U L U^dag, R) for a unitary on the doubled
// space, using orthonormality of the conjugated WH basis.
struct EtaPair {
  mpq_class to_L;
  mpq_class to_R;
};
EtaPair eta_conjugated_left(const ExactMatrix& U, long d, long n);

struct PropReport {
  TwoUnitaryFlags flags;
  EtaPair eta;          // for U L U^dag
  bool dual_matches = false;        // flags.dual  <=> eta.to_L == 1
  bool gamma_matches = false;       // flags.gamma_dual <=> eta.to_R == 1
  bool consistent = false;
};
PropReport check_prop_equivalences(const ExactMatrix& U, long d, long n);

// Support dimensions of the conjugated factor algebras of a 36x36 unitary
// across the 6 = 3*2 split: first = dimension of the qubit-factor components
// of U (M_3 x M_3 x 1) U^dag, second = qutrit-factor components of the qubit
// algebra. Expected (4, 3) for the artisanal solutions, (1, 1) for identity.
std::pair<long, long> support_algebra_dim(const ExactMatrix& U);

// Containment half of the support statement: every qubit-factor component of
// U (M_3 x M_3 x 1) U^dag is diagonal in the qubit-pair WH basis. Holds for
// every WH-diagonal U at d=6, not just the solutions.
bool support_containment(const ExactMatrix& U);

struct SectorAnalysis {
  bool controlled_ok = false;  // controlled-W_m form against u_lambda
  bool fm_ok = false;          // f_m(r) = (i/sqrt3) w^{-r^2+rm}   (sparse)
  bool closed_ok = false;      // W_m closed form                  (sparse)
  bool product_ok = false;     // W_m W_n^dag = w^{m^2-n^2}(XX)^{m-n} (sparse)
  bool ortho_ok = false;       // K/J orthogonality conditions
  bool preimage_ok = false;    // W_m = w^{m^2} U (1 x U^Q Z^{-m}) U^dag (sparse)
};
SectorAnalysis sector_analysis(ArtisanalKind kind);

// Operator-picture recomputation of the autocorrelations:
// tr(L_a^dag U L_a U^dag) = (lam * lam)(a) and
// tr(R_{-a}^dag U L_a U^dag) = (lam *~ lam)(a).
bool verify_operator_picture(const PhaseFunction& lam);

struct So4Report {
  bool brackets_ok = false;   // [J_a,J_b]=J_c etc., cyclic
  bool rl_commute_ok = false; // [J_m+K_m, J_n-K_n] = 0
  bool q4_unitary = false;
  bool antisym_ok = false;    // conjugated local qubit traceless observables
  long span_dim = 0;          // expected 6
};
So4Report so4_check();

}  // namespace hexa
