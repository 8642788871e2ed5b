#pragma once

#include "hexa/doubly_perfect.hpp"

namespace hexa {

// The two circulant-type Hadamard constructions from a unimodular lambda:
//   G_{a,b} = lambda(a-b) omega^{[a,b]}
//   H_{a,b} = omega^{a1.a2} lambda(a-b) omega^{-b1.b2}
// stored with denom = d^{2n} so the semantic matrices are the d^{-n}-scaled
// candidates whose two-unitarity tracks double perfection of lambda.
struct HadamardPair {
  ExactMatrix G;
  ExactMatrix H;
  PhaseFunction lambda;
};

HadamardPair build_hadamard(const PhaseFunction& lam);

struct HFactorizationReport {
  bool diag_ok = false;   // H = d^n (F x 1) U_{F lambda} (F x 1)^dag
  bool eigen_ok = false;  // H |Phi~_a> = d^n (F lambda)(a) |Phi~_a> for all a
  long first_bad_a = -1;
};
HFactorizationReport verify_h_factorization(const PhaseFunction& lam);

// H(lambda o PT)^Gamma == G(lambda), entrywise.
bool verify_gamma_link(const PhaseFunction& lam);

struct CirculantReport {
  bool ulambda_stab = false;  // U_lambda commutes with X x X and Z x Z^dag
  bool h_stab = false;        // H commutes with Z x X and X x Z
  bool g_columns = false;     // G|q> = (Z^{q2} x Z^{-q1})(X^{q1} x X^{q2}) G|0>
};
CirculantReport circulant_checks(const PhaseFunction& lam);

}  // namespace hexa
