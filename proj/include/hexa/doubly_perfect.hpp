#pragma once

#include <optional>

#include "hexa/pauli.hpp"
#include "hexa/two_unitary.hpp"

namespace hexa {

// Unimodular function lambda: Z_d^{2n} -> C, stored as exact values in
// lexicographic phase-point order; when the values are all powers of a single
// root of unity an exponent table (base, exponents) is kept alongside for
// compact serialization and for actions defined on exponents.
struct PhaseFunction {
  long d = 1;
  long n = 1;
  std::vector<Cyc> values;  // size d^{2n}
  bool has_exponents = false;
  long base = 1;
  std::vector<long> exponents;  // values[i] = zeta_base^{exponents[i]}

  long size() const { return static_cast<long>(values.size()); }
  const Cyc& at(const PhasePoint& a) const { return values[a.index()]; }

  static PhaseFunction from_exponents(long d, long n, long base,
                                      std::vector<long> e);
  static PhaseFunction from_values(long d, long n, std::vector<Cyc> v);
  bool is_unimodular() const;
  bool operator==(const PhaseFunction& o) const;
};

// (f * g)(a) = sum_b conj(f(b)) g(a+b), times omega_d^{[a,b]} when twisted.
std::vector<Cyc> cross_corr(const PhaseFunction& f, const PhaseFunction& g,
                            bool twisted);

struct DpfFlags {
  bool unimodular = false;
  bool perfect = false;  // standard auto-correlation vanishes off 0
  bool doubly = false;   // twisted auto-correlation vanishes off 0
  bool all() const { return unimodular && perfect && doubly; }
  bool operator==(const DpfFlags& o) const = default;
};

DpfFlags is_doubly_perfect(const PhaseFunction& lam);

// Quadratic-form pair of the d=6 ansatz: P symmetric 2x2 over Z_3 acting on
// the singlet coordinates (k,l), Q symmetric 3x3 over Z_3 added on the
// triplet coordinates (k,l,m).
struct SectorPair {
  std::vector<long> P;  // row-major 2x2
  std::vector<long> Q;  // row-major 3x3
  bool operator==(const SectorPair& o) const = default;
};

PhaseFunction lambda_from_pq(const SectorPair& pq);
// Fits (P,Q) from a d=6 function in the ansatz class (values powers of
// omega_3); nullopt when out of class.
std::optional<SectorPair> pq_from_lambda(const PhaseFunction& lam);

enum class ArtisanalKind { Sparse, Sym };
SectorPair artisanal_pq(ArtisanalKind kind);
PhaseFunction artisanal(ArtisanalKind kind);

// U_lambda = sum_a lambda(a) |Phi_a><Phi_a|, denom d^{2n}.
ExactMatrix u_lambda(const PhaseFunction& lam);

// Sector decomposition of the artisanal solutions: qutrit-pair gate U2,
// qutrit-pair x m-register gate U3, and their assembly through the triplet
// isometry, compared against u_lambda in the rotated singlet/triplet frame.
struct SectorBuild {
  CliffordGate u2;        // 9x9 with its symplectic tag
  ExactMatrix u3;         // 27x27
  ExactMatrix assembled;  // 36x36, rotated frame
  ExactMatrix rotated;    // T u_lambda T^dag
  bool matches = false;
  std::vector<long> n3;  // the 3x3 form used for U3
};
SectorBuild build_sectors(ArtisanalKind kind);

// Basis rotation T = (F x F^dag x 1_4) Pi (R x R): CRT split on both legs,
// regrouping to (qutrit,qutrit,qubit,qubit), then the qutrit-pair Fourier
// frame. Denominator 9.
ExactMatrix sector_frame();
// Permutation-only part Pi (R x R): regroups to (qutrit,qutrit,qubit,qubit).
ExactMatrix sector_permutation();

// lambda(a) = tau_d^{a N a} for symmetric 2n x 2n integer N.
PhaseFunction quadratic_lambda(const std::vector<long>& N, long d, long n);
// True iff N and N+J have trivial kernel over prime Z_d.
bool quadratic_criterion(const std::vector<long>& N, long d, long n);

// GF(2^n) quadratic construction: trace-orthonormal basis, G_ij = tr(b_i a b_j),
// N = diag(G,G). alpha_index picks a = g^alpha_index for a generator g.
PhaseFunction gf2n_lambda(long n, long alpha_index);
// Kite-support block form: A_ij = 1 iff i+j <= n+1, N = diag(A,A) over Z_2.
bool kite_matrix_check(long n);

// The seven symmetries. Each returns a new PhaseFunction.
PhaseFunction act_symplectic(const PhaseFunction& lam, const SymplecticMap& S);
PhaseFunction act_pt(const PhaseFunction& lam);  // (p,q) -> (p,-q)
PhaseFunction act_shift(const PhaseFunction& lam, const PhasePoint& b);
PhaseFunction act_character(const PhaseFunction& lam, const PhasePoint& b);
PhaseFunction act_galois(const PhaseFunction& lam, long k);
PhaseFunction act_phase(const PhaseFunction& lam, const Cyc& c);
PhaseFunction act_fourier(const PhaseFunction& lam);

// Recovers the third computer-search solution by inverting the printed
// mapping sequence (character b=(2,2); linear map G=[[3,5],[1,2]]; shift
// (3,3)) from the symmetric artisanal function.
struct Lambda3Report {
  PhaseFunction lambda3;
  bool roundtrip = false;  // forward sequence returns lambda^sym
  DpfFlags flags;
};
Lambda3Report derive_lambda3();

// Orbit of an ansatz-class function under the lifted GL(Z_3^2) action
// e -> e(Ghat^t a).
struct OrbitEntry {
  Mat2 G;  // the GL(Z_3^2) element producing this member
  SectorPair pq;
  std::vector<long> exponents;  // base-3 table
};
std::vector<OrbitEntry> orbit(const SectorPair& seed);

struct ScanOrbit {
  long size = 0;
  SectorPair representative;
  Cyc trace;  // tr u_lambda of the representative
};
struct ScanReport {
  long candidates = 0;
  long survivors = 0;
  std::vector<SectorPair> survivor_list;  // in candidate order
  std::vector<ScanOrbit> orbits;          // sorted by representative
};
// Exhaustive scan over all 27 x 729 (P,Q) candidates; deterministic and
// independent of the thread count.
ScanReport classification_scan(int threads = 1);

}  // namespace hexa
