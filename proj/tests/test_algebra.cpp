#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hexa/algebra.hpp"
#include "hexa/float_backend.hpp"

using namespace hexa;

TEST_CASE("eta^2 between the plain factor bases") {
  // A basis against itself gives its span dimension; the two factor
  // algebras intersect only in the scalars.
  auto L = left_wh_basis(2, 1);
  auto R = right_wh_basis(2, 1);
  CHECK(overlap_eta_sq(L, L) == mpq_class(static_cast<long>(L.size())));
  CHECK(overlap_eta_sq(L, R) == mpq_class(1));
  CHECK(overlap_eta_sq(R, R) == mpq_class(static_cast<long>(R.size())));
}

TEST_CASE("eta^2 overlap equals one for the handcrafted solutions") {
  for (ArtisanalKind k : {ArtisanalKind::Sparse, ArtisanalKind::Sym}) {
    ExactMatrix U = u_lambda(artisanal(k));
    EtaPair eta = eta_conjugated_left(U, 6, 1);
    CHECK(eta.to_L == mpq_class(1));
    CHECK(eta.to_R == mpq_class(1));
  }
}

TEST_CASE("eta^2 equivalences against the two-unitary flags") {
  // identity: dual fails, eta to L is maximal (d^2), gamma holds, eta to R = 1
  PropReport idr =
      check_prop_equivalences(ExactMatrix::identity(9, 3, 1), 3, 1);
  CHECK(idr.consistent);
  CHECK(idr.flags.unitary);
  CHECK_FALSE(idr.flags.dual);
  CHECK(idr.flags.gamma_dual);
  CHECK(idr.eta.to_L == mpq_class(9));
  CHECK(idr.eta.to_R == mpq_class(1));
  // flip: mirror image
  PropReport flr = check_prop_equivalences(flip(3), 3, 1);
  CHECK(flr.consistent);
  CHECK(flr.eta.to_L == mpq_class(1));
  CHECK(flr.eta.to_R == mpq_class(9));
  // a genuine two-unitary: both overlaps are 1
  auto [K, L] = linear_ols(3, 2);
  PropReport olr = check_prop_equivalences(ols_to_unitary(K, L), 3, 1);
  CHECK(olr.consistent);
  CHECK(olr.eta.to_L == mpq_class(1));
  CHECK(olr.eta.to_R == mpq_class(1));
  // the handcrafted solution at d=6
  PropReport spr = check_prop_equivalences(
      u_lambda(artisanal(ArtisanalKind::Sparse)), 6, 1);
  CHECK(spr.consistent);
  CHECK(spr.dual_matches);
  CHECK(spr.gamma_matches);
}

TEST_CASE("Schatten-4 norms certify the same statement") {
  ExactMatrix U = u_lambda(artisanal(ArtisanalKind::Sparse));
  CHECK(schatten4(realignment(U)) == mpq_class(1));
  CHECK(schatten4(partial_transpose(U)) == mpq_class(1));
  // identity: Gamma transpose stays unitary, realignment does not
  ExactMatrix I9 = ExactMatrix::identity(9, 3, 1);
  CHECK(schatten4(partial_transpose(I9)) == mpq_class(1));
  CHECK(schatten4(realignment(I9)) == mpq_class(9));
}

TEST_CASE("support dimensions of the conjugated factor algebras") {
  ExactMatrix U = u_lambda(artisanal(ArtisanalKind::Sparse));
  CHECK(support_algebra_dim(U) == std::make_pair(4L, 3L));
  ExactMatrix Uy = u_lambda(artisanal(ArtisanalKind::Sym));
  CHECK(support_algebra_dim(Uy) == std::make_pair(4L, 3L));
  CHECK(support_algebra_dim(ExactMatrix::identity(36, 6, 1)) ==
        std::make_pair(1L, 1L));
}

TEST_CASE("support containment holds for every phase-diagonal unitary") {
  CHECK(support_containment(u_lambda(artisanal(ArtisanalKind::Sparse))));
  CHECK(support_containment(u_lambda(artisanal(ArtisanalKind::Sym))));
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> ex(0, 11);
  for (int t = 0; t < 10; ++t) {
    std::vector<Cyc> v(36);
    for (auto& c : v) c = Cyc::root(12, ex(rng));
    PhaseFunction lam = PhaseFunction::from_values(6, 1, std::move(v));
    CHECK(support_containment(u_lambda(lam)));
  }
}

TEST_CASE("sector analysis of the handcrafted solutions") {
  SectorAnalysis sp = sector_analysis(ArtisanalKind::Sparse);
  CHECK(sp.controlled_ok);
  CHECK(sp.fm_ok);
  CHECK(sp.closed_ok);
  CHECK(sp.product_ok);
  CHECK(sp.ortho_ok);
  CHECK(sp.preimage_ok);
  SectorAnalysis sy = sector_analysis(ArtisanalKind::Sym);
  CHECK(sy.controlled_ok);
  CHECK(sy.ortho_ok);
}

TEST_CASE("operator picture of the correlation functions") {
  CHECK(verify_operator_picture(artisanal(ArtisanalKind::Sparse)));
  CHECK(verify_operator_picture(
      PhaseFunction::from_exponents(6, 1, 1, std::vector<long>(36, 0))));
  CHECK(verify_operator_picture(quadratic_lambda({1, 0, 0, 1}, 3, 1)));
}

TEST_CASE("so(4) structure of the qubit-pair observables") {
  So4Report rep = so4_check();
  CHECK(rep.brackets_ok);
  CHECK(rep.rl_commute_ok);
  CHECK(rep.q4_unitary);
  CHECK(rep.antisym_ok);
  CHECK(rep.span_dim == 6);
}

TEST_CASE("float backend reproduces the overlap identities on random data") {
  std::mt19937 rng(37);
  for (auto [d, trials] : std::vector<std::pair<long, int>>{{2, 20}, {3, 10}}) {
    for (int t = 0; t < trials; ++t) {
      FMat U = random_unitary(d * d, rng);
      // ||U^Gamma||_4^4 == eta^2 to the right basis, and symmetrically
      double lhs_g = schatten4_f(fpartial_transpose(U));
      double rhs_g = eta_sq_f(U, d, 1, /*to_R=*/true);
      CHECK(std::abs(lhs_g - rhs_g) < 1e-9);
      double lhs_r = schatten4_f(frealignment(U));
      double rhs_r = eta_sq_f(U, d, 1, /*to_R=*/false);
      CHECK(std::abs(lhs_r - rhs_r) < 1e-9);
    }
  }
}

TEST_CASE("float and exact backends agree on the handcrafted solution") {
  ExactMatrix U = u_lambda(artisanal(ArtisanalKind::Sparse));
  FMat F = to_float(U);
  CHECK(funitary(F, 1e-9));
  TwoUnitaryFlags f = is_two_unitary_f(F, 1e-9);
  CHECK(f.all());
  CHECK(std::abs(eta_sq_f(F, 6, 1, true) - 1.0) < 1e-9);
  CHECK(std::abs(eta_sq_f(F, 6, 1, false) - 1.0) < 1e-9);
}
