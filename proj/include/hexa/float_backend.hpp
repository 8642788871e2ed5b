#pragma once

#include <complex>
#include <random>
#include <vector>

#include "hexa/two_unitary.hpp"

namespace hexa {

// Tolerance-based complex-double mirror of the exact layer, used for the
// random-sample checks where exact arithmetic would be needlessly slow.
struct FMat {
  long rows = 0;
  long cols = 0;
  std::vector<std::complex<double>> e;

  FMat() = default;
  FMat(long r, long c) : rows(r), cols(c), e(r * c) {}
  std::complex<double>& at(long r, long c) { return e[r * cols + c]; }
  const std::complex<double>& at(long r, long c) const {
    return e[r * cols + c];
  }
};

FMat to_float(const ExactMatrix& M);  // semantic values
FMat fmul(const FMat& a, const FMat& b);
FMat fadjoint(const FMat& a);
bool funitary(const FMat& a, double tol);
FMat fpartial_transpose(const FMat& U);
FMat frealignment(const FMat& U);
TwoUnitaryFlags is_two_unitary_f(const FMat& U, double tol);

// ||A||_4^4 = tau((A A^dag)^2) with the normalized trace.
double schatten4_f(const FMat& A);

// Haar-ish random unitary: Gram-Schmidt of a complex Gaussian matrix.
FMat random_unitary(long dim, std::mt19937& rng);

// eta^2 between the conjugated left WH basis {U (w_a x 1) U^dag} and the
// plain left (to_R=false) or right (to_R=true) WH basis, float arithmetic.
double eta_sq_f(const FMat& U, long d, long n, bool to_R);

}  // namespace hexa
