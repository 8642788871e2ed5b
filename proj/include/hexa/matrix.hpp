#pragma once

#include <complex>
#include <vector>

#include "hexa/cyc.hpp"

namespace hexa {

// Dense rectangular matrix of cyclotomic entries with an integer `denom`:
// the semantic value of the matrix is entries / sqrt(denom). This keeps all
// constructions integer-cyclotomic (denominators arise only from state
// normalizations) and makes unitarity exactly testable as M M^dag == denom*I.
struct ExactMatrix {
  long rows = 0;
  long cols = 0;
  long d = 1;              // ambient qudit dimension (metadata)
  unsigned long denom = 1; // semantic scale: value = entries / sqrt(denom)
  std::vector<Cyc> e;      // row-major

  ExactMatrix() = default;
  ExactMatrix(long r, long c, long d_, unsigned long den = 1)
      : rows(r), cols(c), d(d_), denom(den), e(r * c) {}

  static ExactMatrix identity(long n, long d_, unsigned long den = 1);

  Cyc& at(long r, long c) { return e[r * cols + c]; }
  const Cyc& at(long r, long c) const { return e[r * cols + c]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Cyc& s) const;
  ExactMatrix adjoint() const;
  ExactMatrix transpose() const;
  ExactMatrix conjugate() const;
  ExactMatrix kron(const ExactMatrix& o) const;
  Cyc trace() const;

  // Entrywise comparison of semantic values; handles differing denoms by
  // cross-multiplying with exact integer square roots.
  bool semantic_equal(const ExactMatrix& o) const;

  // Exact unitarity of the semantic value: M M^dag == denom * I.
  bool is_unitary() const;

  bool is_zero() const;

  std::vector<std::complex<double>> to_complex() const;  // semantic values
};

}  // namespace hexa
