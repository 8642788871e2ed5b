#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexa {

// Exact element of the cyclotomic field Q(zeta_N), stored as rational
// coefficients of zeta_N^e for e in {0..N-1}, kept reduced modulo the N-th
// cyclotomic polynomial. Values are immutable after construction; all
// mutating helpers are private. Binary operations between elements of
// different conductors lift both operands to the lcm conductor.
class Cyc {
 public:
  Cyc() : N_(1), c_(1, mpq_class(0)) {}
  Cyc(long v) : N_(1), c_(1, mpq_class(v)) {}
  Cyc(const mpq_class& v) : N_(1), c_(1, v) {}

  // zeta_N^k (k taken mod N).
  static Cyc root(long N, long k);
  // tau_d = (-1)^d e^{i pi/d}: a 2d-th root of unity.
  static Cyc tau(long d);
  // tau_d^e with exponent arithmetic done at the 2d-th-root level.
  static Cyc tau_pow(long d, long e);
  // sum_x omega_d^{a x^2 + b x + c} by direct summation.
  static Cyc gauss_sum(long a, long b, long c, long d);
  // gamma_d = sum_x omega_d^{x^2}.
  static Cyc gamma(long d) { return gauss_sum(1, 0, 0, d); }
  // exact sqrt(n) for a positive integer n, as a cyclotomic.
  static Cyc sqrt_int(unsigned long n);
  static Cyc i() { return root(4, 1); }

  long conductor() const { return N_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }
  Cyc& operator+=(const Cyc& o);
  Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }

  bool operator==(const Cyc& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  // Complex conjugation: zeta^e -> zeta^{N-e}.
  Cyc conj() const;
  // Multiplicative inverse via the extended Euclidean algorithm in Q[x]
  // against Phi_N. Throws on zero.
  Cyc inverse() const;
  Cyc pow(long e) const;

  bool is_zero() const;
  bool is_one() const { return *this == Cyc(1); }
  // True when the value lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  mpq_class rational() const;  // throws if not rational
  bool is_unimodular() const { return (conj() * *this).is_one(); }

  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  long N_;
  std::vector<mpq_class> c_;  // size N_, reduced mod Phi_N

  Cyc(long N, std::vector<mpq_class> c) : N_(N), c_(std::move(c)) { reduce(); }
  void reduce();
  Cyc lifted(long M) const;  // N_ | M
  friend class CycRaw;
};

// Cyclotomic polynomial Phi_N as integer coefficients (degree phi(N)).
const std::vector<mpz_class>& cyclotomic_poly(long N);

}  // namespace hexa
