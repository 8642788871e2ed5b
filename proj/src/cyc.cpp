#include "hexa/cyc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace hexa {

namespace {

// Polynomial helpers over Q; coefficient index = exponent.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division a / b for monic-ish b known to divide a exactly.
Poly poly_div_exact(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  for (long i = static_cast<long>(a.size()) - 1;
       i >= static_cast<long>(b.size()) - 1; --i) {
    mpq_class f = a[i] / b.back();
    long sh = i - (static_cast<long>(b.size()) - 1);
    q[sh] = f;
    if (f != 0) {
      for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= f * b[j];
    }
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

// Remainder of a modulo monic b.
void poly_rem(Poly& a, const Poly& b) {
  for (long i = static_cast<long>(a.size()) - 1;
       i >= static_cast<long>(b.size()) - 1; --i) {
    mpq_class f = a[i] / b.back();
    if (f != 0) {
      long sh = i - (static_cast<long>(b.size()) - 1);
      for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= f * b[j];
    }
  }
  trim(a);
}

std::map<long, std::vector<mpz_class>>& phi_cache() {
  static std::map<long, std::vector<mpz_class>> cache;
  return cache;
}
std::recursive_mutex& phi_mutex() {
  static std::recursive_mutex m;
  return m;
}

std::vector<mpz_class> compute_phi(long N) {
  // x^N - 1 divided by Phi_m for all proper divisors m of N.
  Poly num(N + 1, mpq_class(0));
  num[0] = -1;
  num[N] = 1;
  for (long m = 1; m < N; ++m) {
    if (N % m != 0) continue;
    const auto& phim = cyclotomic_poly(m);
    Poly pm(phim.size());
    for (size_t j = 0; j < phim.size(); ++j) pm[j] = mpq_class(phim[j]);
    num = poly_div_exact(std::move(num), pm);
  }
  std::vector<mpz_class> out(num.size());
  for (size_t j = 0; j < num.size(); ++j) {
    if (num[j].get_den() != 1)
      throw std::logic_error("cyclotomic poly not integral");
    out[j] = num[j].get_num();
  }
  return out;
}

long phi_degree(long N) { return static_cast<long>(cyclotomic_poly(N).size()) - 1; }

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(long N) {
  if (N < 1) throw std::invalid_argument("invalid conductor");
  std::lock_guard<std::recursive_mutex> lock(phi_mutex());
  auto it = phi_cache().find(N);
  if (it != phi_cache().end()) return it->second;
  // compute_phi recurses through cyclotomic_poly on proper divisors; the
  // recursive mutex makes the nested lookups safe on the same thread.
  std::vector<mpz_class> phi = compute_phi(N);
  return phi_cache().emplace(N, std::move(phi)).first->second;
}

void Cyc::reduce() {
  if (N_ < 1) throw std::invalid_argument("invalid conductor");
  // Fold exponents mod N (zeta^N = 1), then reduce modulo Phi_N.
  if (static_cast<long>(c_.size()) > N_) {
    for (size_t e = N_; e < c_.size(); ++e) c_[e % N_] += c_[e];
    c_.resize(N_);
  } else {
    c_.resize(N_, mpq_class(0));
  }
  const auto& phiz = cyclotomic_poly(N_);
  long deg = static_cast<long>(phiz.size()) - 1;
  if (deg >= N_) return;  // N == 1 or 2: nothing to do beyond fold
  Poly phi(phiz.size());
  for (size_t j = 0; j < phiz.size(); ++j) phi[j] = mpq_class(phiz[j]);
  Poly a(c_.begin(), c_.end());
  trim(a);
  poly_rem(a, phi);
  std::fill(c_.begin(), c_.end(), mpq_class(0));
  for (size_t j = 0; j < a.size(); ++j) c_[j] = a[j];
}

Cyc Cyc::root(long N, long k) {
  if (N < 1) throw std::invalid_argument("invalid conductor");
  k %= N;
  if (k < 0) k += N;
  std::vector<mpq_class> c(N, mpq_class(0));
  c[k] = 1;
  return Cyc(N, std::move(c));
}

Cyc Cyc::tau(long d) {
  if (d < 1) throw std::invalid_argument("invalid d");
  return (d % 2 == 0) ? root(2 * d, 1) : root(2 * d, d + 1);
}

Cyc Cyc::tau_pow(long d, long e) {
  if (d < 1) throw std::invalid_argument("invalid d");
  long M = 2 * d;
  long base = (d % 2 == 0) ? 1 : d + 1;
  long k = ((e % M) * (base % M)) % M;
  return root(M, k);
}

Cyc Cyc::gauss_sum(long a, long b, long c, long d) {
  Cyc s(0);
  for (long x = 0; x < d; ++x) s += root(d, a * x * x + b * x + c);
  return s;
}

Cyc Cyc::sqrt_int(unsigned long n) {
  if (n == 0) return Cyc(0);
  Cyc out(1);
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int a = 0;
    while (m % p == 0) {
      m /= p;
      ++a;
    }
    for (int j = 0; j < a / 2; ++j) out *= Cyc(static_cast<long>(p));
    if (a % 2) {
      if (p == 2) {
        out *= root(8, 1) + root(8, 7);
      } else {
        Cyc g = gamma(static_cast<long>(p));
        if (p % 4 == 3) g *= root(4, 3);  // gamma_p = i sqrt(p) here
        out *= g;
      }
    }
  }
  if (m > 1) {  // m is a prime with exponent 1
    if (m == 2) {
      out *= root(8, 1) + root(8, 7);
    } else {
      Cyc g = gamma(static_cast<long>(m));
      if (m % 4 == 3) g *= root(4, 3);
      out *= g;
    }
  }
  return out;
}

Cyc Cyc::lifted(long M) const {
  if (M == N_) return *this;
  if (M % N_ != 0) throw std::logic_error("lift: not a multiple");
  long k = M / N_;
  std::vector<mpq_class> c(M, mpq_class(0));
  for (long e = 0; e < N_; ++e)
    if (c_[e] != 0) c[e * k] = c_[e];
  return Cyc(M, std::move(c));
}

Cyc Cyc::operator+(const Cyc& o) const {
  long L = std::lcm(N_, o.N_);
  Cyc a = lifted(L), b = o.lifted(L);
  for (long e = 0; e < L; ++e) a.c_[e] += b.c_[e];
  return a;  // sum of reduced forms is reduced
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (o.N_ == N_) {
    for (long e = 0; e < N_; ++e) c_[e] += o.c_[e];
    return *this;
  }
  *this = *this + o;
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  long L = std::lcm(N_, o.N_);
  Cyc a = lifted(L), b = o.lifted(L);
  std::vector<mpq_class> prod(2 * L, mpq_class(0));
  for (long e1 = 0; e1 < L; ++e1) {
    if (a.c_[e1] == 0) continue;
    for (long e2 = 0; e2 < L; ++e2) {
      if (b.c_[e2] == 0) continue;
      prod[e1 + e2] += a.c_[e1] * b.c_[e2];
    }
  }
  return Cyc(L, std::move(prod));
}

Cyc Cyc::conj() const {
  std::vector<mpq_class> c(N_, mpq_class(0));
  for (long e = 0; e < N_; ++e)
    if (c_[e] != 0) c[(N_ - e) % N_] += c_[e];
  return Cyc(N_, std::move(c));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) {
    mpq_class inv = 1 / rational();
    return Cyc(inv);
  }
  // Extended Euclid: u * this + v * Phi_N = gcd (a nonzero rational).
  const auto& phiz = cyclotomic_poly(N_);
  Poly r0(phiz.size());
  for (size_t j = 0; j < phiz.size(); ++j) r0[j] = mpq_class(phiz[j]);
  Poly r1(c_.begin(), c_.end());
  trim(r1);
  Poly s0 = {}, s1 = {mpq_class(1)};  // coefficients of `this`
  while (true) {
    // r0 = q*r1 + r2
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
           mpq_class(0));
    Poly r2 = r0;
    for (long i = static_cast<long>(r2.size()) - 1;
         i >= static_cast<long>(r1.size()) - 1; --i) {
      mpq_class f = r2[i] / r1.back();
      if (f != 0) {
        long sh = i - (static_cast<long>(r1.size()) - 1);
        q[sh] = f;
        for (size_t j = 0; j < r1.size(); ++j) r2[sh + j] -= f * r1[j];
      }
    }
    trim(r2);
    // s2 = s0 - q*s1
    Poly s2 = s0;
    s2.resize(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
    for (size_t a = 0; a < q.size(); ++a) {
      if (q[a] == 0) continue;
      for (size_t b = 0; b < s1.size(); ++b) s2[a + b] -= q[a] * s1[b];
    }
    trim(s2);
    if (r2.empty()) {
      // r1 is the gcd; it must be a nonzero constant since Phi_N is
      // irreducible and `this` is not a multiple of it.
      if (r1.size() != 1)
        throw std::logic_error("cyclotomic inverse: non-constant gcd");
      mpq_class g = r1[0];
      std::vector<mpq_class> c(N_, mpq_class(0));
      for (size_t j = 0; j < s1.size() && j < static_cast<size_t>(N_); ++j)
        c[j] = s1[j] / g;
      return Cyc(N_, std::move(c));
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (long e = 1; e < N_; ++e)
    if (c_[e] != 0) return false;
  return true;
}

mpq_class Cyc::rational() const {
  if (!is_rational()) throw std::domain_error("not rational");
  return c_[0];
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> s(0, 0);
  const double two_pi = 6.283185307179586476925286766559;
  for (long e = 0; e < N_; ++e) {
    if (c_[e] == 0) continue;
    double ang = two_pi * static_cast<double>(e) / static_cast<double>(N_);
    s += c_[e].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyc::str() const {
  std::string out;
  bool first = true;
  for (long e = 0; e < N_; ++e) {
    if (c_[e] == 0) continue;
    if (!first) out += " + ";
    first = false;
    out += c_[e].get_str();
    if (e > 0) out += "*z" + std::to_string(N_) + "^" + std::to_string(e);
  }
  if (first) out = "0";
  return out;
}

}  // namespace hexa
