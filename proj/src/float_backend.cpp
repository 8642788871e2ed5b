#include "hexa/float_backend.hpp"

#include <cmath>
#include <stdexcept>

#include "hexa/pauli.hpp"

namespace hexa {

namespace {
long isqrt_exact(long n) {
  long r = static_cast<long>(std::lround(std::sqrt(static_cast<double>(n))));
  if (r * r != n) throw std::invalid_argument("dimension not a perfect square");
  return r;
}
}  // namespace

FMat to_float(const ExactMatrix& M) {
  FMat out(M.rows, M.cols);
  double s = 1.0 / std::sqrt(static_cast<double>(M.denom));
  for (size_t i = 0; i < M.e.size(); ++i) out.e[i] = M.e[i].to_complex() * s;
  return out;
}

FMat fmul(const FMat& a, const FMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("shape mismatch");
  FMat out(a.rows, b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long k = 0; k < a.cols; ++k) {
      std::complex<double> v = a.at(i, k);
      if (v == std::complex<double>(0.0)) continue;
      for (long j = 0; j < b.cols; ++j) out.at(i, j) += v * b.at(k, j);
    }
  return out;
}

FMat fadjoint(const FMat& a) {
  FMat out(a.cols, a.rows);
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) out.at(j, i) = std::conj(a.at(i, j));
  return out;
}

bool funitary(const FMat& a, double tol) {
  if (a.rows != a.cols) return false;
  FMat p = fmul(a, fadjoint(a));
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.rows; ++j) {
      std::complex<double> want = i == j ? 1.0 : 0.0;
      if (std::abs(p.at(i, j) - want) > tol) return false;
    }
  return true;
}

FMat fpartial_transpose(const FMat& U) {
  long d = isqrt_exact(U.rows);
  FMat out(U.rows, U.cols);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k)
        for (long l = 0; l < d; ++l)
          out.at(i * d + j, k * d + l) = U.at(i * d + l, k * d + j);
  return out;
}

FMat frealignment(const FMat& U) {
  long d = isqrt_exact(U.rows);
  FMat out(U.rows, U.cols);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k)
        for (long l = 0; l < d; ++l)
          out.at(i * d + j, k * d + l) = U.at(i * d + k, j * d + l);
  return out;
}

TwoUnitaryFlags is_two_unitary_f(const FMat& U, double tol) {
  TwoUnitaryFlags f;
  f.unitary = funitary(U, tol);
  f.dual = funitary(frealignment(U), tol);
  f.gamma_dual = funitary(fpartial_transpose(U), tol);
  return f;
}

double schatten4_f(const FMat& A) {
  FMat p = fmul(A, fadjoint(A));
  double tr = 0.0;
  for (long i = 0; i < A.rows; ++i)
    for (long j = 0; j < A.rows; ++j)
      tr += (p.at(i, j) * p.at(j, i)).real();
  return tr / static_cast<double>(A.rows);
}

FMat random_unitary(long dim, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  FMat m(dim, dim);
  for (auto& v : m.e) v = {g(rng), g(rng)};
  // Gram-Schmidt on columns.
  for (long c = 0; c < dim; ++c) {
    for (long p = 0; p < c; ++p) {
      std::complex<double> ip = 0.0;
      for (long r = 0; r < dim; ++r) ip += std::conj(m.at(r, p)) * m.at(r, c);
      for (long r = 0; r < dim; ++r) m.at(r, c) -= ip * m.at(r, p);
    }
    double nrm = 0.0;
    for (long r = 0; r < dim; ++r) nrm += std::norm(m.at(r, c));
    nrm = std::sqrt(nrm);
    for (long r = 0; r < dim; ++r) m.at(r, c) /= nrm;
  }
  return m;
}

double eta_sq_f(const FMat& U, long d, long n, bool to_R) {
  long D = 1;
  for (long i = 0; i < n; ++i) D *= d;
  long sz = D * D;
  std::vector<FMat> T;
  for (long i = 0; i < sz; ++i) {
    PhasePoint a = PhasePoint::from_index(d, n, i);
    std::vector<long> c(4 * n, 0);
    for (long k = 0; k < n; ++k) {
      c[(to_R ? n : 0) + k] = a.p(k);
      c[(to_R ? 3 * n : 2 * n) + k] = a.q(k);
    }
    T.push_back(to_float(weyl(PhasePoint(d, 2 * n, c))));
  }
  std::vector<FMat> L;
  for (long i = 0; i < sz; ++i) {
    PhasePoint a = PhasePoint::from_index(d, n, i);
    std::vector<long> c(4 * n, 0);
    for (long k = 0; k < n; ++k) {
      c[k] = a.p(k);
      c[2 * n + k] = a.q(k);
    }
    L.push_back(to_float(weyl(PhasePoint(d, 2 * n, c))));
  }
  FMat Ud = fadjoint(U);
  double eta = 0.0;
  double invD2 = 1.0 / static_cast<double>(sz);
  for (const auto& La : L) {
    FMat M = fmul(fmul(U, La), Ud);
    for (const auto& Tb : T) {
      std::complex<double> ip = 0.0;
      for (size_t k = 0; k < M.e.size(); ++k) ip += std::conj(M.e[k]) * Tb.e[k];
      ip *= invD2;  // tau = tr / (D^2) on the doubled space
      eta += std::norm(ip);
    }
  }
  return eta;
}

}  // namespace hexa
