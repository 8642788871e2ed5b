#include "hexa/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace hexa {

ExactMatrix ExactMatrix::identity(long n, long d_, unsigned long den) {
  ExactMatrix m(n, n, d_, den);
  for (long i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matmul shape mismatch");
  ExactMatrix out(rows, o.cols, d, denom * o.denom);
  for (long i = 0; i < rows; ++i) {
    for (long k = 0; k < cols; ++k) {
      const Cyc& a = at(i, k);
      if (a.is_zero()) continue;
      for (long j = 0; j < o.cols; ++j) {
        const Cyc& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows != o.rows || cols != o.cols || denom != o.denom)
    throw std::invalid_argument("add shape/denom mismatch");
  ExactMatrix out(*this);
  for (size_t i = 0; i < e.size(); ++i) out.e[i] += o.e[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows != o.rows || cols != o.cols || denom != o.denom)
    throw std::invalid_argument("sub shape/denom mismatch");
  ExactMatrix out(*this);
  for (size_t i = 0; i < e.size(); ++i) out.e[i] += -o.e[i];
  return out;
}

ExactMatrix ExactMatrix::scaled(const Cyc& s) const {
  ExactMatrix out(*this);
  for (auto& x : out.e) x *= s;
  return out;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols, rows, d, denom);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols, rows, d, denom);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

ExactMatrix ExactMatrix::conjugate() const {
  ExactMatrix out(*this);
  for (auto& x : out.e) x = x.conj();
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
  ExactMatrix out(rows * o.rows, cols * o.cols, d, denom * o.denom);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      const Cyc& a = at(i, j);
      if (a.is_zero()) continue;
      for (long r = 0; r < o.rows; ++r)
        for (long c = 0; c < o.cols; ++c) {
          const Cyc& b = o.at(r, c);
          if (b.is_zero()) continue;
          out.at(i * o.rows + r, j * o.cols + c) = a * b;
        }
    }
  return out;
}

Cyc ExactMatrix::trace() const {
  if (rows != cols) throw std::invalid_argument("trace of non-square");
  Cyc t(0);
  for (long i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

bool ExactMatrix::semantic_equal(const ExactMatrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  if (denom == o.denom) {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != o.e[i]) return false;
    return true;
  }
  // A/sqrt(dA) == B/sqrt(dB)  <=>  A*sqrt(dB) == B*sqrt(dA).
  Cyc sa = Cyc::sqrt_int(o.denom), sb = Cyc::sqrt_int(denom);
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] * sa != o.e[i] * sb) return false;
  return true;
}

bool ExactMatrix::is_unitary() const {
  if (rows != cols) return false;
  // (E E^dag) / denom == I  <=>  E E^dag == denom * I entrywise.
  ExactMatrix prod = *this * adjoint();
  Cyc diag{mpq_class(denom)};
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      const Cyc& v = prod.at(i, j);
      if (i == j) {
        if (v != diag) return false;
      } else if (!v.is_zero()) {
        return false;
      }
    }
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::complex<double>> ExactMatrix::to_complex() const {
  std::vector<std::complex<double>> out(e.size());
  double s = 1.0 / std::sqrt(static_cast<double>(denom));
  for (size_t i = 0; i < e.size(); ++i) out[i] = e[i].to_complex() * s;
  return out;
}

}  // namespace hexa
