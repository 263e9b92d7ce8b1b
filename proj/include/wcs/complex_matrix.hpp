#ifndef WCS_COMPLEX_MATRIX_HPP
#define WCS_COMPLEX_MATRIX_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcs {

using Complex = std::complex<double>;

/// Dense square matrix of complex entries; the carrier of all algebra
/// elements in the workbench. Immutable use is the norm: operations
/// return new values.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dim must be positive");
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const Complex arc = a(r, k);
        if (arc == Complex{}) continue;
        for (std::size_t c = 0; c < a.dim_; ++c) out(r, c) += arc * b(k, c);
      }
    return out;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix sum: dimension mismatch");
    ComplexMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Standard matrix unit E^{(n)}_{i,j}; i, j are 1-based as in the usual
/// operator-algebra convention, stored 0-based internally.
inline ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("matrix_unit: index out of range for dim " + std::to_string(n));
  ComplexMatrix m(n);
  m(i - 1, j - 1) = 1.0;
  return m;
}

/// Kronecker product with the row-major composite index convention:
/// entry at (m(i-1)+j, m(i'-1)+j') equals X_{i,i'} Y_{j,j'}.
inline ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  const std::size_t n = x.dim(), m = y.dim();
  ComplexMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t ip = 0; ip < n; ++ip) {
      const Complex xv = x(i, ip);
      if (xv == Complex{}) continue;
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t jp = 0; jp < m; ++jp) out(m * i + j, m * ip + jp) = xv * y(j, jp);
    }
  return out;
}

inline Complex trace(const ComplexMatrix& x) {
  Complex t{};
  for (std::size_t i = 0; i < x.dim(); ++i) t += x(i, i);
  return t;
}

/// Entrywise sup distance; the workbench's equality metric for dense values.
inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) d = std::max(d, std::abs(x(r, c) - y(r, c)));
  return d;
}

}  // namespace wcs

#endif
