#ifndef WCS_PERMUTATION_HPP
#define WCS_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wcs/complex_matrix.hpp"

namespace wcs {

/// A bijection on {0,...,d-1}, representing a permutation unitary exactly
/// in integer arithmetic. All structural maps of the workbench (R-matrices,
/// flips, interleaves, basis relabelings) live here.
class IndexPermutation {
 public:
  explicit IndexPermutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<std::size_t> sorted(map_);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw std::invalid_argument("IndexPermutation: map is not a bijection");
  }

  static IndexPermutation identity(std::size_t d) {
    std::vector<std::size_t> m(d);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return IndexPermutation(std::move(m));
  }

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t l) const { return map_[l]; }

  IndexPermutation inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return IndexPermutation(std::move(inv));
  }

  bool operator==(const IndexPermutation& o) const { return map_ == o.map_; }

 private:
  std::vector<std::size_t> map_;
};

/// compose(f, g)(l) = f(g(l)); matches the matrix product U_f U_g.
inline IndexPermutation compose(const IndexPermutation& f, const IndexPermutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<std::size_t> m(f.size());
  for (std::size_t l = 0; l < f.size(); ++l) m[l] = f(g(l));
  return IndexPermutation(std::move(m));
}

/// Kronecker product of permutation operators: (p (x) q)(e_i (x) e_j)
/// = e_{p(i)} (x) e_{q(j)} under the row-major composite index.
inline IndexPermutation kron(const IndexPermutation& p, const IndexPermutation& q) {
  std::vector<std::size_t> m(p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m[i * q.size() + j] = p(i) * q.size() + q(j);
  return IndexPermutation(std::move(m));
}

/// Mixed-radix shape of a composite index: radices (d_1,...,d_k), total
/// dimension d_1 * ... * d_k, row-major digit order.
class Radices {
 public:
  Radices(std::initializer_list<std::size_t> rs) : Radices(std::vector<std::size_t>(rs)) {}
  explicit Radices(std::vector<std::size_t> rs) : radices_(std::move(rs)), total_(1) {
    if (radices_.empty()) throw std::invalid_argument("Radices: empty");
    for (std::size_t d : radices_) {
      if (d < 1) throw std::invalid_argument("Radices: entries must be >= 1");
      total_ *= d;
    }
  }

  std::size_t count() const { return radices_.size(); }
  std::size_t total() const { return total_; }
  std::size_t operator[](std::size_t k) const { return radices_[k]; }  // 0-based factor index

  std::vector<std::size_t> decode(std::size_t l) const {
    std::vector<std::size_t> digits(radices_.size());
    for (std::size_t k = radices_.size(); k-- > 0;) {
      digits[k] = l % radices_[k];
      l /= radices_[k];
    }
    return digits;
  }

  std::size_t encode(const std::vector<std::size_t>& digits) const {
    std::size_t l = 0;
    for (std::size_t k = 0; k < radices_.size(); ++k) l = l * radices_[k] + digits[k];
    return l;
  }

 private:
  std::vector<std::size_t> radices_;
  std::size_t total_;
};

/// The index permutation that reorders tensor factors: input factor t is
/// sent to output position sigma(t), with sigma given 1-based on
/// {1,...,k}. On basis vectors, the resulting unitary permutes the
/// factors of a Kronecker product accordingly.
inline IndexPermutation factor_permutation(const Radices& r, const std::vector<std::size_t>& sigma) {
  const std::size_t k = r.count();
  if (sigma.size() != k) throw std::invalid_argument("factor_permutation: sigma size mismatch");
  std::vector<bool> seen(k, false);
  for (std::size_t s : sigma) {
    if (s < 1 || s > k || seen[s - 1])
      throw std::invalid_argument("factor_permutation: sigma is not a bijection");
    seen[s - 1] = true;
  }
  std::vector<std::size_t> out_radices(k);
  for (std::size_t t = 0; t < k; ++t) out_radices[sigma[t] - 1] = r[t];
  const Radices out(out_radices);
  std::vector<std::size_t> map(r.total());
  for (std::size_t l = 0; l < r.total(); ++l) {
    const auto digits = r.decode(l);
    std::vector<std::size_t> moved(k);
    for (std::size_t t = 0; t < k; ++t) moved[sigma[t] - 1] = digits[t];
    map[l] = out.encode(moved);
  }
  return IndexPermutation(std::move(map));
}

/// Radices of the target of factor_permutation(r, sigma).
inline Radices permute_radices(const Radices& r, const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> out(r.count());
  for (std::size_t t = 0; t < r.count(); ++t) out[sigma[t] - 1] = r[t];
  return Radices(std::move(out));
}

/// The flip of two tensor factors of dimensions d1, d2.
inline IndexPermutation flip_perm(std::size_t d1, std::size_t d2) {
  return factor_permutation(Radices{d1, d2}, {2, 1});
}

inline ComplexMatrix permutation_to_matrix(const IndexPermutation& p) {
  ComplexMatrix u(p.size());
  for (std::size_t l = 0; l < p.size(); ++l) u(p(l), l) = 1.0;
  return u;
}

/// U X U* computed by index relabeling; exact for 0/1 entries.
inline ComplexMatrix conjugate(const IndexPermutation& p, const ComplexMatrix& x) {
  if (p.size() != x.dim()) throw std::invalid_argument("conjugate: dimension mismatch");
  ComplexMatrix out(x.dim());
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) out(p(r), p(c)) = x(r, c);
  return out;
}

inline ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& x) {
  if (u.dim() != x.dim()) throw std::invalid_argument("conjugate: dimension mismatch");
  return u * x * u.adjoint();
}

/// R_{pq}: R acting on factors p < q (1-based) of the given radices and
/// identity elsewhere, dense form.
inline ComplexMatrix leg_embed(const ComplexMatrix& r, const Radices& rad, std::size_t p,
                               std::size_t q) {
  if (p < 1 || q <= p || q > rad.count()) throw std::invalid_argument("leg_embed: bad positions");
  if (r.dim() != rad[p - 1] * rad[q - 1])
    throw std::invalid_argument("leg_embed: operator dimension does not match factors");
  const std::size_t dq = rad[q - 1];
  ComplexMatrix out(rad.total());
  for (std::size_t row = 0; row < rad.total(); ++row) {
    const auto rd = rad.decode(row);
    for (std::size_t col = 0; col < rad.total(); ++col) {
      const auto cd = rad.decode(col);
      bool diag = true;
      for (std::size_t t = 0; t < rad.count(); ++t)
        if (t != p - 1 && t != q - 1 && rd[t] != cd[t]) { diag = false; break; }
      if (!diag) continue;
      out(row, col) = r(rd[p - 1] * dq + rd[q - 1], cd[p - 1] * dq + cd[q - 1]);
    }
  }
  return out;
}

/// Permutation-level leg embedding; exact.
inline IndexPermutation leg_embed(const IndexPermutation& r, const Radices& rad, std::size_t p,
                                  std::size_t q) {
  if (p < 1 || q <= p || q > rad.count()) throw std::invalid_argument("leg_embed: bad positions");
  if (r.size() != rad[p - 1] * rad[q - 1])
    throw std::invalid_argument("leg_embed: permutation size does not match factors");
  const std::size_t dq = rad[q - 1];
  std::vector<std::size_t> map(rad.total());
  for (std::size_t l = 0; l < rad.total(); ++l) {
    auto digits = rad.decode(l);
    const std::size_t image = r(digits[p - 1] * dq + digits[q - 1]);
    digits[p - 1] = image / dq;
    digits[q - 1] = image % dq;
    map[l] = rad.encode(digits);
  }
  return IndexPermutation(std::move(map));
}

}  // namespace wcs

#endif
