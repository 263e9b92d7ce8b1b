#ifndef WCS_GRADED_HPP
#define WCS_GRADED_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "wcs/tensor_power.hpp"

namespace wcs {

/// Finitely supported family (x_a)_{a<=N} with x_a in M_{a^i}: an element
/// of the truncated direct-sum bialgebra at cutoff N and tensor power i.
/// Absent blocks are zero.
struct GradedElement {
  std::size_t cutoff = 1;
  std::size_t power = 1;
  std::map<std::size_t, ComplexMatrix> blocks;

  std::size_t block_dim(std::size_t a) const { return detail::ipow(a, power); }

  void set_block(std::size_t a, ComplexMatrix m) {
    if (a < 1 || a > cutoff) throw std::invalid_argument("GradedElement: block index out of range");
    if (m.dim() != block_dim(a))
      throw std::invalid_argument("GradedElement: block " + std::to_string(a) +
                                  " must have dim " + std::to_string(block_dim(a)));
    blocks.insert_or_assign(a, std::move(m));
  }
};

/// Blockwise element of the tensor square, indexed by pairs (b, c); block
/// (b, c) lives on radices (b^i, c^i).
struct BipartiteGradedElement {
  std::size_t cutoff = 1;
  std::size_t power = 1;
  std::map<std::pair<std::size_t, std::size_t>, ComplexMatrix> blocks;
};

/// The blockwise universal R-matrix: one permutation unitary per pair.
struct BlockRMatrix {
  std::size_t cutoff = 1;
  std::size_t power = 1;
  std::map<std::pair<std::size_t, std::size_t>, IndexPermutation> blocks;
};

inline BlockRMatrix block_rmatrix(std::size_t cutoff, std::size_t power,
                                  const std::optional<RTamper>& tamper = {}) {
  BlockRMatrix r{cutoff, power, {}};
  for (std::size_t a = 1; a <= cutoff; ++a)
    for (std::size_t b = 1; b <= cutoff; ++b)
      r.blocks.emplace(std::make_pair(a, b), rmatrix_power_block(a, b, power, tamper));
  return r;
}

inline GradedElement multiply(const GradedElement& x, const GradedElement& y) {
  if (x.cutoff != y.cutoff || x.power != y.power)
    throw std::invalid_argument("multiply: mismatched graded structure");
  GradedElement out{x.cutoff, x.power, {}};
  for (const auto& [a, xa] : x.blocks) {
    auto it = y.blocks.find(a);
    if (it != y.blocks.end()) out.set_block(a, xa * it->second);
  }
  return out;
}

inline BipartiteGradedElement multiply(const BipartiteGradedElement& x,
                                       const BipartiteGradedElement& y) {
  if (x.cutoff != y.cutoff || x.power != y.power)
    throw std::invalid_argument("multiply: mismatched graded structure");
  BipartiteGradedElement out{x.cutoff, x.power, {}};
  for (const auto& [key, xb] : x.blocks) {
    auto it = y.blocks.find(key);
    if (it != y.blocks.end()) out.blocks.emplace(key, xb * it->second);
  }
  return out;
}

/// The divisor-sum comultiplication: block (b, c) of Delta(x) is
/// phi^{(i)}_{b,c}(x_{bc}). Blocks with bc beyond the cutoff cannot occur
/// since x is supported on {1..N} and bc = a <= N forces b, c <= N.
inline BipartiteGradedElement comultiply(const GradedElement& x) {
  BipartiteGradedElement out{x.cutoff, x.power, {}};
  for (const auto& [a, xa] : x.blocks)
    for (const auto& [b, c] : divisor_pairs(a))
      out.blocks.emplace(std::make_pair(b, c), conjugate(phi_power_perm(b, c, x.power), xa));
  return out;
}

/// Evaluation at the unit block a = 1 (whose algebra is the scalars).
inline Complex counit(const GradedElement& x) {
  auto it = x.blocks.find(1);
  return it == x.blocks.end() ? Complex{} : it->second(0, 0);
}

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every matrix unit of
/// every block a <= N, compared on all triple blocks (b, c, d) with
/// bcd = a.
inline CheckReport check_coassociativity_graded(std::size_t cutoff, std::size_t power,
                                                const CheckOptions& opt = {}) {
  require_budget(detail::ipow(cutoff, power), opt.budget, "check_coassociativity_graded");
  CheckReport report;
  report.name = "graded coassociativity (N,i)=(" + std::to_string(cutoff) + "," +
                std::to_string(power) + ")";
  for (std::size_t a = 1; a <= cutoff; ++a)
    for (const auto& [b, cd] : divisor_pairs(a))
      for (const auto& [c, d] : divisor_pairs(cd)) {
        const std::size_t bi = detail::ipow(b, power), ci = detail::ipow(c, power),
                          di = detail::ipow(d, power);
        const auto lhs = compose(kron(IndexPermutation::identity(bi), phi_power_perm(c, d, power)),
                                 phi_power_perm(b, c * d, power));
        const auto rhs = compose(kron(phi_power_perm(b, c, power), IndexPermutation::identity(di)),
                                 phi_power_perm(b * c, d, power));
        detail::compare_on_matrix_units(report, lhs, rhs, opt.tolerance,
                                        "triple block (b,c,d)=(" + std::to_string(b) + "," +
                                            std::to_string(c) + "," + std::to_string(d) +
                                            ") of a=" + std::to_string(a));
        (void)ci;
      }
  return report;
}

/// R Delta(x) R* = Delta^op(x) blockwise: conjugating block (b, c) of
/// Delta(x) by R^{(b,c:i)} must give the factor-flip of block (c, b) of
/// Delta(x), for every matrix unit x of every block a <= N.
inline CheckReport check_quasi_cocommutativity(std::size_t cutoff, std::size_t power,
                                               const CheckOptions& opt = {}) {
  require_budget(detail::ipow(cutoff, power), opt.budget, "check_quasi_cocommutativity");
  CheckReport report;
  report.name = "quasi-cocommutativity (N,i)=(" + std::to_string(cutoff) + "," +
                std::to_string(power) + ")";
  for (std::size_t a = 1; a <= cutoff; ++a)
    for (const auto& [b, c] : divisor_pairs(a)) {
      const std::size_t bi = detail::ipow(b, power), ci = detail::ipow(c, power);
      const auto lhs =
          compose(rmatrix_power_block(b, c, power, opt.tamper), phi_power_perm(b, c, power));
      const auto rhs = compose(flip_perm(ci, bi), phi_power_perm(c, b, power));
      detail::compare_on_matrix_units(report, lhs, rhs, opt.tolerance,
                                      "block (b,c)=(" + std::to_string(b) + "," +
                                          std::to_string(c) + ") of a=" + std::to_string(a));
    }
  return report;
}

/// A blockwise linear map between two truncated graded bialgebras: an
/// action on block indices plus one linear map per block.
struct BlockwiseMap {
  std::size_t src_cutoff = 1;
  std::size_t src_power = 1;
  std::size_t dst_cutoff = 1;
  std::size_t dst_power = 1;
  std::function<std::size_t(std::size_t)> index_action;
  std::function<ComplexMatrix(std::size_t, const ComplexMatrix&)> apply;
};

namespace detail {

/// (f (x) f) applied to one block of a bipartite element, by expanding in
/// matrix units of the two factors.
inline ComplexMatrix tensor_square_apply(const BlockwiseMap& f, std::size_t b, std::size_t c,
                                         const ComplexMatrix& z) {
  const std::size_t bi = ipow(b, f.src_power), ci = ipow(c, f.src_power);
  const std::size_t bo = ipow(f.index_action(b), f.dst_power),
                    co = ipow(f.index_action(c), f.dst_power);
  ComplexMatrix out(bo * co);
  for (std::size_t r = 0; r < bi * ci; ++r)
    for (std::size_t col = 0; col < bi * ci; ++col) {
      const Complex v = z(r, col);
      if (v == Complex{}) continue;
      const auto fb = f.apply(b, matrix_unit(bi, r / ci + 1, col / ci + 1));
      const auto fc = f.apply(c, matrix_unit(ci, r % ci + 1, col % ci + 1));
      out = out + v * kron(fb, fc);
    }
  return out;
}

}  // namespace detail

/// Verifies that f is a morphism of the truncated graded bialgebras:
/// unital on every block, and (f (x) f) . Delta_src = Delta_dst . f on
/// all matrix units of the source within the cutoff.
inline CheckReport check_bialgebra_morphism(const BlockwiseMap& f, const CheckOptions& opt = {}) {
  if (!f.index_action || !f.apply)
    throw std::invalid_argument("check_bialgebra_morphism: map is missing components");
  require_budget(detail::ipow(f.src_cutoff, f.src_power), opt.budget, "check_bialgebra_morphism");
  CheckReport report;
  report.name = "bialgebra morphism, source cutoff " + std::to_string(f.src_cutoff);

  for (std::size_t a = 1; a <= f.src_cutoff; ++a) {
    const std::size_t da = detail::ipow(a, f.src_power);
    const std::size_t da_out = detail::ipow(f.index_action(a), f.dst_power);
    const ComplexMatrix fid = f.apply(a, ComplexMatrix::identity(da));
    if (fid.dim() != da_out)
      throw std::invalid_argument("check_bialgebra_morphism: block map has wrong target dim");
    report.record(max_abs_diff(fid, ComplexMatrix::identity(da_out)), opt.tolerance,
                  "unitality on block a=" + std::to_string(a));
  }

  for (std::size_t a = 1; a <= f.src_cutoff; ++a) {
    const std::size_t da = detail::ipow(a, f.src_power);
    for (std::size_t u = 1; u <= da; ++u)
      for (std::size_t v = 1; v <= da; ++v) {
        GradedElement x{f.src_cutoff, f.src_power, {}};
        x.set_block(a, matrix_unit(da, u, v));

        // (f (x) f) Delta_src(x), re-keyed through the index action.
        std::map<std::pair<std::size_t, std::size_t>, ComplexMatrix> lhs;
        for (const auto& [key, z] : comultiply(x).blocks) {
          const auto out_key = std::make_pair(f.index_action(key.first), f.index_action(key.second));
          if (out_key.first * out_key.second > f.dst_cutoff) continue;
          auto img = detail::tensor_square_apply(f, key.first, key.second, z);
          auto it = lhs.find(out_key);
          if (it == lhs.end()) lhs.emplace(out_key, std::move(img));
          else it->second = it->second + img;
        }

        // Delta_dst(f(x)).
        GradedElement fx{f.dst_cutoff, f.dst_power, {}};
        const std::size_t a_out = f.index_action(a);
        if (a_out <= f.dst_cutoff) fx.set_block(a_out, f.apply(a, matrix_unit(da, u, v)));
        const auto rhs = comultiply(fx).blocks;

        const std::string where = "a=" + std::to_string(a) + ", E_{" + std::to_string(u) + "," +
                                  std::to_string(v) + "}";
        for (const auto& [key, zl] : lhs) {
          auto it = rhs.find(key);
          const double dev = it == rhs.end()
                                 ? max_abs_diff(zl, ComplexMatrix(zl.dim()))
                                 : max_abs_diff(zl, it->second);
          report.record(dev, opt.tolerance,
                        "intertwining at block (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + "), " + where);
        }
        for (const auto& [key, zr] : rhs) {
          if (lhs.count(key)) continue;
          report.record(max_abs_diff(zr, ComplexMatrix(zr.dim())), opt.tolerance,
                        "missing block (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ") on the left, " + where);
        }
      }
  }
  return report;
}

}  // namespace wcs

#endif
