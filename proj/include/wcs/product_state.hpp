#ifndef WCS_PRODUCT_STATE_HPP
#define WCS_PRODUCT_STATE_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "wcs/graded.hpp"

namespace wcs {

/// Unit vector occupying one tensor slot of a pure product state.
struct SlotVector {
  std::vector<Complex> entries;

  std::size_t dim() const { return entries.size(); }

  double norm() const {
    double s = 0.0;
    for (const Complex& e : entries) s += std::norm(e);
    return std::sqrt(s);
  }
};

inline Complex inner(const SlotVector& x, const SlotVector& y) {
  Complex s{};
  for (std::size_t k = 0; k < x.entries.size(); ++k) s += std::conj(x.entries[k]) * y.entries[k];
  return s;
}

inline SlotVector kron(const SlotVector& x, const SlotVector& y) {
  SlotVector out;
  out.entries.reserve(x.dim() * y.dim());
  for (const Complex& xv : x.entries)
    for (const Complex& yv : y.entries) out.entries.push_back(xv * yv);
  return out;
}

inline bool slots_equal(const SlotVector& x, const SlotVector& y, double tol = 1e-12) {
  if (x.dim() != y.dim()) return false;
  for (std::size_t k = 0; k < x.dim(); ++k)
    if (std::abs(x.entries[k] - y.entries[k]) > tol) return false;
  return true;
}

/// Eventually periodic sequence of unit slot vectors: a finite prefix
/// followed by a primitive period repeated forever. Describes a pure
/// product state on the infinite tensor power of M_n.
struct ProductStateDesc {
  std::size_t slot_dim = 1;
  std::vector<SlotVector> prefix;
  std::vector<SlotVector> period;

  const SlotVector& slot(std::size_t k) const {
    if (k < prefix.size()) return prefix[k];
    return period[(k - prefix.size()) % period.size()];
  }

  void validate() const {
    if (period.empty()) throw std::invalid_argument("ProductStateDesc: period must be nonempty");
    for (const auto* part : {&prefix, &period})
      for (const SlotVector& v : *part) {
        if (v.dim() != slot_dim)
          throw std::invalid_argument("ProductStateDesc: slot dimension mismatch");
        if (std::abs(v.norm() - 1.0) > 1e-12)
          throw std::invalid_argument("ProductStateDesc: slot vectors must be unit vectors");
      }
  }
};

/// Reduces the period to its primitive root (shortest repeated block).
inline ProductStateDesc canonicalize(ProductStateDesc s) {
  s.validate();
  const std::size_t p = s.period.size();
  for (std::size_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool repeats = true;
    for (std::size_t k = q; k < p && repeats; ++k)
      repeats = slots_equal(s.period[k], s.period[k % q]);
    if (repeats) {
      s.period.resize(q);
      break;
    }
  }
  return s;
}

/// The constant product state with every slot the i-th standard basis
/// vector of C^n; evaluates each slot on x to x_{ii}.
inline ProductStateDesc diagonal_pure_state(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw std::invalid_argument("diagonal_pure_state: index out of range");
  SlotVector e;
  e.entries.assign(n, Complex{});
  e.entries[i - 1] = 1.0;
  return ProductStateDesc{n, {}, {e}};
}

/// The star product at the state level: slot k of the result is the
/// row-major Kronecker product of the two slot-k vectors, which is what
/// composing the tensor-pair of states with the componentwise
/// comultiplication forces.
inline ProductStateDesc star(const ProductStateDesc& s, const ProductStateDesc& t) {
  s.validate();
  t.validate();
  ProductStateDesc out;
  out.slot_dim = s.slot_dim * t.slot_dim;
  const std::size_t prefix_len = std::max(s.prefix.size(), t.prefix.size());
  const std::size_t period_len = std::lcm(s.period.size(), t.period.size());
  for (std::size_t k = 0; k < prefix_len; ++k) out.prefix.push_back(kron(s.slot(k), t.slot(k)));
  for (std::size_t k = prefix_len; k < prefix_len + period_len; ++k)
    out.period.push_back(kron(s.slot(k), t.slot(k)));
  return canonicalize(std::move(out));
}

/// Rank-one density matrix of the restriction to the first k slots.
inline ComplexMatrix finite_level_state(const ProductStateDesc& s, std::size_t k,
                                        std::size_t dim_budget = 4096) {
  if (k < 1) throw std::invalid_argument("finite_level_state: level must be >= 1");
  s.validate();
  std::size_t dim = 1;
  SlotVector v{{Complex{1.0}}};
  for (std::size_t l = 0; l < k; ++l) {
    dim *= s.slot_dim;
    require_budget(dim, dim_budget, "finite_level_state");
    v = kron(v, s.slot(l));
  }
  ComplexMatrix rho(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) rho(r, c) = v.entries[r] * std::conj(v.entries[c]);
  return rho;
}

/// Output of the product-state equivalence decision procedure. The
/// slotwise deficit is 1 - |<xi_k, eta_k>|; the GNS representations are
/// unitarily equivalent iff the total deficit sum converges, which for
/// eventually periodic data means every deficit over one aligned period
/// vanishes (within tolerance).
struct EquivalenceVerdict {
  bool equivalent = false;
  double prefix_deficit_sum = 0.0;
  std::vector<double> period_deficits;
  bool diverges = false;
};

inline EquivalenceVerdict equivalent(const ProductStateDesc& s, const ProductStateDesc& t,
                                     double tolerance = 1e-12) {
  s.validate();
  t.validate();
  if (s.slot_dim != t.slot_dim)
    throw std::invalid_argument("equivalent: slot dimension mismatch");
  EquivalenceVerdict verdict;
  const std::size_t prefix_len = std::max(s.prefix.size(), t.prefix.size());
  const std::size_t period_len = std::lcm(s.period.size(), t.period.size());
  for (std::size_t k = 0; k < prefix_len; ++k)
    verdict.prefix_deficit_sum += 1.0 - std::abs(inner(s.slot(k), t.slot(k)));
  verdict.equivalent = true;
  for (std::size_t r = 0; r < period_len; ++r) {
    const std::size_t k = prefix_len + r;
    const double deficit = 1.0 - std::abs(inner(s.slot(k), t.slot(k)));
    verdict.period_deficits.push_back(deficit);
    if (deficit > tolerance) verdict.equivalent = false;
  }
  verdict.diverges = !verdict.equivalent;
  return verdict;
}

/// Trace distance of the two rank-one finite-level states; for pure
/// states this is sqrt(1 - |<u, v>|^2).
inline double pure_trace_distance(const ProductStateDesc& s, const ProductStateDesc& t,
                                  std::size_t level, std::size_t dim_budget = 4096) {
  SlotVector u{{Complex{1.0}}}, v{{Complex{1.0}}};
  std::size_t dim = 1;
  for (std::size_t l = 0; l < level; ++l) {
    dim *= s.slot_dim;
    require_budget(dim, dim_budget, "pure_trace_distance");
    u = kron(u, s.slot(l));
    v = kron(v, t.slot(l));
  }
  const double overlap = std::abs(inner(u, v));
  return std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
}

enum class Conclusion { NotQuasiCocommutative };

/// Certificate that the tower of quasi-cocommutative stages has a limit
/// which is not quasi-cocommutative: every finite stage passes its
/// quasi-cocommutativity check, yet the two star-product states are
/// inequivalent, so no universal R-matrix can exist for the limit.
struct ObstructionCertificate {
  std::vector<CheckReport> stage_reports;
  ProductStateDesc left_state;
  ProductStateDesc right_state;
  EquivalenceVerdict verdict;
  std::vector<double> level_trace_distances;
  Conclusion conclusion = Conclusion::NotQuasiCocommutative;
};

/// Raised when the pipeline cannot honestly conclude: either a stage
/// check failed or the state pair turned out equivalent.
class CertificateRefused : public std::runtime_error {
 public:
  CertificateRefused(std::string what, CheckReport failing)
      : std::runtime_error(std::move(what)), failing_report(std::move(failing)) {}
  CheckReport failing_report;
};

inline ObstructionCertificate build_obstruction_certificate(
    const std::vector<std::size_t>& stage_powers, std::size_t cutoff, std::size_t level_budget,
    const CheckOptions& opt = {}) {
  ObstructionCertificate cert;
  for (std::size_t i : stage_powers) {
    // Cap the stage cutoff so block dimensions stay inside the budget.
    std::size_t stage_cutoff = cutoff;
    while (stage_cutoff > 1 && detail::ipow(stage_cutoff, i) > opt.budget) --stage_cutoff;
    CheckReport r = check_quasi_cocommutativity(stage_cutoff, i, opt);
    const bool ok = r.pass;
    cert.stage_reports.push_back(std::move(r));
    if (!ok)
      throw CertificateRefused("obstruction certificate refused: stage i=" + std::to_string(i) +
                                   " failed quasi-cocommutativity",
                               cert.stage_reports.back());
  }

  cert.left_state = star(diagonal_pure_state(2, 1), diagonal_pure_state(2, 2));
  cert.right_state = star(diagonal_pure_state(2, 2), diagonal_pure_state(2, 1));
  cert.verdict = equivalent(cert.left_state, cert.right_state, opt.tolerance);
  if (cert.verdict.equivalent)
    throw CertificateRefused(
        "obstruction certificate refused: star-product states are equivalent", CheckReport{});

  for (std::size_t k = 1; k <= level_budget; ++k)
    cert.level_trace_distances.push_back(pure_trace_distance(cert.left_state, cert.right_state, k));

  cert.conclusion = Conclusion::NotQuasiCocommutative;
  return cert;
}

inline nlohmann::json to_json(const SlotVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Complex& e : v.entries) j.push_back({e.real(), e.imag()});
  return j;
}

inline nlohmann::json to_json(const ProductStateDesc& s) {
  nlohmann::json prefix = nlohmann::json::array(), period = nlohmann::json::array();
  for (const auto& v : s.prefix) prefix.push_back(to_json(v));
  for (const auto& v : s.period) period.push_back(to_json(v));
  return {{"slot_dim", s.slot_dim}, {"prefix", prefix}, {"period", period}};
}

inline nlohmann::json to_json(const ObstructionCertificate& c) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& r : c.stage_reports) stages.push_back(to_json(r));
  return {{"stages", stages},
          {"state_pair", {{"left", to_json(c.left_state)}, {"right", to_json(c.right_state)}}},
          {"verdict",
           {{"equivalent", c.verdict.equivalent},
            {"period_deficits", c.verdict.period_deficits}}},
          {"diagnostics", {{"level_trace_distances", c.level_trace_distances}}},
          {"conclusion", "NotQuasiCocommutative"}};
}

}  // namespace wcs

#endif
