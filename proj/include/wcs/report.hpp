#ifndef WCS_REPORT_HPP
#define WCS_REPORT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wcs {

/// Outcome of one exhaustive axiom check. For identities linear in the
/// argument, checking every matrix unit of the relevant basis is a
/// complete (not sampled) verification; `instances` records how many
/// basis evaluations were made.
struct CheckReport {
  std::string name;
  std::size_t instances = 0;
  double max_deviation = 0.0;
  bool pass = true;
  std::vector<std::string> failures;

  void record(double deviation, double tolerance, const std::string& what) {
    ++instances;
    if (deviation > max_deviation) max_deviation = deviation;
    if (deviation > tolerance) {
      pass = false;
      failures.push_back(what);
    }
  }

  void absorb(const CheckReport& sub) {
    instances += sub.instances;
    if (sub.max_deviation > max_deviation) max_deviation = sub.max_deviation;
    if (!sub.pass) {
      pass = false;
      failures.insert(failures.end(), sub.failures.begin(), sub.failures.end());
    }
  }
};

inline nlohmann::json to_json(const CheckReport& r) {
  return {{"name", r.name},
          {"instances", r.instances},
          {"max_deviation", r.max_deviation},
          {"pass", r.pass},
          {"failures", r.failures}};
}

inline CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.instances = j.at("instances").get<std::size_t>();
  r.max_deviation = j.at("max_deviation").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  return r;
}

/// Thrown when a check would exceed the configured composite-dimension
/// budget; the caller gets an explanation instead of a silently skipped
/// verification.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline void require_budget(std::size_t dim, std::size_t budget, const std::string& where) {
  if (dim > budget)
    throw BudgetExceeded(where + ": composite dimension " + std::to_string(dim) +
                         " exceeds budget " + std::to_string(budget));
}

}  // namespace wcs

#endif
