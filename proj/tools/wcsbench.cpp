// wcsbench: command-line driver for the C*-bialgebra verification
// workbench. Runs the exhaustive axiom suites, the graded-bialgebra
// checks, and the obstruction-certificate pipeline.
//
// Exit codes: 0 all checks pass / certificate emitted, 1 a mathematical
// check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wcs/wcs.hpp"

namespace {

struct RunConfig {
  std::size_t max_dim = 64;
  std::size_t cutoff = 8;
  std::vector<std::size_t> powers = {1, 2};
  double tolerance = 1e-12;
  std::string output;
  std::string format = "text";
  bool tamper = false;

  wcs::CheckOptions check_options() const {
    wcs::CheckOptions opt;
    opt.tolerance = tolerance;
    opt.budget = max_dim;
    if (tamper) opt.tamper = wcs::RTamper{2, 2};
    return opt;
  }
};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t capped_cutoff(std::size_t cutoff, std::size_t power, std::size_t max_dim) {
  std::size_t n = cutoff;
  while (n > 1 && ipow(n, power) > max_dim) --n;
  return n;
}

void print_text(std::ostream& os, const std::vector<wcs::CheckReport>& reports) {
  for (const auto& r : reports) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  instances=" << r.instances
       << "  max_deviation=" << r.max_deviation << "\n";
    std::size_t shown = 0;
    for (const auto& f : r.failures) {
      os << "       failure: " << f << "\n";
      if (++shown == 8 && r.failures.size() > 8) {
        os << "       (" << r.failures.size() - 8 << " more)\n";
        break;
      }
    }
  }
}

int emit(const RunConfig& cfg, const std::vector<wcs::CheckReport>& reports) {
  std::ostringstream body;
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(wcs::to_json(r));
    body << j.dump(2) << "\n";
  } else {
    print_text(body, reports);
  }
  if (cfg.output.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "cannot open output file: " << cfg.output << "\n";
      return 2;
    }
    out << body.str();
  }
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

int run_verify_wcs(const RunConfig& cfg) {
  const auto opt = cfg.check_options();
  std::vector<wcs::CheckReport> reports;
  for (std::size_t a = 1; a <= cfg.max_dim; ++a) reports.push_back(wcs::check_unit_conditions(a, opt));
  for (std::size_t a = 1; a <= cfg.max_dim; ++a)
    for (std::size_t b = 1; a * b <= cfg.max_dim; ++b) {
      reports.push_back(wcs::check_r_relation(a, b, opt));
      reports.push_back(wcs::check_triangularity(a, b, opt));
      for (std::size_t c = 1; a * b * c <= cfg.max_dim; ++c) {
        reports.push_back(wcs::check_weak_coassociativity(a, b, c, opt));
        reports.push_back(wcs::check_quasi_triangularity(a, b, c, opt));
      }
    }
  return emit(cfg, reports);
}

int run_verify_power(const RunConfig& cfg) {
  const auto opt = cfg.check_options();
  std::vector<wcs::CheckReport> reports;
  for (std::size_t n : cfg.powers) {
    for (std::size_t a = 1; ipow(a, n) <= cfg.max_dim; ++a)
      for (std::size_t b = 1; ipow(a * b, n) <= cfg.max_dim; ++b) {
        reports.push_back(wcs::check_op_compatibility(a, b, n, opt));
        reports.push_back(wcs::check_powered_r_relation(a, b, n, opt));
        for (std::size_t c = 1; ipow(a * b * c, n) <= cfg.max_dim; ++c)
          reports.push_back(wcs::check_powered_triangularity(a, b, c, n, opt));
        if (ipow(a * b, n + 1) <= cfg.max_dim)
          reports.push_back(wcs::check_psi_compatibility(a, b, n, opt));
      }
  }
  return emit(cfg, reports);
}

int run_verify_bialgebra(const RunConfig& cfg) {
  const auto opt = cfg.check_options();
  std::vector<wcs::CheckReport> reports;
  for (std::size_t i : cfg.powers) {
    const std::size_t n = capped_cutoff(cfg.cutoff, i, cfg.max_dim);
    reports.push_back(wcs::check_coassociativity_graded(n, i, opt));
    reports.push_back(wcs::check_quasi_cocommutativity(n, i, opt));

    // The tower embedding x |-> x (x) I_a is a bialgebra morphism from
    // stage i to stage i+1; cap the cutoff so target blocks stay dense-
    // computable within the budget.
    const std::size_t n_psi = capped_cutoff(cfg.cutoff, i + 1, cfg.max_dim);
    wcs::BlockwiseMap psi;
    psi.src_cutoff = psi.dst_cutoff = n_psi;
    psi.src_power = i;
    psi.dst_power = i + 1;
    psi.index_action = [](std::size_t a) { return a; };
    psi.apply = [i](std::size_t a, const wcs::ComplexMatrix& x) {
      return wcs::psi_embed(a, i, x);
    };
    auto r = wcs::check_bialgebra_morphism(psi, opt);
    r.name = "tower embedding morphism, stage i=" + std::to_string(i) + " -> " +
             std::to_string(i + 1) + ", cutoff " + std::to_string(n_psi);
    reports.push_back(std::move(r));
  }
  return emit(cfg, reports);
}

int run_certificate(const RunConfig& cfg) {
  const auto opt = cfg.check_options();
  try {
    const auto cert = wcs::build_obstruction_certificate(cfg.powers, cfg.cutoff, 4, opt);
    std::ostringstream body;
    if (cfg.format == "json") {
      body << wcs::to_json(cert).dump(2) << "\n";
    } else {
      print_text(body, cert.stage_reports);
      body << "star states: slotwise overlap deficits";
      for (double d : cert.verdict.period_deficits) body << " " << d;
      body << "\nstate pair " << (cert.verdict.equivalent ? "equivalent" : "inequivalent") << "\n";
      body << "finite-level trace distances:";
      for (double d : cert.level_trace_distances) body << " " << d;
      body << "\nconclusion: NotQuasiCocommutative\n";
    }
    if (cfg.output.empty()) {
      std::cout << body.str();
    } else {
      std::ofstream out(cfg.output);
      if (!out) {
        std::cerr << "cannot open output file: " << cfg.output << "\n";
        return 2;
      }
      out << body.str();
    }
    return 0;
  } catch (const wcs::CertificateRefused& e) {
    std::cerr << e.what() << "\n";
    for (const auto& f : e.failing_report.failures) {
      std::cerr << "  failure: " << f << "\n";
      break;
    }
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for matrix-algebra weakly coassociative systems"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--max-dim", cfg.max_dim, "composite-dimension budget")->check(CLI::PositiveNumber);
  app.add_option("--cutoff", cfg.cutoff, "direct-sum cutoff N")->check(CLI::PositiveNumber);
  app.add_option("--powers", cfg.powers, "tensor powers to run");
  app.add_option("--tolerance", cfg.tolerance, "deviation tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "write the report to this path instead of stdout");
  app.add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--selftest-tamper", cfg.tamper)->group("");  // hidden negative control

  auto* wcs_cmd = app.add_subcommand("verify-wcs", "axioms of the base system");
  auto* power_cmd = app.add_subcommand("verify-power", "tensor-power and tower suites");
  auto* bialg_cmd = app.add_subcommand("verify-bialgebra", "graded direct-sum bialgebra suites");
  auto* cert_cmd = app.add_subcommand("certificate", "build the obstruction certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (wcs_cmd->parsed()) return run_verify_wcs(cfg);
    if (power_cmd->parsed()) return run_verify_power(cfg);
    if (bialg_cmd->parsed()) return run_verify_bialgebra(cfg);
    if (cert_cmd->parsed()) return run_certificate(cfg);
  } catch (const wcs::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
