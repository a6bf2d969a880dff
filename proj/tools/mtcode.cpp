// mtcode: analyze multi-twisted code specs, run the built-in fixtures, audit random specs.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtcodes/audit.hpp"
#include "mtcodes/fixtures.hpp"
#include "mtcodes/report.hpp"
#include "mtcodes/specfile.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitFailure = 3;

int exit_code_for(const mtc::Error& e) { return mtc::is_invariant_failure(e.code()) ? kExitFailure : kExitInput; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-twisted code toolkit"};
  app.require_subcommand(1);

  std::string path;
  mtc::AnalyzeOptions analyze_opts;
  bool machine = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze the code described by a spec file");
  analyze->add_option("path", path, "Spec file")->required();
  analyze->add_flag("--mindist", analyze_opts.min_distance, "Compute the minimum distance");
  analyze->add_option("--cap", analyze_opts.cap, "Largest message count to enumerate")->capture_default_str();
  analyze->add_flag("--dual", analyze_opts.dual, "Analyze the dual code instead");
  analyze->add_flag("--machine", machine, "Emit key=value lines");
  analyze->add_option("--threads", analyze_opts.threads, "Worker threads (0 = all cores)");

  bool list = false;
  std::string tamper;
  mtc::SuiteOptions suite_opts;
  auto* suite = app.add_subcommand("suite", "Run the built-in worked examples");
  suite->add_flag("--list", list, "List fixture names and descriptions");
  suite->add_option("--tamper", tamper, "Perturb one shift of the named fixture");
  suite->add_flag("--full-distance", suite_opts.full_distance, "Enumerate every codeword for each distance");
  suite->add_option("--threads", suite_opts.threads, "Worker threads (0 = all cores)");

  mtc::AuditOptions audit_opts;
  auto* audit = app.add_subcommand("audit", "Check invariants on random specs");
  audit->add_option("--trials", audit_opts.trials, "Number of random specs")->capture_default_str();
  audit->add_option("--seed", audit_opts.seed, "Random seed")->capture_default_str();
  audit->add_option("--fields", audit_opts.bounds.orders, "Field orders to draw from")->delimiter(',');
  audit->add_option("--max-ell", audit_opts.bounds.max_ell, "Largest number of blocks")->capture_default_str();
  audit->add_option("--max-length", audit_opts.bounds.max_length, "Largest block length")->capture_default_str();
  audit->add_option("--max-rho", audit_opts.bounds.max_rho, "Largest number of generators")->capture_default_str();
  audit->add_option("--threads", audit_opts.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (analyze->parsed()) {
      const mtc::MTSpec spec = mtc::load_spec(path);
      const mtc::Report r = mtc::analyze(spec, analyze_opts);
      std::cout << (machine ? mtc::render_machine(r) : mtc::render_text(r));
      return r.verdict_consistent ? 0 : kExitFailure;
    }
    if (suite->parsed()) {
      if (list) {
        std::cout << mtc::render_fixture_list();
        return 0;
      }
      if (!tamper.empty()) suite_opts.tamper = tamper;
      const mtc::SuiteOutcome out = mtc::run_suite(suite_opts);
      std::cout << mtc::render_suite(out);
      return out.passed() ? 0 : kExitFailure;
    }
    if (audit->parsed()) {
      for (unsigned q : audit_opts.bounds.orders) {
        if (q < 2 || q > mtc::Field::kMaxOrder)
          throw mtc::Error(mtc::ErrorCode::UsageError, "field order " + std::to_string(q) + " out of range");
        mtc::audit_field(q);
      }
      const mtc::AuditSummary s = mtc::run_audit(audit_opts);
      std::cout << mtc::render_audit(s, audit_opts);
      return 0;
    }
  } catch (const mtc::SpecError& e) {
    std::cerr << path;
    if (e.line() > 0) std::cerr << ":" << e.line() << ":" << e.column();
    std::cerr << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const mtc::Error& e) {
    std::cerr << "mtcode: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "mtcode: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
