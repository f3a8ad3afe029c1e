#include "nonclass/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "nonclass/errors.hpp"
#include "nonclass/report.hpp"
#include "nonclass/selftest.hpp"
#include "nonclass/sweep.hpp"

namespace nonclass {
namespace {

int analyze(const std::string& path, int samples, std::uint64_t seed, std::ostream& out) {
  const StateSpec spec = parse_state_spec(read_text_file(path));
  const State state = build_state(spec, CutoffPolicy::from_env());
  VerdictConfig config;
  config.samples = samples;
  config.seed = seed;
  const Verdict v = verdict(state, config);
  out << format_report(spec, state, v, config);
  return kExitOk;
}

int sweep(const std::string& path, const std::string& out_path, std::ostream& out) {
  const SweepSpec spec = parse_sweep_spec(read_text_file(path));
  const std::string csv = format_csv(run_sweep(spec, CutoffPolicy::from_env()));
  if (out_path == "-") {
    out << csv;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + out_path + "'");
  file << csv;
  return kExitOk;
}

int selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& check : run_selftest()) {
    out << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.passed) out << ": " << check.detail;
    out << "\n";
    failures += check.passed ? 0 : 1;
  }
  out << (failures == 0 ? "selftest: all checks passed\n"
                        : "selftest: " + std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonclassicality criteria for one- and two-mode radiation states", "nonclass"};
  app.require_subcommand(1);

  std::string spec_path, csv_path;
  int samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;

  auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate every criterion for one state");
  analyze_cmd->add_option("spec", spec_path, "JSON state spec")->required();
  analyze_cmd->add_option("--samples", samples, "Projection scan samples")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--seed", seed, "Projection scan seed");

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate A and Q over one parameter");
  sweep_cmd->add_option("spec", spec_path, "JSON sweep spec")->required();
  sweep_cmd->add_option("--out", csv_path, "CSV output path, - for stdout")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in invariant and oracle checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitParse;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(spec_path, samples, seed, out);
    if (sweep_cmd->parsed()) return sweep(spec_path, csv_path, out);
    if (selftest_cmd->parsed()) return selftest(out);
  } catch (const CutoffTooSmall& e) {
    err << "cutoff too small: " << e.what() << "\n";
    return kExitCutoff;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitParse;
  } catch (const OutOfRange& e) {
    err << "out of range: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace nonclass
