// gam: batch reports for the annotated sonnet corpus.
//
//   gam all --config run.conf --out reports --format both --log-decisions
//
// Exit status: 0 success, 1 bad input or usage, 2 degenerate computation
// (only with --strict, or for an unexpected computation failure).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gam/outcome.hpp"
#include "gam/pipeline.hpp"
#include "gam/run_config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Affective feature extraction and validation reports for annotated sonnets"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string mode;
  std::string out_dir;
  std::string format;
  bool missing_words = false;
  bool log_decisions = false;
  bool strict = false;
  app.add_option("--config", config_path, "Run configuration (key = value file)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--mode", mode, "Normalization mode")
      ->check(CLI::IsMember({"raw", "stem", "lemma"}));
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_flag("--missing-words", missing_words, "Also write missing_words (unmatched corpus words)");
  app.add_flag("--log-decisions", log_decisions, "Write every fallback rule that fired to decisions.log");
  app.add_flag("--strict", strict, "Exit with status 2 when a statistic was degenerate or not computable");

  const std::pair<const char*, const char*> commands[] = {
      {"stats", "Corpus statistics and psychological tag counts"},
      {"coverage", "Lexicon coverage per category and normalization mode"},
      {"agree", "Krippendorff alpha per feature, joint, pairwise and against the median"},
      {"features", "The 32 GAM features per sonnet"},
      {"validate", "Bivariate correlations, partial dependence regressions and tag ANOVA"},
      {"all", "Every report above, in that order"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto command = gam::parse_command(app.get_subcommands().front()->get_name());
    auto config = gam::load_run_config(config_path);
    if (!mode.empty()) config.mode = gam::text::parse_mode(mode);
    if (!out_dir.empty()) config.out = out_dir;
    if (!format.empty()) config.format = gam::parse_report_format(format);
    config.missing_words = config.missing_words || missing_words;
    config.log_decisions = config.log_decisions || log_decisions;
    config.strict = config.strict || strict;

    gam::DecisionLog log;
    const auto written = gam::run(command, config, log, std::cout);
    for (const auto& p : written) std::cout << "wrote " << p.string() << "\n";
    if (config.strict && gam::has_degeneracy(log)) {
      std::cerr << "gam: degenerate or non-computable statistics (--strict)\n";
      return 2;
    }
    return 0;
  } catch (const gam::InputError& e) {
    std::cerr << "gam: " << e.what() << "\n";
    return 1;
  } catch (const gam::ComputationError& e) {
    std::cerr << "gam: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gam: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "gam: " << e.what() << "\n";
    return 1;
  }
}
