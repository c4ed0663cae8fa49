#include "gam/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "gam/agreement.hpp"
#include "gam/corpus.hpp"
#include "gam/features.hpp"
#include "gam/lexicon.hpp"
#include "gam/outcome.hpp"
#include "gam/report.hpp"
#include "gam/stats.hpp"
#include "gam/validation.hpp"

namespace gam {

Command parse_command(std::string_view name) {
  if (name == "stats") return Command::Stats;
  if (name == "coverage") return Command::Coverage;
  if (name == "agree") return Command::Agree;
  if (name == "features") return Command::Features;
  if (name == "validate") return Command::Validate;
  if (name == "all") return Command::All;
  throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

std::string to_string(Command command) {
  switch (command) {
    case Command::Stats: return "stats";
    case Command::Coverage: return "coverage";
    case Command::Agree: return "agree";
    case Command::Features: return "features";
    case Command::Validate: return "validate";
    case Command::All: return "all";
  }
  return "?";
}

bool has_degeneracy(const DecisionLog& log) {
  for (const auto& [rule, n] : log.counts()) {
    if (rule.ends_with(".degenerate") || rule.ends_with(".not_computable") ||
        rule.ends_with(".undefined")) {
      return true;
    }
  }
  return false;
}

namespace {

struct Needs {
  bool corpus = false;
  bool annotations = false;
  bool median = false;
  bool lexicons = false;
};

Needs needs_of(Command c) {
  switch (c) {
    case Command::Stats: return {true, true, true, false};
    case Command::Coverage: return {true, true, true, true};
    case Command::Agree: return {false, true, false, false};
    case Command::Features: return {true, false, false, true};
    case Command::Validate: return {true, true, true, true};
    case Command::All: return {true, true, true, true};
  }
  return {};
}

void require_file(const std::filesystem::path& p, const std::string& what) {
  if (p.empty()) throw InputError(what + " not configured");
  if (!std::filesystem::exists(p)) throw InputError(what + " not found", p.string());
}

void preflight(const RunConfig& c, const Needs& needs) {
  if (needs.corpus) {
    require_file(c.metadata, "metadata file");
    require_file(c.texts, "text directory");
  }
  if (needs.annotations) {
    if (c.annotations.size() < 2) throw InputError("at least two annotation files are required");
    for (const auto& [id, path] : c.annotations) {
      require_file(path, fmt::format("annotation file {}", id));
    }
    if (needs.median && c.annotations.size() != 3) {
      throw InputError(fmt::format(
          "the median annotator needs exactly three annotation files, got {}",
          c.annotations.size()));
    }
  }
  if (needs.lexicons) {
    if (c.lexicons.empty()) throw InputError("no lexicon configured");
    for (const auto& src : c.lexicons) {
      require_file(src.file, "lexicon '" + src.name + "'");
      if (src.schema) require_file(*src.schema, "schema for lexicon '" + src.name + "'");
    }
  }
  if (c.stopwords) require_file(*c.stopwords, "stopword file");
  if (c.lemma_table) require_file(*c.lemma_table, "lemma table");
}

struct Inputs {
  text::NormalizationConfig norm;
  std::optional<Corpus> corpus;
  std::vector<std::string> sonnet_ids;
  std::vector<AnnotationSet> sets;  // valence already reversed where configured
  std::optional<AnnotationSet> median;
  std::vector<lexicon::SourceLexicon> lexicons;
};

Inputs load_inputs(const RunConfig& c, const Needs& needs, DecisionLog& log, std::ostream& out) {
  Inputs in;
  in.norm = normalization_for(c);
  if (needs.corpus) {
    in.corpus = load_corpus(c.metadata, c.texts);
    in.sonnet_ids = in.corpus->ids();
    out << fmt::format("corpus: {} sonnets\n", in.corpus->size());
  } else if (!c.metadata.empty() && std::filesystem::exists(c.metadata)) {
    for (const auto& m : load_metadata(c.metadata)) in.sonnet_ids.push_back(m.sonnet_id);
  }
  if (needs.annotations) {
    AnnotationLoadOptions opts;
    opts.aliases = c.aliases;
    opts.sonnet_ids = in.sonnet_ids;
    for (const auto& [id, path] : c.annotations) {
      auto set = load_annotation_set(path, id, opts);
      if (std::find(c.reversed_valence.begin(), c.reversed_valence.end(), id) !=
          c.reversed_valence.end()) {
        set = reverse_ordinal_scale(set, "valence");
        note(&log, "annotation.valence_reversed", fmt::format("annotator {}: x -> 5 - x", id));
      }
      in.sets.push_back(std::move(set));
    }
    out << fmt::format("annotations: {} sets\n", in.sets.size());
    if (in.sets.size() == 3) {
      const auto filled = fill_missing_psych(in.sets, &log);
      in.median = build_median_annotator(filled.sets, &log);
    }
  }
  if (needs.lexicons) {
    for (const auto& src : c.lexicons) {
      const auto schema = src.schema ? lexicon::load_schema_descriptor(*src.schema)
                                     : lexicon::SchemaDescriptor{};
      auto lex = lexicon::load_lexicon(src.file, schema, &log);
      if (lex.source_id.empty()) lex.source_id = src.name;
      out << fmt::format("lexicon {}: {} words\n", lex.source_id, lex.entries.size());
      in.lexicons.push_back(std::move(lex));
    }
  }
  return in;
}

class Runner {
 public:
  Runner(const RunConfig& c, Inputs& in, DecisionLog& log, std::ostream& out)
      : c_(c), in_(in), log_(log), out_(out) {}

  void stats() {
    const auto cs = corpus_statistics(*in_.corpus, *in_.median, in_.norm, c_.histogram_bin_width);
    auto table = report::corpus_stats_table(cs);
    const auto min_n = stats::min_sample_size(0.05, 0.8, 0.8);
    table.rows.push_back({"power", "min_group_size", static_cast<long long>(min_n)});
    for (const auto& [tag, n] : cs.tag_counts) {
      if (n < min_n) {
        note(&log_, "stats.tag_below_power_minimum",
             fmt::format("{}: {} sonnets < {}", tag, n, min_n));
      }
    }
    write(table);
  }

  void coverage() {
    std::vector<lexicon::CoverageRow> rows;
    std::vector<text::Mode> modes{text::Mode::Raw, text::Mode::Stem};
    if (!in_.norm.lemma_table.empty()) modes.push_back(text::Mode::Lemma);
    for (auto mode : modes) {
      auto norm = in_.norm;
      norm.mode = mode;
      const auto merged = lexicon::merge(in_.lexicons, norm, c_.scales, &log_);
      const bool missing = c_.missing_words && mode == c_.mode;
      auto rep = lexicon::coverage(*in_.corpus, in_.lexicons, merged, norm, *in_.median, missing);
      for (const auto& r : rep.rows) {
        if (r.category == "all") {
          out_ << fmt::format("coverage {}: {} of {} keys ({:.3f})\n", text::to_string(mode),
                              r.n_matched, r.n_keys, r.fraction);
        }
      }
      rows.insert(rows.end(), rep.rows.begin(), rep.rows.end());
      if (missing) write(report::missing_words_table(rep.missing_words));
    }
    write(report::coverage_table(rows));
  }

  void agree() {
    const auto rep = agreement::agreement_report(in_.sets, in_.median ? &*in_.median : nullptr,
                                                 FeatureCatalog::standard(), &log_);
    for (const auto& w : rep.warnings) out_ << "warning: " << w << "\n";
    std::size_t acceptable = 0;
    for (const auto& row : rep.rows) {
      const auto& all = row.cells.front().result;
      if (all && all->alpha >= agreement::kAcceptableAlpha) ++acceptable;
    }
    out_ << fmt::format("agreement: {} of {} features with k_all >= 0.21\n", acceptable,
                        rep.rows.size());
    write(report::agreement_table(rep));
  }

  const features::FeatureMatrix& matrix() {
    if (!matrix_) {
      const auto merged = lexicon::merge(in_.lexicons, in_.norm, c_.scales, &log_);
      matrix_ = features::compute_corpus_matrix(*in_.corpus, merged, in_.norm);
      for (auto f : features::all_gam_features()) {
        const auto n = matrix_->undefined_counts[static_cast<std::size_t>(f)];
        if (n > 0) {
          note(&log_, "features.undefined",
               fmt::format("{}: undefined for {} sonnets", features::name(f), n));
        }
      }
    }
    return *matrix_;
  }

  void features() { write(report::gam_features_table(matrix())); }

  void validate() {
    const auto& m = matrix();
    write(report::bivariate_table(validation::bivariate_report(m, *in_.median)));
    const auto pd = validation::partial_dependence_report(
        m, *in_.median, validation::default_categories(), &log_);
    std::size_t significant = 0;
    for (const auto& r : pd) significant += r.significant ? 1 : 0;
    out_ << fmt::format("partial dependence: {} of {} rows significant\n", significant, pd.size());
    write(report::partial_dependence_table(pd));
    const auto an = validation::anova_report(m, *in_.median, &log_);
    out_ << fmt::format("anova: {} of {} combinations significant\n", an.n_significant,
                        an.rows.size());
    write(report::anova_table(an));
  }

  std::vector<std::filesystem::path> written;

 private:
  void write(const report::Table& t) {
    for (auto& p : report::write_table(t, c_.out, c_.format)) written.push_back(std::move(p));
  }

  const RunConfig& c_;
  Inputs& in_;
  DecisionLog& log_;
  std::ostream& out_;
  std::optional<features::FeatureMatrix> matrix_;
};

}  // namespace

std::vector<std::filesystem::path> run(Command command, const RunConfig& config,
                                       DecisionLog& log, std::ostream& out) {
  const auto needs = needs_of(command);
  preflight(config, needs);
  auto inputs = load_inputs(config, needs, log, out);

  Runner r(config, inputs, log, out);
  switch (command) {
    case Command::Stats: r.stats(); break;
    case Command::Coverage: r.coverage(); break;
    case Command::Agree: r.agree(); break;
    case Command::Features: r.features(); break;
    case Command::Validate: r.validate(); break;
    case Command::All:
      r.stats();
      r.coverage();
      r.agree();
      r.features();
      r.validate();
      break;
  }

  if (config.log_decisions) {
    std::filesystem::create_directories(config.out);
    const auto path = config.out / "decisions.log";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write decision log", path.string());
    for (const auto& e : log.events()) f << e.rule << '\t' << e.detail << '\n';
    r.written.push_back(path);
  }
  for (const auto& [rule, n] : log.counts()) out << fmt::format("decision {}: {}\n", rule, n);
  return r.written;
}

}  // namespace gam
