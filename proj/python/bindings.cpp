#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "gam/agreement.hpp"
#include "gam/features.hpp"
#include "gam/outcome.hpp"
#include "gam/pipeline.hpp"
#include "gam/run_config.hpp"
#include "gam/stats.hpp"
#include "gam/text.hpp"

namespace py = pybind11;
using namespace gam;

namespace {

agreement::Level parse_level(const std::string& s) {
  if (s == "nominal") return agreement::Level::Nominal;
  if (s == "ordinal") return agreement::Level::Ordinal;
  if (s == "interval") return agreement::Level::Interval;
  throw py::value_error("level must be nominal, ordinal or interval");
}

}  // namespace

PYBIND11_MODULE(_gamsonnet, m) {
  m.doc() = "Lexicon-based affective features for sonnets and their validation statistics.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_ArithmeticError);

  m.def("stem", [](const std::string& w) { return text::stem(w); }, py::arg("word"),
        "Spanish Snowball stem of one word.");

  m.def(
      "normalize",
      [](const std::string& s, const std::string& mode, bool stopwords) {
        text::NormalizationConfig norm;
        norm.mode = text::parse_mode(mode);
        if (stopwords) norm.stopwords = text::default_spanish_stopwords();
        py::list out;
        for (const auto& t : text::normalize(s, norm)) {
          out.append(py::make_tuple(t.surface, t.position, t.normalized));
        }
        return out;
      },
      py::arg("text"), py::arg("mode") = "stem", py::arg("stopwords") = true,
      "(surface, position, key) for every token surviving stopword removal.");

  m.def(
      "spearman",
      [](const std::vector<double>& x, const std::vector<double>& y) -> std::optional<double> {
        const auto r = stats::spearman(x, y);
        if (!r) return std::nullopt;
        return r->rho;
      },
      py::arg("x"), py::arg("y"), "Spearman rho with average ranks; None when undefined.");

  m.def(
      "ols",
      [](const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
        const auto r = stats::ols(X, y);
        py::dict d;
        d["intercept"] = r.intercept;
        d["coefficients"] = r.coefficients;
        d["std_errors"] = r.std_errors;
        d["p_values"] = r.p_values;
        d["r_squared"] = r.r_squared;
        d["adjusted_r_squared"] = r.adjusted_r_squared;
        return d;
      },
      py::arg("X"), py::arg("y"), "Least squares with an intercept column.");

  m.def(
      "one_way_anova",
      [](const std::vector<std::vector<double>>& groups) {
        const auto a = stats::one_way_anova(groups);
        py::dict d;
        d["f_statistic"] = a.f_statistic;
        d["p_value"] = a.p_value;
        d["group_means"] = a.group_means;
        d["degenerate"] = a.degenerate;
        return d;
      },
      py::arg("groups"));

  m.def(
      "krippendorff_alpha",
      [](const std::vector<std::vector<std::optional<double>>>& cells, const std::string& level) {
        agreement::ReliabilityMatrix mat;
        mat.level = parse_level(level);
        mat.cells = cells;
        for (std::size_t u = 0; u < cells.size(); ++u) mat.units.push_back(std::to_string(u));
        if (!cells.empty()) {
          for (std::size_t r = 0; r < cells.front().size(); ++r) mat.raters.push_back(std::to_string(r));
        }
        const auto a = agreement::krippendorff_alpha(mat);
        py::dict d;
        d["alpha"] = a.alpha;
        d["n_pairable"] = a.n_pairable;
        d["band"] = agreement::to_string(a.band);
        d["degenerate"] = a.degenerate;
        return d;
      },
      py::arg("cells"), py::arg("level") = "nominal",
      "cells[unit][rater], None for a missing rating.");

  m.def("min_sample_size", &stats::min_sample_size, py::arg("alpha") = 0.05,
        py::arg("power") = 0.8, py::arg("cohens_d") = 0.8,
        "Smallest per-group n reaching `power` in a two-sided two-sample t test.");

  m.def("feature_names", [] {
    std::vector<std::string> out;
    for (auto f : features::all_gam_features()) out.emplace_back(features::name(f));
    return out;
  });

  m.def(
      "run",
      [](const std::string& command, const std::filesystem::path& config,
         std::optional<std::filesystem::path> out) {
        auto cfg = load_run_config(config);
        if (out) cfg.out = *out;
        DecisionLog log;
        std::ostringstream sink;
        const auto paths = run(parse_command(command), cfg, log, sink);
        return py::make_tuple(paths, log.counts());
      },
      py::arg("command"), py::arg("config"), py::arg("out") = py::none(),
      "Runs a pipeline command; returns (written paths, decision counts).");
}
