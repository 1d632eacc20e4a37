#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gleu/io.hpp"
#include "gleu/metric.hpp"
#include "gleu/ranking.hpp"
#include "gleu/sampler.hpp"
#include "gleu/text.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_core, m) {
  m.doc() = "n-gram scorer for grammatical error correction outputs";

  m.def("tokenize", &gleu::tokenize, "raw_line"_a, "lowercase"_a = false,
        "Whitespace-split a line into tokens.");
  m.def(
      "extract_ngrams",
      [](const gleu::Sentence& sentence, int n) {
        return gleu::extract_ngrams(sentence, n).counts();
      },
      "sentence"_a, "n"_a,
      "Multiset of the length-n token windows, keyed by space-joined n-gram.");

  py::enum_<gleu::Smoothing>(m, "Smoothing")
      .value("none", gleu::Smoothing::none)
      .value("floor", gleu::Smoothing::floor);

  py::enum_<gleu::MetricKind>(m, "MetricKind")
      .value("gleu_plus", gleu::MetricKind::gleu_plus)
      .value("bleu", gleu::MetricKind::bleu);

  py::class_<gleu::MetricConfig>(m, "MetricConfig")
      .def(py::init<>())
      .def_readwrite("max_order", &gleu::MetricConfig::max_order)
      .def_readwrite("weights", &gleu::MetricConfig::weights)
      .def_readwrite("smoothing", &gleu::MetricConfig::smoothing)
      .def_readwrite("smoothing_floor", &gleu::MetricConfig::smoothing_floor);

  py::class_<gleu::PrecisionStats>(m, "PrecisionStats")
      .def(py::init<int>(), "max_order"_a)
      .def_readwrite("numerators", &gleu::PrecisionStats::numerators)
      .def_readwrite("denominators", &gleu::PrecisionStats::denominators)
      .def_readwrite("candidate_length",
                     &gleu::PrecisionStats::candidate_length)
      .def_readwrite("reference_length",
                     &gleu::PrecisionStats::reference_length)
      .def_property_readonly("max_order", &gleu::PrecisionStats::max_order)
      .def("__iadd__",
           [](gleu::PrecisionStats& self, const gleu::PrecisionStats& other)
               -> gleu::PrecisionStats& { return self += other; })
      .def("__eq__", [](const gleu::PrecisionStats& a,
                        const gleu::PrecisionStats& b) { return a == b; });

  m.def("gleu_precision_stats", &gleu::gleu_precision_stats, "candidate"_a,
        "source"_a, "reference"_a, "config"_a = gleu::MetricConfig{});
  m.def("bleu_precision_stats", &gleu::bleu_precision_stats, "candidate"_a,
        "reference"_a, "config"_a = gleu::MetricConfig{});
  m.def(
      "sum_stats",
      [](const std::vector<gleu::PrecisionStats>& stats) {
        return gleu::sum_stats(stats);
      },
      "stats"_a);
  m.def("brevity_penalty", &gleu::brevity_penalty, "candidate_length"_a,
        "reference_length"_a);
  m.def("compose_score", &gleu::compose_score, "corpus_stats"_a,
        "config"_a = gleu::MetricConfig{});

  py::class_<gleu::SamplerConfig>(m, "SamplerConfig")
      .def(py::init<>())
      .def_readwrite("iterations", &gleu::SamplerConfig::iterations)
      .def_readwrite("seed", &gleu::SamplerConfig::seed)
      .def_readwrite("threads", &gleu::SamplerConfig::threads);

  py::class_<gleu::EvalCorpus>(m, "EvalCorpus")
      .def_property_readonly("sentence_count",
                             &gleu::EvalCorpus::sentence_count)
      .def("reference_count", &gleu::EvalCorpus::reference_count, "sentence"_a)
      .def("stats", &gleu::EvalCorpus::stats, "sentence"_a, "reference"_a,
           py::return_value_policy::copy)
      .def_property_readonly("max_order", &gleu::EvalCorpus::max_order);

  m.def(
      "build_eval_corpus",
      [](const std::vector<std::string>& source_lines,
         const std::vector<std::string>& candidate_lines,
         const std::vector<std::vector<std::string>>& reference_line_sets,
         const gleu::MetricConfig& config, gleu::MetricKind metric,
         bool lowercase) {
        return gleu::build_eval_corpus(source_lines, candidate_lines,
                                       reference_line_sets, config, metric,
                                       lowercase);
      },
      "source_lines"_a, "candidate_lines"_a, "reference_line_sets"_a,
      "config"_a = gleu::MetricConfig{},
      "metric"_a = gleu::MetricKind::gleu_plus, "lowercase"_a = false);
  m.def("sample_assignment", &gleu::sample_assignment, "corpus"_a, "seed"_a,
        "iteration"_a);

  py::class_<gleu::CorpusScore>(m, "CorpusScore")
      .def_readonly("iteration_scores", &gleu::CorpusScore::iteration_scores)
      .def_readonly("mean", &gleu::CorpusScore::mean)
      .def_readonly("stdev", &gleu::CorpusScore::stdev)
      .def_readonly("ci95_half_width", &gleu::CorpusScore::ci95_half_width)
      .def_readonly("iterations", &gleu::CorpusScore::iterations)
      .def_readonly("seed", &gleu::CorpusScore::seed);

  m.def("evaluate", &gleu::evaluate, "corpus"_a,
        "config"_a = gleu::MetricConfig{},
        "sampler"_a = gleu::SamplerConfig{});

  py::class_<gleu::RankingEntry>(m, "RankingEntry")
      .def_readonly("id", &gleu::RankingEntry::id)
      .def_readonly("score", &gleu::RankingEntry::score)
      .def_readonly("rank", &gleu::RankingEntry::rank);

  py::class_<gleu::RankingTable>(m, "RankingTable")
      .def(py::init<>())
      .def_readonly("entries", &gleu::RankingTable::entries)
      .def("rank_of", &gleu::RankingTable::rank_of, "id"_a);

  py::class_<gleu::CorrelationReport>(m, "CorrelationReport")
      .def_readonly("pearson_r", &gleu::CorrelationReport::pearson_r)
      .def_readonly("spearman_rho", &gleu::CorrelationReport::spearman_rho)
      .def_readonly("mean_rank_displacement",
                    &gleu::CorrelationReport::mean_rank_displacement);

  m.def("rank_systems", &gleu::rank_systems, "scores"_a);
  m.def(
      "pearson",
      [](const std::vector<double>& xs, const std::vector<double>& ys) {
        return gleu::pearson(xs, ys);
      },
      "xs"_a, "ys"_a);
  m.def(
      "spearman",
      [](const std::vector<double>& xs, const std::vector<double>& ys) {
        return gleu::spearman(xs, ys);
      },
      "xs"_a, "ys"_a);
  m.def("mean_rank_displacement", &gleu::mean_rank_displacement, "gold"_a,
        "other"_a);
  m.def("correlate_rankings", &gleu::correlate_rankings, "gold"_a, "metric"_a);

  // One-call convenience for the common case: lines in, summary out.
  m.def(
      "score_corpus",
      [](const std::vector<std::string>& source_lines,
         const std::vector<std::string>& candidate_lines,
         const std::vector<std::vector<std::string>>& reference_line_sets,
         int max_order, std::int64_t iterations, std::uint64_t seed,
         bool lowercase, gleu::MetricKind metric, int threads) {
        gleu::MetricConfig config;
        config.max_order = max_order;
        gleu::EvalCorpus corpus =
            gleu::build_eval_corpus(source_lines, candidate_lines,
                                    reference_line_sets, config, metric,
                                    lowercase);
        gleu::SamplerConfig sampler{iterations, seed, threads};
        return gleu::evaluate(corpus, config, sampler);
      },
      "source_lines"_a, "candidate_lines"_a, "reference_line_sets"_a,
      "max_order"_a = 4, "iterations"_a = 500, "seed"_a = 0,
      "lowercase"_a = false, "metric"_a = gleu::MetricKind::gleu_plus,
      "threads"_a = 1);
}
