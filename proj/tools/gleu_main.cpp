// Command-line front end: score one system, compare several, or check a
// metric ranking against a gold one. Exit codes: 0 success, 1 data error,
// 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gleu/io.hpp"
#include "gleu/metric.hpp"
#include "gleu/ranking.hpp"
#include "gleu/sampler.hpp"

namespace {

struct CommonOptions {
  std::string source_path;
  std::vector<std::string> hypothesis_paths;
  std::vector<std::string> reference_paths;
  int order = 4;
  std::int64_t iterations = 500;
  std::uint64_t seed = 0;
  int threads = 1;
  bool lowercase = false;
  std::string smoothing = "none";
  std::string format = "tsv";
  std::string metric = "gleu-plus";
  bool per_sentence = false;
};

bool parse_smoothing_spec(const std::string& spec, gleu::Smoothing* kind,
                          double* floor) {
  if (spec == "none") {
    *kind = gleu::Smoothing::none;
    return true;
  }
  if (spec == "floor") {
    *kind = gleu::Smoothing::floor;
    *floor = 1e-9;
    return true;
  }
  if (spec.rfind("floor:", 0) == 0) {
    try {
      std::size_t used = 0;
      double eps = std::stod(spec.substr(6), &used);
      if (used != spec.size() - 6 || eps <= 0.0) return false;
      *kind = gleu::Smoothing::floor;
      *floor = eps;
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }
  return false;
}

gleu::MetricConfig make_metric_config(const CommonOptions& opts) {
  gleu::MetricConfig config;
  config.max_order = opts.order;
  if (!parse_smoothing_spec(opts.smoothing, &config.smoothing,
                            &config.smoothing_floor))
    throw std::runtime_error("invalid --smoothing value: " + opts.smoothing);
  return config;
}

gleu::ReportFormat report_format(const CommonOptions& opts) {
  return opts.format == "json-lines" ? gleu::ReportFormat::json_lines
                                     : gleu::ReportFormat::tsv;
}

gleu::MetricKind metric_kind(const CommonOptions& opts) {
  return opts.metric == "bleu" ? gleu::MetricKind::bleu
                               : gleu::MetricKind::gleu_plus;
}

void add_sampling_flags(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("-n,--order", opts->order, "Maximum n-gram order")
      ->default_val(4)
      ->check(CLI::PositiveNumber);
  cmd->add_option("-i,--iterations", opts->iterations,
                  "Reference-sampling iterations")
      ->default_val(500)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts->seed, "Master RNG seed")->default_val(0);
  cmd->add_option("--threads", opts->threads,
                  "Worker threads for the sampling loop (result is "
                  "independent of this)")
      ->default_val(1)
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--lowercase", opts->lowercase,
                "Fold ASCII letters to lowercase while tokenizing");
  cmd->add_option("--smoothing", opts->smoothing,
                  "Zero-precision handling: none or floor[:EPS]")
      ->default_val("none")
      ->check(CLI::Validator(
          [](std::string& value) -> std::string {
            gleu::Smoothing kind;
            double eps;
            return parse_smoothing_spec(value, &kind, &eps)
                       ? std::string()
                       : "expected 'none' or 'floor:EPS'";
          },
          "SMOOTHING"));
  cmd->add_option("--metric", opts->metric, "Scoring metric")
      ->default_val("gleu-plus")
      ->check(CLI::IsMember({"gleu-plus", "bleu"}));
}

void add_format_flag(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--format", opts->format, "Report format")
      ->default_val("tsv")
      ->check(CLI::IsMember({"tsv", "json-lines"}));
}

std::string per_sentence_dump(const gleu::EvalCorpus& corpus,
                              gleu::ReportFormat format) {
  std::string out;
  for (std::size_t i = 0; i < corpus.sentence_count(); ++i) {
    for (std::size_t j = 0; j < corpus.reference_count(i); ++j) {
      const gleu::PrecisionStats& stats = corpus.stats(i, j);
      if (format == gleu::ReportFormat::tsv) {
        out += std::to_string(i) + "\t" + std::to_string(j) + "\t" +
               std::to_string(stats.candidate_length) + "\t" +
               std::to_string(stats.reference_length);
        for (int n = 0; n < stats.max_order(); ++n)
          out += "\t" + std::to_string(stats.numerators[n]) + "\t" +
                 std::to_string(stats.denominators[n]);
        out += "\n";
      } else {
        out += "{\"sentence\":" + std::to_string(i) +
               ",\"reference\":" + std::to_string(j) +
               ",\"candidate_length\":" + std::to_string(stats.candidate_length) +
               ",\"reference_length\":" + std::to_string(stats.reference_length) +
               ",\"numerators\":[";
        for (int n = 0; n < stats.max_order(); ++n)
          out += (n ? "," : "") + std::to_string(stats.numerators[n]);
        out += "],\"denominators\":[";
        for (int n = 0; n < stats.max_order(); ++n)
          out += (n ? "," : "") + std::to_string(stats.denominators[n]);
        out += "]}\n";
      }
    }
  }
  return out;
}

int run_score(const CommonOptions& opts) {
  gleu::ParallelCorpusFiles files;
  files.source_path = opts.source_path;
  files.hypothesis_paths = opts.hypothesis_paths;
  files.reference_paths = opts.reference_paths;
  gleu::LoadedParallelCorpus loaded = gleu::load_parallel_corpus(files);

  gleu::MetricConfig config = make_metric_config(opts);
  gleu::EvalCorpus corpus = gleu::build_eval_corpus(
      loaded.source_lines, loaded.hypothesis_lines.at(0),
      loaded.reference_lines, config, metric_kind(opts), opts.lowercase);

  gleu::SamplerConfig sampler{opts.iterations, opts.seed, opts.threads};
  gleu::CorpusScore score = gleu::evaluate(corpus, config, sampler);

  if (opts.per_sentence)
    std::cout << per_sentence_dump(corpus, report_format(opts));
  std::cout << gleu::emit_report(score, report_format(opts));
  return 0;
}

int run_compare(const CommonOptions& opts) {
  gleu::ParallelCorpusFiles files;
  files.source_path = opts.source_path;
  files.hypothesis_paths = opts.hypothesis_paths;
  files.reference_paths = opts.reference_paths;
  gleu::LoadedParallelCorpus loaded = gleu::load_parallel_corpus(files);

  gleu::MetricConfig config = make_metric_config(opts);
  gleu::SamplerConfig sampler{opts.iterations, opts.seed, opts.threads};

  std::vector<std::pair<std::string, double>> means;
  for (std::size_t s = 0; s < opts.hypothesis_paths.size(); ++s) {
    gleu::EvalCorpus corpus = gleu::build_eval_corpus(
        loaded.source_lines, loaded.hypothesis_lines[s],
        loaded.reference_lines, config, metric_kind(opts), opts.lowercase);
    gleu::CorpusScore score = gleu::evaluate(corpus, config, sampler);
    means.emplace_back(opts.hypothesis_paths[s], score.mean);
  }
  std::cout << gleu::emit_report(gleu::rank_systems(means),
                                 report_format(opts));
  return 0;
}

int run_correlate(const std::string& gold_path, const std::string& scores_path,
                  const std::string& ranking_path,
                  const CommonOptions& opts) {
  gleu::RankingTable gold = gleu::load_ranking(gold_path);
  gleu::RankingTable metric =
      !scores_path.empty()
          ? gleu::rank_systems(gleu::load_scores(scores_path))
          : gleu::load_ranking(ranking_path);
  gleu::CorrelationReport report = gleu::correlate_rankings(gold, metric);
  std::cout << gleu::emit_report(report, report_format(opts));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gleu: n-gram scorer for grammatical error correction outputs\n"
      "Scores candidates against randomly sampled references and "
      "meta-evaluates metric rankings against a gold ranking."};
  app.require_subcommand(1);

  CommonOptions score_opts;
  CLI::App* score =
      app.add_subcommand("score", "Score one system output (mean over "
                                  "reference-sampling iterations)");
  score->add_option("-s,--source", score_opts.source_path,
                    "Source (uncorrected) text, one sentence per line")
      ->required();
  score
      ->add_option("-y,--hypothesis", score_opts.hypothesis_paths,
                   "System output to score")
      ->required()
      ->expected(1);
  score
      ->add_option("-r,--reference", score_opts.reference_paths,
                   "Reference file (repeat for multiple annotators)")
      ->required();
  add_sampling_flags(score, &score_opts);
  add_format_flag(score, &score_opts);
  score->add_flag("--per-sentence", score_opts.per_sentence,
                  "Also dump per-sentence, per-reference statistics");

  CommonOptions compare_opts;
  CLI::App* compare = app.add_subcommand(
      "compare", "Score several system outputs with a shared seed and "
                 "print their ranking");
  compare
      ->add_option("-s,--source", compare_opts.source_path,
                   "Source (uncorrected) text, one sentence per line")
      ->required();
  compare
      ->add_option("-y,--hypothesis", compare_opts.hypothesis_paths,
                   "System outputs to rank (repeatable)")
      ->required()
      ->expected(2, -1);
  compare
      ->add_option("-r,--reference", compare_opts.reference_paths,
                   "Reference file (repeat for multiple annotators)")
      ->required();
  add_sampling_flags(compare, &compare_opts);
  add_format_flag(compare, &compare_opts);

  CommonOptions correlate_opts;
  std::string gold_path, scores_path, ranking_path;
  CLI::App* correlate = app.add_subcommand(
      "correlate",
      "Compare a metric's system ranking against a gold ranking");
  correlate->add_option("--gold", gold_path, "Gold ranking file, best first")
      ->required();
  CLI::Option* scores_opt = correlate->add_option(
      "--scores", scores_path, "Metric scores as 'id<TAB>score' lines");
  CLI::Option* ranking_opt =
      correlate->add_option("--metric-ranking", ranking_path,
                            "Metric ranking file, best first");
  scores_opt->excludes(ranking_opt);
  add_format_flag(correlate, &correlate_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (score->parsed()) return run_score(score_opts);
    if (compare->parsed()) return run_compare(compare_opts);
    if (correlate->parsed()) {
      if (scores_path.empty() && ranking_path.empty()) {
        std::cerr << "correlate: one of --scores or --metric-ranking is "
                     "required\n";
        return 2;
      }
      return run_correlate(gold_path, scores_path, ranking_path,
                           correlate_opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
