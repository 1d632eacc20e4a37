#include "gleu/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace gleu {

namespace {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

IterationRng::IterationRng(std::uint64_t seed, std::uint64_t iteration)
    : state_(mix64(seed + 0x9e3779b97f4a7c15ULL) ^
             mix64(iteration + 0x2545f4914f6cdd1dULL)) {}

std::uint64_t IterationRng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  return mix64(z);
}

std::uint32_t IterationRng::uniform_below(std::uint32_t bound) {
  if (bound <= 1) return 0;
  unsigned __int128 wide =
      static_cast<unsigned __int128>(next_u64()) * bound;
  return static_cast<std::uint32_t>(wide >> 64);
}

EvalCorpus build_eval_corpus(std::vector<SentenceTriple> triples,
                             const MetricConfig& config, MetricKind metric) {
  config.validate();
  EvalCorpus corpus;
  corpus.max_order_ = config.max_order;
  corpus.metric_ = metric;
  corpus.stats_.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const SentenceTriple& t = triples[i];
    if (t.references.empty())
      throw std::invalid_argument("sentence " + std::to_string(i) +
                                  " has no reference");
    std::vector<PrecisionStats> per_ref;
    per_ref.reserve(t.references.size());
    for (const Sentence& ref : t.references) {
      per_ref.push_back(metric == MetricKind::gleu_plus
                            ? gleu_precision_stats(t.candidate, t.source, ref,
                                                   config)
                            : bleu_precision_stats(t.candidate, ref, config));
    }
    corpus.stats_.push_back(std::move(per_ref));
  }
  corpus.triples_ = std::move(triples);
  return corpus;
}

EvalCorpus build_eval_corpus(
    const std::vector<std::string>& source_lines,
    const std::vector<std::string>& candidate_lines,
    const std::vector<std::vector<std::string>>& reference_line_sets,
    const MetricConfig& config, MetricKind metric, bool lowercase) {
  if (candidate_lines.size() != source_lines.size())
    throw std::runtime_error(
        "corpus alignment error: source has " +
        std::to_string(source_lines.size()) + " lines, hypothesis has " +
        std::to_string(candidate_lines.size()));
  if (reference_line_sets.empty())
    throw std::runtime_error("corpus alignment error: no reference set given");
  for (std::size_t k = 0; k < reference_line_sets.size(); ++k) {
    if (reference_line_sets[k].size() != source_lines.size())
      throw std::runtime_error(
          "corpus alignment error: source has " +
          std::to_string(source_lines.size()) + " lines, reference set " +
          std::to_string(k) + " has " +
          std::to_string(reference_line_sets[k].size()));
  }

  std::vector<SentenceTriple> triples(source_lines.size());
  for (std::size_t i = 0; i < source_lines.size(); ++i) {
    triples[i].source = tokenize(source_lines[i], lowercase);
    triples[i].candidate = tokenize(candidate_lines[i], lowercase);
    triples[i].references.reserve(reference_line_sets.size());
    for (const auto& set : reference_line_sets)
      triples[i].references.push_back(tokenize(set[i], lowercase));
  }
  return build_eval_corpus(std::move(triples), config, metric);
}

std::vector<std::uint32_t> sample_assignment(const EvalCorpus& corpus,
                                             std::uint64_t seed,
                                             std::uint64_t iteration) {
  IterationRng rng(seed, iteration);
  std::vector<std::uint32_t> indices(corpus.sentence_count());
  for (std::size_t i = 0; i < indices.size(); ++i)
    indices[i] =
        rng.uniform_below(static_cast<std::uint32_t>(corpus.reference_count(i)));
  return indices;
}

namespace {

double score_one_iteration(const EvalCorpus& corpus,
                           const MetricConfig& config, std::uint64_t seed,
                           std::uint64_t iteration) {
  IterationRng rng(seed, iteration);
  PrecisionStats total(corpus.max_order());
  for (std::size_t i = 0; i < corpus.sentence_count(); ++i) {
    std::uint32_t j =
        rng.uniform_below(static_cast<std::uint32_t>(corpus.reference_count(i)));
    total += corpus.stats(i, j);
  }
  return compose_score(total, config);
}

}  // namespace

CorpusScore evaluate(const EvalCorpus& corpus, const MetricConfig& config,
                     const SamplerConfig& sampler) {
  config.validate();
  if (config.max_order != corpus.max_order())
    throw std::invalid_argument("evaluate: config order " +
                                std::to_string(config.max_order) +
                                " does not match corpus order " +
                                std::to_string(corpus.max_order()));
  if (sampler.iterations < 1)
    throw std::invalid_argument("evaluate: iterations must be >= 1");

  const std::int64_t iters = sampler.iterations;
  CorpusScore result;
  result.iteration_scores.resize(static_cast<std::size_t>(iters));
  result.iterations = iters;
  result.seed = sampler.seed;

  int threads = sampler.threads > 1 ? sampler.threads : 1;
  if (threads > iters) threads = static_cast<int>(iters);
  if (threads == 1) {
    for (std::int64_t it = 0; it < iters; ++it)
      result.iteration_scores[static_cast<std::size_t>(it)] =
          score_one_iteration(corpus, config, sampler.seed,
                              static_cast<std::uint64_t>(it));
  } else {
    // Iterations are seeded independently, so any partition of the range
    // produces the same per-slot values.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::int64_t it = w; it < iters; it += threads)
          result.iteration_scores[static_cast<std::size_t>(it)] =
              score_one_iteration(corpus, config, sampler.seed,
                                  static_cast<std::uint64_t>(it));
      });
    }
    for (std::thread& t : pool) t.join();
  }

  // Reduce in iteration order. A corpus with a single possible assignment
  // (every sentence has one reference) must report exactly zero spread, so
  // the all-identical case bypasses the floating summation.
  bool identical = true;
  for (double s : result.iteration_scores)
    if (s != result.iteration_scores.front()) identical = false;
  if (identical) {
    result.mean = result.iteration_scores.front();
    return result;
  }
  double sum = 0.0;
  for (double s : result.iteration_scores) sum += s;
  result.mean = sum / static_cast<double>(iters);
  if (iters > 1) {
    double sq = 0.0;
    for (double s : result.iteration_scores) {
      double d = s - result.mean;
      sq += d * d;
    }
    result.stdev = std::sqrt(sq / static_cast<double>(iters - 1));
    result.ci95_half_width =
        1.96 * result.stdev / std::sqrt(static_cast<double>(iters));
  }
  return result;
}

}  // namespace gleu
