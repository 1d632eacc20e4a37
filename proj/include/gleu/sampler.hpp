#ifndef GLEU_SAMPLER_HPP
#define GLEU_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "gleu/metric.hpp"
#include "gleu/text.hpp"

namespace gleu {

enum class MetricKind { gleu_plus, bleu };

/// One corpus line: the uncorrected source, a system's candidate, and every
/// available human reference. Reference counts may differ across sentences
/// but must never be zero.
struct SentenceTriple {
  Sentence source;
  Sentence candidate;
  std::vector<Sentence> references;
};

/// An evaluation-ready corpus: the tokenized triples plus one PrecisionStats
/// per (sentence, reference) pair, materialized once at build time so that a
/// sampling iteration is pure integer summation. Immutable after
/// construction and shareable across threads.
class EvalCorpus {
 public:
  EvalCorpus() = default;

  std::size_t sentence_count() const { return triples_.size(); }
  std::size_t reference_count(std::size_t sentence) const {
    return triples_[sentence].references.size();
  }
  const SentenceTriple& triple(std::size_t sentence) const {
    return triples_[sentence];
  }
  const PrecisionStats& stats(std::size_t sentence, std::size_t ref) const {
    return stats_[sentence][ref];
  }
  int max_order() const { return max_order_; }
  MetricKind metric() const { return metric_; }

 private:
  friend EvalCorpus build_eval_corpus(std::vector<SentenceTriple>,
                                      const MetricConfig&, MetricKind);
  std::vector<SentenceTriple> triples_;
  std::vector<std::vector<PrecisionStats>> stats_;
  int max_order_ = 0;
  MetricKind metric_ = MetricKind::gleu_plus;
};

/// Build from pre-tokenized triples. Throws std::invalid_argument if any
/// sentence has no reference.
EvalCorpus build_eval_corpus(std::vector<SentenceTriple> triples,
                             const MetricConfig& config, MetricKind metric);

/// Build from raw lines: one source line and one candidate line per
/// sentence, plus one line vector per reference set (annotator). All line
/// vectors must have the same length; mismatches throw std::runtime_error
/// naming the offending lengths.
EvalCorpus build_eval_corpus(
    const std::vector<std::string>& source_lines,
    const std::vector<std::string>& candidate_lines,
    const std::vector<std::vector<std::string>>& reference_line_sets,
    const MetricConfig& config, MetricKind metric, bool lowercase);

/// Sampler knobs. The seed is a fixed constant by default so repeated runs
/// reproduce each other; iterations follow the metric's usual 500.
struct SamplerConfig {
  std::int64_t iterations = 500;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Per-iteration random stream, derived from (seed, iteration) only. Any
/// iteration can be generated in isolation, so parallel evaluation and
/// iteration-count extension never change already-computed draws.
class IterationRng {
 public:
  IterationRng(std::uint64_t seed, std::uint64_t iteration);
  std::uint64_t next_u64();
  /// Uniform draw in [0, bound) via the multiply-shift reduction.
  std::uint32_t uniform_below(std::uint32_t bound);

 private:
  std::uint64_t state_;
};

/// One reference index per sentence, each uniform over that sentence's own
/// references, drawn from the (seed, iteration) stream.
std::vector<std::uint32_t> sample_assignment(const EvalCorpus& corpus,
                                             std::uint64_t seed,
                                             std::uint64_t iteration);

/// Result of a sampled evaluation: every per-iteration corpus score plus the
/// summary the metric reports (mean over iterations). stdev is the sample
/// standard deviation; ci95_half_width = 1.96 * stdev / sqrt(iterations).
struct CorpusScore {
  std::vector<double> iteration_scores;
  double mean = 0.0;
  double stdev = 0.0;
  double ci95_half_width = 0.0;
  std::int64_t iterations = 0;
  std::uint64_t seed = 0;
};

/// Run the sampled evaluation: per iteration, pick one reference per
/// sentence, sum the precomputed stats, compose the corpus score; summarize
/// over iterations. Deterministic for a fixed seed regardless of
/// sampler.threads (iterations are independent streams and results are
/// reduced in iteration order).
CorpusScore evaluate(const EvalCorpus& corpus, const MetricConfig& config,
                     const SamplerConfig& sampler);

}  // namespace gleu

#endif  // GLEU_SAMPLER_HPP
