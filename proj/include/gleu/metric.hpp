#ifndef GLEU_METRIC_HPP
#define GLEU_METRIC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gleu/text.hpp"

namespace gleu {

enum class Smoothing { none, floor };

/// Knobs of the BLEU-style composition. Defaults: order 4, uniform weights,
/// no smoothing. `weights` may be left empty for uniform 1/max_order.
struct MetricConfig {
  int max_order = 4;
  std::vector<double> weights;
  Smoothing smoothing = Smoothing::none;
  double smoothing_floor = 1e-9;

  /// Weights actually used (fills in the uniform default).
  std::vector<double> effective_weights() const;

  /// Throws std::invalid_argument if max_order < 1 or the weights are not a
  /// distribution of length max_order.
  void validate() const;
};

/// Additive per-order precision statistics of a candidate sentence (or of a
/// whole corpus, as the componentwise sum of its sentences). numerators[k]
/// and denominators[k] hold the order-(k+1) precision terms; candidate and
/// reference token counts feed the brevity penalty.
struct PrecisionStats {
  std::vector<std::int64_t> numerators;
  std::vector<std::int64_t> denominators;
  std::int64_t candidate_length = 0;
  std::int64_t reference_length = 0;

  PrecisionStats() = default;
  explicit PrecisionStats(int max_order)
      : numerators(static_cast<std::size_t>(max_order), 0),
        denominators(static_cast<std::size_t>(max_order), 0) {}

  int max_order() const { return static_cast<int>(numerators.size()); }

  /// Componentwise accumulation. Throws std::invalid_argument on order
  /// mismatch.
  PrecisionStats& operator+=(const PrecisionStats& other);

  bool operator==(const PrecisionStats&) const = default;
};

/// Per-order precision statistics of `candidate` scored against one sampled
/// `reference`, given the uncorrected `source`. For each order n: the
/// numerator is the reference n-gram matches minus the counts of n-grams
/// found more often in the source than in the reference,
///
///   sum_{g in C&R} min(c_C(g), c_R(g))
///     - sum_{g in C&S} max(0, min(c_C(g), c_S(g)) - min(c_C(g), c_R(g))),
///
/// clamped to >= 0 per sentence; the denominator is the total candidate
/// n-gram mass. Sentence-level clamping keeps every sentence's contribution
/// non-negative so corpus sums are order-independent and precomputable.
PrecisionStats gleu_precision_stats(const Sentence& candidate,
                                    const Sentence& source,
                                    const Sentence& reference,
                                    const MetricConfig& config);

/// Plain BLEU statistics: clipped reference matches only, no source penalty.
PrecisionStats bleu_precision_stats(const Sentence& candidate,
                                    const Sentence& reference,
                                    const MetricConfig& config);

/// Componentwise sum. An empty input yields order-0 all-zero stats; mixed
/// orders throw std::invalid_argument.
PrecisionStats sum_stats(std::span<const PrecisionStats> stats);

/// BLEU brevity penalty: 1 when the candidate is at least as long as the
/// reference, exp(1 - ref/cand) when shorter, 0 for an empty candidate with a
/// non-empty reference, and 1 when both are empty.
double brevity_penalty(std::int64_t candidate_length,
                       std::int64_t reference_length);

/// Compose corpus-level stats into a single score in [0,1]:
/// BP * exp(sum_n w_n * log p_n) with p_n = numerators[n]/denominators[n].
/// A zero p_n (or zero denominator) makes the score 0 under Smoothing::none
/// and is replaced by the configured floor under Smoothing::floor. A corpus
/// whose every denominator is zero scores 0 regardless of smoothing.
double compose_score(const PrecisionStats& corpus_stats,
                     const MetricConfig& config);

}  // namespace gleu

#endif  // GLEU_METRIC_HPP
