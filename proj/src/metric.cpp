#include "gleu/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gleu {

std::vector<double> MetricConfig::effective_weights() const {
  if (!weights.empty()) return weights;
  return std::vector<double>(static_cast<std::size_t>(max_order),
                             1.0 / max_order);
}

void MetricConfig::validate() const {
  if (max_order < 1)
    throw std::invalid_argument("metric config: max_order must be >= 1");
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != max_order)
      throw std::invalid_argument(
          "metric config: expected " + std::to_string(max_order) +
          " weights, got " + std::to_string(weights.size()));
    double sum = 0.0;
    for (double w : weights) {
      if (w < 0.0)
        throw std::invalid_argument("metric config: negative weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("metric config: weights must sum to 1");
  }
  if (smoothing == Smoothing::floor && smoothing_floor <= 0.0)
    throw std::invalid_argument("metric config: smoothing floor must be > 0");
}

PrecisionStats& PrecisionStats::operator+=(const PrecisionStats& other) {
  if (max_order() != other.max_order())
    throw std::invalid_argument("precision stats: max_order mismatch (" +
                                std::to_string(max_order()) + " vs " +
                                std::to_string(other.max_order()) + ")");
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    numerators[k] += other.numerators[k];
    denominators[k] += other.denominators[k];
  }
  candidate_length += other.candidate_length;
  reference_length += other.reference_length;
  return *this;
}

namespace {

// Shared skeleton of the two stats builders; a null source disables the
// penalty term (plain BLEU).
PrecisionStats precision_stats_impl(const Sentence& candidate,
                                    const Sentence* source,
                                    const Sentence& reference,
                                    const MetricConfig& config) {
  config.validate();
  PrecisionStats stats(config.max_order);
  stats.candidate_length = static_cast<std::int64_t>(candidate.size());
  stats.reference_length = static_cast<std::int64_t>(reference.size());
  for (int n = 1; n <= config.max_order; ++n) {
    NGramCounts cand = extract_ngrams(candidate, n);
    NGramCounts ref = extract_ngrams(reference, n);
    std::int64_t numerator = 0;
    if (source == nullptr) {
      for (const auto& [ngram, c_cand] : cand.counts()) {
        std::int64_t c_ref = ref.count(ngram);
        numerator += c_cand < c_ref ? c_cand : c_ref;
      }
    } else {
      NGramCounts src = extract_ngrams(*source, n);
      for (const auto& [ngram, c_cand] : cand.counts()) {
        std::int64_t match = std::min(c_cand, ref.count(ngram));
        std::int64_t in_source = std::min(c_cand, src.count(ngram));
        numerator += match;
        if (in_source > match) numerator -= in_source - match;
      }
      if (numerator < 0) numerator = 0;  // sentence-level clamp
    }
    stats.numerators[static_cast<std::size_t>(n - 1)] = numerator;
    stats.denominators[static_cast<std::size_t>(n - 1)] = cand.total();
  }
  return stats;
}

}  // namespace

PrecisionStats gleu_precision_stats(const Sentence& candidate,
                                    const Sentence& source,
                                    const Sentence& reference,
                                    const MetricConfig& config) {
  return precision_stats_impl(candidate, &source, reference, config);
}

PrecisionStats bleu_precision_stats(const Sentence& candidate,
                                    const Sentence& reference,
                                    const MetricConfig& config) {
  return precision_stats_impl(candidate, nullptr, reference, config);
}

PrecisionStats sum_stats(std::span<const PrecisionStats> stats) {
  if (stats.empty()) return PrecisionStats(0);
  PrecisionStats total(stats.front().max_order());
  for (const PrecisionStats& s : stats) total += s;
  return total;
}

double brevity_penalty(std::int64_t candidate_length,
                       std::int64_t reference_length) {
  if (candidate_length >= reference_length) return 1.0;
  if (candidate_length == 0) return 0.0;
  return std::exp(1.0 - static_cast<double>(reference_length) /
                            static_cast<double>(candidate_length));
}

double compose_score(const PrecisionStats& corpus_stats,
                     const MetricConfig& config) {
  config.validate();
  if (corpus_stats.max_order() != config.max_order)
    throw std::invalid_argument(
        "compose_score: stats order does not match config");

  bool any_mass = false;
  for (std::int64_t d : corpus_stats.denominators)
    if (d > 0) any_mass = true;
  if (!any_mass) return 0.0;  // fully degenerate corpus

  const std::vector<double> weights = config.effective_weights();
  double log_sum = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    std::int64_t num = corpus_stats.numerators[k];
    std::int64_t den = corpus_stats.denominators[k];
    double p = den > 0 ? static_cast<double>(num) / static_cast<double>(den)
                       : 0.0;
    if (p <= 0.0) {
      if (config.smoothing == Smoothing::none) return 0.0;
      p = config.smoothing_floor;
    }
    log_sum += weights[k] * std::log(p);
  }
  double bp = brevity_penalty(corpus_stats.candidate_length,
                              corpus_stats.reference_length);
  return bp * std::exp(log_sum);
}

}  // namespace gleu
