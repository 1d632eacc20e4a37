#ifndef GLEU_RANKING_HPP
#define GLEU_RANKING_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gleu {

/// One row of a system leaderboard. `score` is absent when the ranking came
/// from an ordered list without a score column.
struct RankingEntry {
  std::string id;
  std::optional<double> score;
  int rank = 0;

  bool operator==(const RankingEntry&) const = default;
};

/// Systems ordered best-first, ranks 1..n, scores non-increasing when
/// present.
struct RankingTable {
  std::vector<RankingEntry> entries;

  /// Rank of a system id; throws std::runtime_error when absent.
  int rank_of(const std::string& id) const;
};

/// Sort systems by descending score into ranks 1..n. Exact score ties break
/// by ascending id so output is deterministic. Empty input and duplicate ids
/// throw std::invalid_argument.
RankingTable rank_systems(
    const std::vector<std::pair<std::string, double>>& scores);

/// Sample Pearson correlation coefficient. Requires equal lengths >= 2 and
/// both inputs non-constant (a zero variance leaves r undefined); violations
/// throw std::invalid_argument.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// 1-based fractional ranks of `xs` in ascending order; ties receive the
/// average of the ranks they span.
std::vector<double> average_ranks(std::span<const double> xs);

/// Spearman rank correlation: Pearson on the average-rank vectors.
double spearman(std::span<const double> xs, std::span<const double> ys);

/// Mean over systems of |rank in gold - rank in other|. The two tables must
/// rank the same id set; mismatches throw std::runtime_error naming the
/// missing and extra ids.
double mean_rank_displacement(const RankingTable& gold,
                              const RankingTable& other);

/// Agreement between a metric and a gold ranking. pearson_r is only
/// available when the metric side carries scores; it is computed against the
/// negated gold ranks so that a higher score paired with a better (smaller)
/// rank counts as positive correlation.
struct CorrelationReport {
  std::optional<double> pearson_r;
  double spearman_rho = 0.0;
  double mean_rank_displacement = 0.0;
};

/// Compare a metric ranking (scored or not) against the gold ranking.
CorrelationReport correlate_rankings(const RankingTable& gold,
                                     const RankingTable& metric);

}  // namespace gleu

#endif  // GLEU_RANKING_HPP
