#include "gleu/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gleu {

int RankingTable::rank_of(const std::string& id) const {
  for (const RankingEntry& e : entries)
    if (e.id == id) return e.rank;
  throw std::runtime_error("ranking: unknown system id '" + id + "'");
}

RankingTable rank_systems(
    const std::vector<std::pair<std::string, double>>& scores) {
  if (scores.empty())
    throw std::invalid_argument("rank_systems: empty score map");
  std::set<std::string> seen;
  for (const auto& [id, score] : scores)
    if (!seen.insert(id).second)
      throw std::invalid_argument("rank_systems: duplicate system id '" + id +
                                  "'");
  RankingTable table;
  table.entries.reserve(scores.size());
  for (const auto& [id, score] : scores)
    table.entries.push_back({id, score, 0});
  std::sort(table.entries.begin(), table.entries.end(),
            [](const RankingEntry& a, const RankingEntry& b) {
              if (*a.score != *b.score) return *a.score > *b.score;
              return a.id < b.id;
            });
  for (std::size_t i = 0; i < table.entries.size(); ++i)
    table.entries[i].rank = static_cast<int>(i) + 1;
  return table;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("pearson: length mismatch (" +
                                std::to_string(xs.size()) + " vs " +
                                std::to_string(ys.size()) + ")");
  if (xs.size() < 2)
    throw std::invalid_argument("pearson: need at least 2 points");
  const double n = static_cast<double>(xs.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mean_x;
    double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument(
        "pearson: correlation undefined for constant input");
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    // positions i..j hold equal values; each gets the mean 1-based rank
    double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("spearman: length mismatch (" +
                                std::to_string(xs.size()) + " vs " +
                                std::to_string(ys.size()) + ")");
  std::vector<double> rx = average_ranks(xs);
  std::vector<double> ry = average_ranks(ys);
  return pearson(rx, ry);
}

double mean_rank_displacement(const RankingTable& gold,
                              const RankingTable& other) {
  std::set<std::string> gold_ids, other_ids;
  for (const RankingEntry& e : gold.entries) gold_ids.insert(e.id);
  for (const RankingEntry& e : other.entries) other_ids.insert(e.id);
  if (gold_ids != other_ids) {
    std::string missing, extra;
    for (const std::string& id : gold_ids)
      if (!other_ids.count(id)) missing += (missing.empty() ? "" : ", ") + id;
    for (const std::string& id : other_ids)
      if (!gold_ids.count(id)) extra += (extra.empty() ? "" : ", ") + id;
    std::string detail;
    if (!missing.empty()) detail += " missing from other: " + missing + ";";
    if (!extra.empty()) detail += " extra in other: " + extra + ";";
    throw std::runtime_error("rank displacement: system id sets differ;" +
                             detail);
  }
  if (gold.entries.empty())
    throw std::invalid_argument("rank displacement: empty ranking");
  double sum = 0.0;
  for (const RankingEntry& e : gold.entries)
    sum += std::abs(e.rank - other.rank_of(e.id));
  return sum / static_cast<double>(gold.entries.size());
}

CorrelationReport correlate_rankings(const RankingTable& gold,
                                     const RankingTable& metric) {
  CorrelationReport report;
  report.mean_rank_displacement = mean_rank_displacement(gold, metric);

  bool scored = !metric.entries.empty();
  for (const RankingEntry& e : metric.entries)
    if (!e.score) scored = false;

  // Vectors aligned in gold order.
  std::vector<double> gold_ranks, metric_values;
  gold_ranks.reserve(gold.entries.size());
  metric_values.reserve(gold.entries.size());
  for (const RankingEntry& e : gold.entries) {
    gold_ranks.push_back(static_cast<double>(e.rank));
    if (scored) {
      for (const RankingEntry& m : metric.entries)
        if (m.id == e.id) metric_values.push_back(*m.score);
    } else {
      metric_values.push_back(static_cast<double>(metric.rank_of(e.id)));
    }
  }

  if (scored) {
    // Higher score should pair with a better (smaller) gold rank.
    std::vector<double> neg_gold(gold_ranks.size()), neg_score(gold_ranks.size());
    for (std::size_t i = 0; i < gold_ranks.size(); ++i) {
      neg_gold[i] = -gold_ranks[i];
      neg_score[i] = -metric_values[i];
    }
    report.pearson_r = pearson(metric_values, neg_gold);
    report.spearman_rho = spearman(gold_ranks, neg_score);
  } else {
    report.spearman_rho = spearman(gold_ranks, metric_values);
  }
  return report;
}

}  // namespace gleu
