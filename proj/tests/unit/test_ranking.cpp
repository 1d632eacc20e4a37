#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "conll14_rankings.hpp"
#include "gleu/ranking.hpp"

using gleu::RankingTable;

namespace {

std::vector<double> random_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::vector<double> xs(n);
  for (double& x : xs) x = value(rng);
  return xs;
}

RankingTable random_ranking(std::mt19937& rng, int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("sys" + std::to_string(i));
  std::shuffle(ids.begin(), ids.end(), rng);
  RankingTable table;
  for (int i = 0; i < n; ++i)
    table.entries.push_back({ids[i], std::nullopt, i + 1});
  return table;
}

}  // namespace

TEST_SUITE("ranking") {

TEST_CASE("rank_systems sorts by descending score") {
  RankingTable table = gleu::rank_systems({{"A", 0.5}, {"B", 0.7}});
  REQUIRE(table.entries.size() == 2);
  CHECK(table.entries[0].id == "B");
  CHECK(table.entries[0].rank == 1);
  CHECK(table.entries[1].id == "A");
  CHECK(table.entries[1].rank == 2);

  RankingTable tied = gleu::rank_systems({{"B", 0.5}, {"A", 0.5}});
  CHECK(tied.entries[0].id == "A");  // lexicographic tie-break
  CHECK(tied.entries[1].id == "B");

  RankingTable single = gleu::rank_systems({{"X", 0.1}});
  CHECK(single.entries[0].rank == 1);

  CHECK_THROWS_AS(gleu::rank_systems({}), std::invalid_argument);
  CHECK_THROWS_AS(gleu::rank_systems({{"A", 1.0}, {"A", 2.0}}),
                  std::invalid_argument);
}

TEST_CASE("ranks are invariant under increasing score transforms") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<std::string, double>> scores;
    for (int i = 0; i < 8; ++i)
      scores.emplace_back("sys" + std::to_string(i),
                          random_vector(rng, 1)[0]);
    RankingTable base = gleu::rank_systems(scores);
    for (auto& [id, score] : scores) score = std::exp(score) * 3.0 + 1.0;
    RankingTable transformed = gleu::rank_systems(scores);
    for (std::size_t i = 0; i < base.entries.size(); ++i)
      CHECK(base.entries[i].id == transformed.entries[i].id);
  }
}

TEST_CASE("pearson on exact linear relations") {
  std::vector<double> xs = {1, 2, 3};
  std::vector<double> up = {2, 4, 6};
  std::vector<double> down = {3, 2, 1};
  CHECK(gleu::pearson(xs, up) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gleu::pearson(xs, down) == doctest::Approx(-1.0).epsilon(1e-12));

  std::vector<double> a = {1, 2, 3, 4};
  std::vector<double> b = {1, 3, 2, 4};
  CHECK(gleu::pearson(a, b) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("pearson rejects degenerate input") {
  std::vector<double> xs = {1, 2, 3};
  std::vector<double> flat = {5, 5, 5};
  std::vector<double> two = {1, 2};
  CHECK_THROWS_AS(gleu::pearson(xs, two), std::invalid_argument);
  CHECK_THROWS_AS(gleu::pearson(xs, flat), std::invalid_argument);
  CHECK_THROWS_AS(gleu::pearson(flat, xs), std::invalid_argument);
  std::vector<double> lone_x = {1.0}, lone_y = {2.0};
  CHECK_THROWS_AS(gleu::pearson(lone_x, lone_y), std::invalid_argument);
}

TEST_CASE("pearson is symmetric and affine invariant") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs = random_vector(rng, 10);
    std::vector<double> ys = random_vector(rng, 10);
    double r = gleu::pearson(xs, ys);
    CHECK(gleu::pearson(ys, xs) == doctest::Approx(r).epsilon(1e-12));
    std::vector<double> scaled(xs);
    for (double& x : scaled) x = 2.5 * x + 7.0;
    CHECK(gleu::pearson(scaled, ys) == doctest::Approx(r).epsilon(1e-9));
    CHECK(r >= -1.0 - 1e-12);
    CHECK(r <= 1.0 + 1e-12);
  }
}

TEST_CASE("average ranks give ties fractional positions") {
  std::vector<double> xs = {10, 20, 20, 30};
  CHECK(gleu::average_ranks(xs) == std::vector<double>{1.0, 2.5, 2.5, 4.0});
  std::vector<double> all_tied = {7, 7, 7};
  CHECK(gleu::average_ranks(all_tied) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("spearman equals the closed form on tie-free data") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 5 + static_cast<int>(trial % 8);
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) xs[i] = i + 1;
    for (int i = 0; i < n; ++i) ys[i] = i + 1;
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    double sum_d2 = 0.0;
    for (int i = 0; i < n; ++i) sum_d2 += (xs[i] - ys[i]) * (xs[i] - ys[i]);
    double closed_form =
        1.0 - 6.0 * sum_d2 / (static_cast<double>(n) * (n * n - 1.0));
    CHECK(gleu::spearman(xs, ys) ==
          doctest::Approx(closed_form).epsilon(1e-12));
  }
}

TEST_CASE("spearman is invariant under monotone transforms") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs = random_vector(rng, 12);
    std::vector<double> ys = random_vector(rng, 12);
    double rho = gleu::spearman(xs, ys);
    std::vector<double> warped(xs);
    for (double& x : warped) x = std::exp(0.3 * x);  // strictly increasing
    CHECK(gleu::spearman(warped, ys) == doctest::Approx(rho).epsilon(1e-12));
    CHECK(gleu::spearman(ys, xs) == doctest::Approx(rho).epsilon(1e-12));
  }
}

TEST_CASE("published CoNLL-2014 rank correlations are reproduced") {
  auto [human_a, gleu0] = conll14::aligned_ranks(conll14::kGleu0);
  CHECK(gleu::spearman(human_a, gleu0) ==
        doctest::Approx(0.555).epsilon(0.001));
  auto [human_b, gleu_plus] = conll14::aligned_ranks(conll14::kGleuPlus);
  CHECK(gleu::spearman(human_b, gleu_plus) ==
        doctest::Approx(0.401).epsilon(0.0013));
  auto [human_c, m2] = conll14::aligned_ranks(conll14::kM2);
  CHECK(gleu::spearman(human_c, m2) ==
        doctest::Approx(0.429).epsilon(0.001));

  // Exact rationals behind the rounded values: 1 - 6*d2/(13*168).
  CHECK(gleu::spearman(human_a, gleu0) ==
        doctest::Approx(1.0 - 6.0 * 162.0 / 2184.0).epsilon(1e-12));
  CHECK(gleu::spearman(human_b, gleu_plus) ==
        doctest::Approx(1.0 - 6.0 * 218.0 / 2184.0).epsilon(1e-12));
  CHECK(gleu::spearman(human_c, m2) ==
        doctest::Approx(1.0 - 6.0 * 208.0 / 2184.0).epsilon(1e-12));
}

TEST_CASE("published CoNLL-2014 rank displacements are reproduced") {
  gleu::RankingTable human = conll14::make_table(conll14::kHuman);
  CHECK(gleu::mean_rank_displacement(human, conll14::make_table(conll14::kM2)) ==
        44.0 / 13.0);
  CHECK(gleu::mean_rank_displacement(human,
                                     conll14::make_table(conll14::kGleu0)) ==
        34.0 / 13.0);
  CHECK(gleu::mean_rank_displacement(
            human, conll14::make_table(conll14::kGleuPlus)) == 38.0 / 13.0);
  CHECK(gleu::mean_rank_displacement(human, human) == 0.0);
}

TEST_CASE("rank displacement is a pseudometric") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    RankingTable a = random_ranking(rng, 9);
    RankingTable b = random_ranking(rng, 9);
    RankingTable c = random_ranking(rng, 9);
    double ab = gleu::mean_rank_displacement(a, b);
    double ba = gleu::mean_rank_displacement(b, a);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
    CHECK(gleu::mean_rank_displacement(a, a) == 0.0);
    CHECK(ab <= gleu::mean_rank_displacement(a, c) +
                    gleu::mean_rank_displacement(c, b) + 1e-12);
  }
}

TEST_CASE("rank displacement rejects mismatched id sets") {
  RankingTable a, b;
  a.entries = {{"A", std::nullopt, 1}, {"B", std::nullopt, 2}};
  b.entries = {{"A", std::nullopt, 1}, {"C", std::nullopt, 2}};
  CHECK_THROWS_WITH_AS(gleu::mean_rank_displacement(a, b),
                       doctest::Contains("B"), std::runtime_error);
  CHECK_THROWS_WITH_AS(gleu::mean_rank_displacement(a, b),
                       doctest::Contains("C"), std::runtime_error);
}

TEST_CASE("correlate_rankings on rank-only tables") {
  gleu::RankingTable gold = conll14::make_table(conll14::kHuman);
  gleu::CorrelationReport self = gleu::correlate_rankings(gold, gold);
  CHECK_FALSE(self.pearson_r.has_value());
  CHECK(self.spearman_rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(self.mean_rank_displacement == 0.0);

  gleu::RankingTable reversed;
  for (std::size_t i = 0; i < gold.entries.size(); ++i)
    reversed.entries.push_back(
        {gold.entries[gold.entries.size() - 1 - i].id, std::nullopt,
         static_cast<int>(i) + 1});
  CHECK(gleu::correlate_rankings(gold, reversed).spearman_rho ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("correlate_rankings with metric scores") {
  gleu::RankingTable gold;
  gold.entries = {{"A", std::nullopt, 1},
                  {"B", std::nullopt, 2},
                  {"C", std::nullopt, 3}};
  gleu::RankingTable agree =
      gleu::rank_systems({{"A", 0.9}, {"B", 0.5}, {"C", 0.1}});
  gleu::CorrelationReport report = gleu::correlate_rankings(gold, agree);
  REQUIRE(report.pearson_r.has_value());
  CHECK(*report.pearson_r == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.spearman_rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.mean_rank_displacement == 0.0);

  gleu::RankingTable disagree =
      gleu::rank_systems({{"A", 0.1}, {"B", 0.5}, {"C", 0.9}});
  gleu::CorrelationReport flipped = gleu::correlate_rankings(gold, disagree);
  CHECK(*flipped.pearson_r == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(flipped.spearman_rho == doctest::Approx(-1.0).epsilon(1e-12));
}

}  // TEST_SUITE
