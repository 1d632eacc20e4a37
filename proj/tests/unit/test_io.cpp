#include <doctest.h>

#include <stdexcept>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gleu/io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("gleu_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string write(const std::string& name, const std::string& content) {
    fs::path file = path / name;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file.string();
  }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("read_lines tolerates exactly one final newline") {
  TempDir dir;
  std::vector<std::string> expected = {"a b", "c"};
  CHECK(gleu::read_lines(dir.write("with.txt", "a b\nc\n")) == expected);
  CHECK(gleu::read_lines(dir.write("without.txt", "a b\nc")) == expected);
  std::vector<std::string> with_blank = {"a b", "c", ""};
  CHECK(gleu::read_lines(dir.write("blank.txt", "a b\nc\n\n")) == with_blank);
  CHECK(gleu::read_lines(dir.write("empty.txt", "")).empty());
  std::vector<std::string> interior = {"a", "", "b"};
  CHECK(gleu::read_lines(dir.write("interior.txt", "a\n\nb\n")) == interior);
}

TEST_CASE("read_lines rejects missing files and invalid UTF-8") {
  TempDir dir;
  CHECK_THROWS_AS(gleu::read_lines((dir.path / "absent.txt").string()),
                  std::runtime_error);
  std::string bad = "ok line\nbad \xff byte\n";
  CHECK_THROWS_WITH_AS(gleu::read_lines(dir.write("bad.txt", bad)),
                       doctest::Contains(":2"), std::runtime_error);
  // Overlong encoding of '/'
  CHECK_THROWS_AS(gleu::read_lines(dir.write("overlong.txt", "\xc0\xaf\n")),
                  std::runtime_error);
  // Proper multi-byte text passes.
  CHECK(gleu::read_lines(dir.write("utf8.txt",
                                   "caf\xc3\xa9 \xe4\xb8\xad\xf0\x9f\x98\x80\n"))
            .size() == 1);
}

TEST_CASE("load_parallel_corpus enforces line alignment") {
  TempDir dir;
  gleu::ParallelCorpusFiles files;
  files.source_path = dir.write("src.txt", "s1\ns2\ns3\n");
  files.hypothesis_paths = {dir.write("hyp.txt", "h1\nh2\nh3\n")};
  files.reference_paths = {dir.write("ref0.txt", "r1\nr2\nr3\n"),
                           dir.write("ref1.txt", "q1\nq2\nq3\n")};
  gleu::LoadedParallelCorpus corpus = gleu::load_parallel_corpus(files);
  CHECK(corpus.source_lines.size() == 3);
  CHECK(corpus.hypothesis_lines.size() == 1);
  CHECK(corpus.reference_lines.size() == 2);

  files.reference_paths.push_back(dir.write("short.txt", "r1\nr2\n"));
  CHECK_THROWS_WITH_AS(gleu::load_parallel_corpus(files),
                       doctest::Contains("short.txt"), std::runtime_error);
}

TEST_CASE("load_ranking accepts ordered and scored forms") {
  TempDir dir;
  gleu::RankingTable ordered =
      gleu::load_ranking(dir.write("plain.txt", "CAMB\nAMU\nRAC\n"));
  REQUIRE(ordered.entries.size() == 3);
  CHECK(ordered.entries[0].id == "CAMB");
  CHECK(ordered.entries[0].rank == 1);
  CHECK_FALSE(ordered.entries[0].score.has_value());
  CHECK(ordered.entries[2].rank == 3);

  gleu::RankingTable scored =
      gleu::load_ranking(dir.write("scored.txt", "A\t0.8\nB\t0.9\n"));
  CHECK(scored.entries[0].id == "B");  // re-ranked by score
  CHECK(scored.entries[0].score == 0.9);

  CHECK_THROWS_AS(gleu::load_ranking(dir.write("empty.txt", "")),
                  std::runtime_error);
  CHECK_THROWS_WITH_AS(
      gleu::load_ranking(dir.write("dup.txt", "A\nB\nA\n")),
      doctest::Contains("duplicate"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      gleu::load_ranking(dir.write("mixed.txt", "A\t0.5\nB\n")),
      doctest::Contains("some lines"), std::runtime_error);
  CHECK_THROWS_AS(gleu::load_ranking(dir.write("badnum.txt", "A\tx9\n")),
                  std::runtime_error);
}

TEST_CASE("load_scores parses id-to-score lines") {
  TempDir dir;
  auto scores = gleu::load_scores(dir.write("s.txt", "A\t0.5\nB\t-1.25\n"));
  REQUIRE(scores.size() == 2);
  CHECK(scores[0].first == "A");
  CHECK(scores[1].second == -1.25);
  CHECK_THROWS_AS(gleu::load_scores(dir.write("nofield.txt", "A 0.5\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(gleu::load_scores(dir.write("dup.txt", "A\t1\nA\t2\n")),
                  std::runtime_error);
}

TEST_CASE("corpus score reports are byte-stable") {
  gleu::CorpusScore score;
  score.mean = 0.5;
  score.stdev = 0.012345678;
  score.ci95_half_width = 0.00108;
  score.iterations = 500;
  score.seed = 0;

  std::string tsv = gleu::emit_report(score, gleu::ReportFormat::tsv);
  CHECK(tsv == "0.500000\t0.012346\t0.001080\t500\t0\n");
  CHECK(gleu::emit_report(score, gleu::ReportFormat::tsv) == tsv);

  std::string jsonl = gleu::emit_report(score, gleu::ReportFormat::json_lines);
  CHECK(gleu::emit_report(score, gleu::ReportFormat::json_lines) == jsonl);
  nlohmann::json parsed = nlohmann::json::parse(jsonl);
  CHECK(parsed["mean"].get<double>() == score.mean);
  CHECK(parsed["stdev"].get<double>() == score.stdev);
  CHECK(parsed["ci95_half_width"].get<double>() == score.ci95_half_width);
  CHECK(parsed["iterations"].get<std::int64_t>() == 500);
  CHECK(parsed["seed"].get<std::uint64_t>() == 0);
}

TEST_CASE("ranking reports print one record per system") {
  gleu::RankingTable table;
  table.entries = {{"B", 0.75, 1}, {"A", 0.5, 2}};
  std::string tsv = gleu::emit_report(table, gleu::ReportFormat::tsv);
  CHECK(tsv == "1\tB\t0.750000\n2\tA\t0.500000\n");

  gleu::RankingTable unscored;
  unscored.entries = {{"B", std::nullopt, 1}};
  CHECK(gleu::emit_report(unscored, gleu::ReportFormat::tsv) == "1\tB\t-\n");
  nlohmann::json parsed = nlohmann::json::parse(
      gleu::emit_report(unscored, gleu::ReportFormat::json_lines));
  CHECK(parsed["score"].is_null());
}

TEST_CASE("correlation reports carry an optional pearson column") {
  gleu::CorrelationReport report;
  report.spearman_rho = 0.401;
  report.mean_rank_displacement = 38.0 / 13.0;
  CHECK(gleu::emit_report(report, gleu::ReportFormat::tsv) ==
        "-\t0.401000\t2.923077\n");
  report.pearson_r = -0.125;
  CHECK(gleu::emit_report(report, gleu::ReportFormat::tsv) ==
        "-0.125000\t0.401000\t2.923077\n");
  nlohmann::json parsed = nlohmann::json::parse(
      gleu::emit_report(report, gleu::ReportFormat::json_lines));
  CHECK(parsed["pearson_r"].get<double>() == -0.125);
  CHECK(parsed["mean_rank_displacement"].get<double>() == 38.0 / 13.0);
}

}  // TEST_SUITE
