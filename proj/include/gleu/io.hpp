#ifndef GLEU_IO_HPP
#define GLEU_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gleu/ranking.hpp"
#include "gleu/sampler.hpp"

namespace gleu {

/// Read a UTF-8 text file into one string per line. The final newline is
/// optional; every other line boundary is significant (interior empty lines
/// are empty sentences). Unreadable files and invalid UTF-8 throw
/// std::runtime_error naming the path (and line, for encoding errors).
std::vector<std::string> read_lines(const std::string& path);

/// The file layout of a multi-system evaluation: one source file, one file
/// per system output, one file per reference set, all line-aligned.
struct ParallelCorpusFiles {
  std::string source_path;
  std::vector<std::string> hypothesis_paths;
  std::vector<std::string> reference_paths;
  std::optional<std::string> human_ranking_path;
};

struct LoadedParallelCorpus {
  std::vector<std::string> source_lines;
  std::vector<std::vector<std::string>> hypothesis_lines;  // per system
  std::vector<std::vector<std::string>> reference_lines;   // per annotator
  std::optional<RankingTable> human_ranking;
};

/// Load every file and enforce strict line-count equality; a mismatch throws
/// std::runtime_error naming the file and both counts.
LoadedParallelCorpus load_parallel_corpus(const ParallelCorpusFiles& files);

/// Load a ranking file: one system id per line, best first, with an optional
/// tab-separated score column (all lines or none). With scores, ranks come
/// from rank_systems; without, from line order. Duplicate ids, empty files
/// and malformed lines throw std::runtime_error.
RankingTable load_ranking(const std::string& path);

/// Load a "id<TAB>score" file, preserving line order. Duplicate ids and
/// malformed lines throw std::runtime_error.
std::vector<std::pair<std::string, double>> load_scores(
    const std::string& path);

enum class ReportFormat { tsv, json_lines };

/// Render a report. TSV prints one tab-separated record per line with reals
/// at 6 decimal places; json-lines prints one object per line with
/// snake_case keys and full-precision numbers. Both are byte-stable across
/// runs and platforms. Column orders:
///   CorpusScore:        mean, stdev, ci95_half_width, iterations, seed
///   RankingTable:       rank, system, score ("-" / null when unscored)
///   CorrelationReport:  pearson_r ("-" / null when unavailable),
///                       spearman_rho, mean_rank_displacement
std::string emit_report(const CorpusScore& score, ReportFormat format);
std::string emit_report(const RankingTable& table, ReportFormat format);
std::string emit_report(const CorrelationReport& report, ReportFormat format);

}  // namespace gleu

#endif  // GLEU_IO_HPP
