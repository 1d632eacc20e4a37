#include "gleu/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gleu {

namespace {

// Strict UTF-8 check (rejects overlongs, surrogates, > U+10FFFF). Returns
// the 1-based line of the first bad byte, or 0 when the text is valid.
std::size_t first_invalid_utf8_line(const std::string& text) {
  std::size_t line = 1;
  std::size_t i = 0;
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  while (i < text.size()) {
    unsigned char b = byte(i);
    if (b == '\n') ++line;
    std::size_t len;
    unsigned cp_min;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp_min = 0x80;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp_min = 0x800;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp_min = 0x10000;
    } else {
      return line;
    }
    if (i + len > text.size()) return line;
    unsigned cp = b & (0xFF >> (len + 1));
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char c = byte(i + k);
      if ((c & 0xC0) != 0x80) return line;
      cp = (cp << 6) | (c & 0x3F);
    }
    if (cp < cp_min) return line;                  // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) return line; // surrogate
    if (cp > 0x10FFFF) return line;
    i += len;
  }
  return 0;
}

std::string format_fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

double parse_double(const std::string& text, const std::string& path,
                    std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::runtime_error(path + ":" + std::to_string(line_no) +
                             ": cannot parse score '" + text + "'");
  return value;
}

}  // namespace

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read file: " + path);
  std::string text = std::move(buffer).str();

  if (std::size_t bad_line = first_invalid_utf8_line(text); bad_line != 0)
    throw std::runtime_error(path + ":" + std::to_string(bad_line) +
                             ": invalid UTF-8");

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

LoadedParallelCorpus load_parallel_corpus(const ParallelCorpusFiles& files) {
  LoadedParallelCorpus corpus;
  corpus.source_lines = read_lines(files.source_path);
  const std::size_t expected = corpus.source_lines.size();
  auto check = [&](const std::string& path, std::size_t got) {
    if (got != expected)
      throw std::runtime_error("line-count mismatch: " + files.source_path +
                               " has " + std::to_string(expected) +
                               " lines, " + path + " has " +
                               std::to_string(got));
  };
  for (const std::string& path : files.hypothesis_paths) {
    corpus.hypothesis_lines.push_back(read_lines(path));
    check(path, corpus.hypothesis_lines.back().size());
  }
  for (const std::string& path : files.reference_paths) {
    corpus.reference_lines.push_back(read_lines(path));
    check(path, corpus.reference_lines.back().size());
  }
  if (files.human_ranking_path)
    corpus.human_ranking = load_ranking(*files.human_ranking_path);
  return corpus;
}

RankingTable load_ranking(const std::string& path) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw std::runtime_error("empty ranking file: " + path);

  std::vector<std::pair<std::string, double>> scored;
  RankingTable ordered;
  std::set<std::string> seen;
  bool has_scores = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::size_t tab = line.find('\t');
    std::string id = tab == std::string::npos ? line : line.substr(0, tab);
    if (id.empty())
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": empty system id");
    if (!seen.insert(id).second)
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": duplicate system id '" + id + "'");
    if (tab != std::string::npos) {
      std::string rest = line.substr(tab + 1);
      if (rest.find('\t') != std::string::npos)
        throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                                 ": expected 'id' or 'id<TAB>score'");
      if (i == 0) has_scores = true;
      if (!has_scores)
        throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                                 ": score column on some lines only");
      scored.emplace_back(id, parse_double(rest, path, i + 1));
    } else {
      if (has_scores)
        throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                                 ": score column on some lines only");
      ordered.entries.push_back({id, std::nullopt, static_cast<int>(i) + 1});
    }
  }
  return has_scores ? rank_systems(scored) : ordered;
}

std::vector<std::pair<std::string, double>> load_scores(
    const std::string& path) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw std::runtime_error("empty scores file: " + path);
  std::vector<std::pair<std::string, double>> scores;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t tab = lines[i].find('\t');
    if (tab == std::string::npos || lines[i].find('\t', tab + 1) != std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": expected 'id<TAB>score'");
    std::string id = lines[i].substr(0, tab);
    if (id.empty())
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": empty system id");
    if (!seen.insert(id).second)
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": duplicate system id '" + id + "'");
    scores.emplace_back(id, parse_double(lines[i].substr(tab + 1), path, i + 1));
  }
  return scores;
}

std::string emit_report(const CorpusScore& score, ReportFormat format) {
  if (format == ReportFormat::tsv) {
    return format_fixed(score.mean) + "\t" + format_fixed(score.stdev) + "\t" +
           format_fixed(score.ci95_half_width) + "\t" +
           std::to_string(score.iterations) + "\t" +
           std::to_string(score.seed) + "\n";
  }
  nlohmann::ordered_json record;
  record["mean"] = score.mean;
  record["stdev"] = score.stdev;
  record["ci95_half_width"] = score.ci95_half_width;
  record["iterations"] = score.iterations;
  record["seed"] = score.seed;
  return record.dump() + "\n";
}

std::string emit_report(const RankingTable& table, ReportFormat format) {
  std::string out;
  for (const RankingEntry& e : table.entries) {
    if (format == ReportFormat::tsv) {
      out += std::to_string(e.rank) + "\t" + e.id + "\t" +
             (e.score ? format_fixed(*e.score) : std::string("-")) + "\n";
    } else {
      nlohmann::ordered_json record;
      record["rank"] = e.rank;
      record["system"] = e.id;
      if (e.score)
        record["score"] = *e.score;
      else
        record["score"] = nullptr;
      out += record.dump() + "\n";
    }
  }
  return out;
}

std::string emit_report(const CorrelationReport& report, ReportFormat format) {
  if (format == ReportFormat::tsv) {
    return (report.pearson_r ? format_fixed(*report.pearson_r)
                             : std::string("-")) +
           "\t" + format_fixed(report.spearman_rho) + "\t" +
           format_fixed(report.mean_rank_displacement) + "\n";
  }
  nlohmann::ordered_json record;
  if (report.pearson_r)
    record["pearson_r"] = *report.pearson_r;
  else
    record["pearson_r"] = nullptr;
  record["spearman_rho"] = report.spearman_rho;
  record["mean_rank_displacement"] = report.mean_rank_displacement;
  return record.dump() + "\n";
}

}  // namespace gleu
