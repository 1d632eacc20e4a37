#include "gleu/text.hpp"

#include <cctype>
#include <stdexcept>

namespace gleu {

namespace {

inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline char fold(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

Sentence tokenize(std::string_view raw_line, bool lowercase) {
  Sentence tokens;
  std::size_t i = 0;
  const std::size_t n = raw_line.size();
  while (i < n) {
    while (i < n && is_space(raw_line[i])) ++i;
    std::size_t start = i;
    while (i < n && !is_space(raw_line[i])) ++i;
    if (i > start) {
      std::string tok(raw_line.substr(start, i - start));
      if (lowercase) {
        for (char& c : tok) c = fold(c);
      }
      tokens.push_back(std::move(tok));
    }
  }
  return tokens;
}

std::string join_tokens(const Sentence& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (i > 0) out += ' ';
    out += sentence[i];
  }
  return out;
}

NGramCounts::NGramCounts(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
}

std::int64_t NGramCounts::count(const std::string& ngram) const {
  auto it = counts_.find(ngram);
  return it == counts_.end() ? 0 : it->second;
}

void NGramCounts::increment(const std::string& ngram, std::int64_t by) {
  counts_[ngram] += by;
  total_ += by;
}

NGramCounts extract_ngrams(const Sentence& sentence, int n) {
  NGramCounts result(n);
  if (sentence.size() < static_cast<std::size_t>(n)) return result;
  const std::size_t windows = sentence.size() - static_cast<std::size_t>(n) + 1;
  std::string key;
  for (std::size_t i = 0; i < windows; ++i) {
    key.clear();
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      if (j > 0) key += ' ';
      key += sentence[i + j];
    }
    result.increment(key);
  }
  return result;
}

NGramCounts clipped_count(const NGramCounts& a, const NGramCounts& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("clipped_count: n-gram order mismatch");
  NGramCounts result(a.order());
  // Iterate the smaller map; absent keys clip to zero either way.
  const NGramCounts& small = a.counts().size() <= b.counts().size() ? a : b;
  const NGramCounts& large = &small == &a ? b : a;
  for (const auto& [ngram, cnt] : small.counts()) {
    std::int64_t other = large.count(ngram);
    std::int64_t clipped = cnt < other ? cnt : other;
    if (clipped > 0) result.increment(ngram, clipped);
  }
  return result;
}

}  // namespace gleu
