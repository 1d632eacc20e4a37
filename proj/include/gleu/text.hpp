#ifndef GLEU_TEXT_HPP
#define GLEU_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gleu {

/// A tokenized sentence. Tokens are the maximal non-whitespace runs of the
/// input line, so no token ever contains whitespace and joining with single
/// spaces round-trips through tokenize().
using Sentence = std::vector<std::string>;

/// Whitespace-split a single line into tokens. ASCII letters are folded to
/// lowercase when `lowercase` is set; multi-byte UTF-8 sequences pass through
/// unchanged. Empty or all-whitespace input yields an empty sentence.
Sentence tokenize(std::string_view raw_line, bool lowercase = false);

/// Join tokens with single spaces (inverse of tokenize for its own output).
std::string join_tokens(const Sentence& sentence);

/// Multiset of the n-grams of one sentence. Keys are the window tokens joined
/// with single spaces, which is unambiguous because tokens are whitespace-free.
class NGramCounts {
 public:
  using Map = std::unordered_map<std::string, std::int64_t>;

  NGramCounts() = default;
  explicit NGramCounts(int order);

  int order() const { return order_; }
  const Map& counts() const { return counts_; }

  /// Occurrences of one n-gram (0 when absent).
  std::int64_t count(const std::string& ngram) const;

  /// Sum of all stored counts (= number of n-gram windows in the sentence).
  std::int64_t total() const { return total_; }

  void increment(const std::string& ngram, std::int64_t by = 1);

 private:
  int order_ = 1;
  Map counts_;
  std::int64_t total_ = 0;
};

/// Count every contiguous length-n token window of `sentence`. Sentences
/// shorter than n yield an empty multiset. Throws std::invalid_argument for
/// n < 1.
NGramCounts extract_ngrams(const Sentence& sentence, int n);

/// Per-key minimum of two same-order multisets; keys absent from either side
/// are absent from the result. Throws std::invalid_argument on order mismatch.
NGramCounts clipped_count(const NGramCounts& a, const NGramCounts& b);

}  // namespace gleu

#endif  // GLEU_TEXT_HPP
