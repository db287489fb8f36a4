// Word-context co-occurrence counts and the probability estimators
// derived from them.

#ifndef CBX_COUNTS_HPP_
#define CBX_COUNTS_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cbx/types.hpp"

namespace cbx {

enum class Estimator : std::uint8_t {
  // P(w,c) = pair / total_pairs.
  Joint = 0,
  // P(w,c) = pair / context_count(c), the worked-example convention.
  Conditional = 1,
};

struct Probabilities {
  double p_word = 0.0;
  double p_context = 0.0;
  double p_joint = 0.0;  // per the chosen estimator
};

// Invariants maintained by accumulate/merge_from:
//   sum of pair_count == total_pairs
//   word_count[w]    == sum over c of pair_count(w,c)
//   context_count[c] == sum over w of pair_count(w,c)
struct CooccurrenceCounts {
  std::unordered_map<std::uint64_t, std::uint64_t> pair_count;  // packed key
  std::vector<std::uint64_t> word_count;                        // by word id
  std::vector<std::uint64_t> context_count;                     // by context id
  std::uint64_t total_pairs = 0;

  static std::uint64_t pack(WordId w, ContextId c) {
    return (static_cast<std::uint64_t>(w) << 32) | c;
  }

  void accumulate(WordId w, ContextId c, std::uint64_t n = 1);

  std::uint64_t pairs(WordId w, ContextId c) const;
  std::uint64_t words(WordId w) const {
    return w < word_count.size() ? word_count[w] : 0;
  }
  std::uint64_t contexts(ContextId c) const {
    return c < context_count.size() ? context_count[c] : 0;
  }

  // Associative merge; word ids must already agree between the two.
  void merge_from(const CooccurrenceCounts& other);
  // Same, translating the other side's context ids through ctx_map.
  void merge_from(const CooccurrenceCounts& other,
                  std::span<const ContextId> ctx_map);
};

// P(w), P(c) and P(w,c) under the given estimator. Throws UsageError
// when total_pairs is zero.
Probabilities probability(const CooccurrenceCounts& counts, Estimator estimator,
                          WordId w, ContextId c);

}  // namespace cbx

#endif  // CBX_COUNTS_HPP_
