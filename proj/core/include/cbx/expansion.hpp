// Set expansion: E = M_cv * diag(f^rho) * M_vc * S, with per-context
// coherence f(c) and mass a(c), plus query-sized index restriction.

#ifndef CBX_EXPANSION_HPP_
#define CBX_EXPANSION_HPP_

#include <optional>
#include <span>
#include <vector>

#include "cbx/index.hpp"

namespace cbx {

struct InputSet {
  std::vector<WordId> words;  // nonempty, deduplicated
};

struct ExpansionParams {
  double rho = 1.0;  // coherence penalty exponent; > 0
  // When present, only these words are scored.
  std::optional<std::vector<WordId>> candidates;
};

struct ContextScore {
  ContextId context = 0;
  double f = 0.0;  // fraction of the input set attested in the context
  double a = 0.0;  // summed APPMI mass of set words in the context
  double s = 0.0;  // f^rho * a
};

struct ScoredWord {
  WordId word = 0;
  double score = 0.0;
};

// Ranked by score descending, ties broken by term string ascending.
// Zero-scored words are retained; callers truncate for display.
struct ExpansionResult {
  std::vector<ScoredWord> ranked;
};

// Fraction of set members with a positive M_vc entry in the context.
double context_fraction(const ApmiIndex& index, const InputSet& set,
                        ContextId context);

// Sum of M_vc values of set members in the context.
double context_mass(const ApmiIndex& index, const InputSet& set,
                    ContextId context);

// Per-context scores for the whole context table.
std::vector<ContextScore> score_contexts(const ApmiIndex& index,
                                         const InputSet& set, double rho);

ExpansionResult expand(const ApmiIndex& index, const InputSet& set,
                       const ExpansionParams& params);

// Sub-index over exactly the given words and the contexts in which any
// of them has a stored entry. Expansion scores of the kept words are
// identical to full-index expansion.
ApmiIndex restrict_index(const ApmiIndex& index, std::span<const WordId> words);

}  // namespace cbx

#endif  // CBX_EXPANSION_HPP_
