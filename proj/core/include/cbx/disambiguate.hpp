// Constituent sense disambiguation: rank a constituent's synonyms by
// relevance to the compound via restricted set expansion.

#ifndef CBX_DISAMBIGUATE_HPP_
#define CBX_DISAMBIGUATE_HPP_

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cbx/expansion.hpp"
#include "cbx/index.hpp"

namespace cbx {

// headword -> synonyms, loaded from TSV ("headword\tsyn(\tsyn)*").
// Lists are deduplicated and never contain the headword itself.
class SynonymLexicon {
 public:
  static SynonymLexicon load(std::istream& in);

  void add(std::string_view headword, std::span<const std::string> synonyms);
  const std::vector<std::string>* find(std::string_view headword) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

struct DisambiguationQuery {
  std::string compound;
  std::string constituent;
  // false runs the constituent-omission ablation: input set = {compound}.
  bool include_constituent = true;
};

struct RankedSynonym {
  std::string term;
  double score = 0.0;
};

struct DisambiguationAnswer {
  std::vector<RankedSynonym> ranked;  // descending; compound/constituent removed
  std::string chosen;                 // ranked.front().term
  // Every candidate scored zero; chosen is then the lexicographically
  // first synonym.
  bool no_signal = false;
};

// Candidates are the given synonyms. Throws UsageError naming any term
// missing from the index vocabulary, or when fewer than two synonyms
// are given.
DisambiguationAnswer disambiguate(const ApmiIndex& index,
                                  const DisambiguationQuery& query,
                                  std::span<const std::string> synonyms,
                                  double rho);

// Synonyms looked up in the lexicon under the constituent.
DisambiguationAnswer disambiguate(const ApmiIndex& index,
                                  const DisambiguationQuery& query,
                                  const SynonymLexicon& lexicon, double rho);

}  // namespace cbx

#endif  // CBX_DISAMBIGUATE_HPP_
