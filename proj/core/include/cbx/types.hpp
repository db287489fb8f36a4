// Core domain types: tokens, sentences and the interned vocabulary.

#ifndef CBX_TYPES_HPP_
#define CBX_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cbx {

using WordId = std::uint32_t;
using ContextId = std::uint32_t;

// ASCII-only lowercasing; multi-byte UTF-8 sequences pass through unchanged.
std::string lowercase(std::string_view s);

// One token of a dependency-annotated sentence. The head is a 0-based
// index into the owning sentence; the root points at itself.
struct Token {
  std::string surface;  // lowercased form
  std::string upos;
  std::size_t head = 0;
  std::string deprel;
};

struct Sentence {
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  bool is_root(std::size_t i) const { return tokens[i].head == i; }
};

// Bijective term <-> id mapping with dense ids starting at 0. Terms that
// contain internal spaces or hyphens form the multiword set used by the
// ingest-time merger.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Interns a term, returning the existing id when already present.
  WordId add(std::string_view term);

  std::optional<WordId> find(std::string_view term) const;
  bool contains(std::string_view term) const { return find(term).has_value(); }

  const std::string& term(WordId id) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<std::string>& terms() const { return terms_; }

  const std::unordered_set<std::string>& multiword_terms() const {
    return multiword_;
  }
  bool has_multiword() const { return !multiword_.empty(); }
  // Longest multiword term, measured in separator-delimited parts.
  std::size_t max_multiword_parts() const { return max_multiword_parts_; }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, WordId> ids_;
  std::unordered_set<std::string> multiword_;
  std::size_t max_multiword_parts_ = 0;
};

}  // namespace cbx

#endif  // CBX_TYPES_HPP_
