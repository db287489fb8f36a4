// Context identities for word occurrences: dependency triples or blanked
// n-gram frames, plus the interning table that assigns them dense ids.

#ifndef CBX_CONTEXT_HPP_
#define CBX_CONTEXT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cbx/types.hpp"

namespace cbx {

enum class ContextScheme : std::uint8_t { Dep = 0, Ngram = 1 };

// Marks a sentence boundary in n-gram frames. Corpus tokens are
// lowercased, so the uppercase S cannot collide with a real surface.
inline constexpr std::string_view kBoundaryMark = "<S>";

// DEP parts are [deprel, head-surface, head-upos]; NGRAM parts are the
// window words left of the target followed by those right of it (two
// parts at the default window of 1), with the target slot blanked.
struct ContextKey {
  ContextScheme scheme = ContextScheme::Dep;
  std::vector<std::string> parts;

  // Serialized form used by the index file: scheme tag and parts joined
  // by the unit separator, e.g. "DEP\x1Fattr\x1Fis\x1FAUX".
  std::string canonical() const;
  static ContextKey from_canonical(std::string_view canon);

  bool operator==(const ContextKey&) const = default;
};

// Context of a token occurrence: its deprel, the head's surface and the
// head's UPOS. The root token has no context.
std::optional<ContextKey> dependency_context(const Sentence& sentence,
                                             std::size_t index);

// Blanked n-gram frame around a token; boundary slots are kBoundaryMark.
ContextKey ngram_context(const Sentence& sentence, std::size_t index,
                         std::size_t window = 1);

// Bijective ContextKey <-> id mapping with dense ids from 0. Keys are
// stored in canonical form.
class ContextTable {
 public:
  ContextId intern(const ContextKey& key);
  ContextId intern_canonical(std::string canon);

  std::optional<ContextId> find(const ContextKey& key) const;
  std::optional<ContextId> find_canonical(std::string_view canon) const;

  const std::string& canonical(ContextId id) const;
  ContextKey key(ContextId id) const;

  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  const std::vector<std::string>& canonical_keys() const { return keys_; }

 private:
  std::vector<std::string> keys_;
  std::unordered_map<std::string, ContextId> ids_;
};

}  // namespace cbx

#endif  // CBX_CONTEXT_HPP_
