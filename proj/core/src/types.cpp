#include "cbx/types.hpp"

#include <algorithm>
#include <limits>

#include "cbx/errors.hpp"

namespace cbx {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

namespace {

std::size_t count_parts(std::string_view term) {
  std::size_t parts = 1;
  for (char ch : term) {
    if (ch == ' ' || ch == '-') ++parts;
  }
  return parts;
}

bool is_multiword(std::string_view term) {
  return term.find(' ') != std::string_view::npos ||
         term.find('-') != std::string_view::npos;
}

}  // namespace

WordId Vocabulary::add(std::string_view term) {
  auto it = ids_.find(std::string(term));
  if (it != ids_.end()) return it->second;
  if (terms_.size() > std::numeric_limits<WordId>::max()) {
    throw UsageError("vocabulary exceeds 32-bit id space");
  }
  WordId id = static_cast<WordId>(terms_.size());
  terms_.emplace_back(term);
  ids_.emplace(terms_.back(), id);
  if (is_multiword(term)) {
    multiword_.insert(terms_.back());
    max_multiword_parts_ = std::max(max_multiword_parts_, count_parts(term));
  }
  return id;
}

std::optional<WordId> Vocabulary::find(std::string_view term) const {
  auto it = ids_.find(std::string(term));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocabulary::term(WordId id) const {
  if (id >= terms_.size()) throw UsageError("word id out of range");
  return terms_[id];
}

}  // namespace cbx
