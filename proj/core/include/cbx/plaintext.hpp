// Whitespace tokenizer for plain-text corpora used with n-gram contexts.

#ifndef CBX_PLAINTEXT_HPP_
#define CBX_PLAINTEXT_HPP_

#include <string_view>
#include <vector>

#include "cbx/types.hpp"

namespace cbx {

// Splits on sentence-final punctuation (. ! ?), then on whitespace.
// Tokens are lowercased and trailing punctuation is stripped. The
// resulting tokens carry placeholder syntax: a flat tree rooted at the
// first token, which n-gram context extraction never looks at.
std::vector<Sentence> tokenize_plain(std::string_view text);

}  // namespace cbx

#endif  // CBX_PLAINTEXT_HPP_
