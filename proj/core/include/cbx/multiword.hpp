// Gazetteer-style merging of multiword vocabulary entries.

#ifndef CBX_MULTIWORD_HPP_
#define CBX_MULTIWORD_HPP_

#include "cbx/types.hpp"

namespace cbx {

// Greedy leftmost-longest merge of contiguous token runs whose joined
// surfaces (space- or hyphen-joined, standalone "-" tokens fusing their
// neighbours) match a multiword vocabulary term. The merged token takes
// the matched term as surface and the head/deprel/upos of the run's
// syntactic head; head links of the remaining tokens are remapped.
// Idempotent: a second application is the identity.
Sentence merge_multiword(const Sentence& sentence, const Vocabulary& vocab);

}  // namespace cbx

#endif  // CBX_MULTIWORD_HPP_
