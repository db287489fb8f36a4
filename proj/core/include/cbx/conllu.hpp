// CoNLL-U reader and writer for dependency-annotated corpora.
//
// Only the ID, FORM, UPOS, HEAD and DEPREL columns are retained; FORM is
// lowercased into Token::surface. Multi-word token ranges ("3-4") and
// empty nodes ("5.1") are skipped.

#ifndef CBX_CONLLU_HPP_
#define CBX_CONLLU_HPP_

#include <istream>
#include <ostream>
#include <vector>

#include "cbx/types.hpp"

namespace cbx {

// Parses a UTF-8 CoNLL-U stream: 10 tab-separated columns, '#' comment
// lines, blank-line sentence breaks. Throws ParseError for malformed
// lines (naming the line number) and StructuralError for head indices
// out of range, missing/duplicate roots or cyclic head links.
std::vector<Sentence> parse_conllu(std::istream& in);

// Writes the retained columns back out; the other columns are "_".
// parse_conllu(write_conllu(s)) round-trips.
void write_conllu(std::ostream& out, const std::vector<Sentence>& sentences);

}  // namespace cbx

#endif  // CBX_CONLLU_HPP_
