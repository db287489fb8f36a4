// Hypernym taxonomy and Wu-Palmer similarity for the baseline ranker.

#ifndef CBX_TAXONOMY_HPP_
#define CBX_TAXONOMY_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cbx/types.hpp"

namespace cbx {

// Acyclic multi-parent sense graph plus a term -> senses lexicon.
// File format: "N\t<child-sense>\t<parent-sense>" edges and
// "L\t<term>\t<sense>" lexicon entries; lexicon lines introduce their
// sense as a node when it was not seen before.
class Taxonomy {
 public:
  static Taxonomy load(std::istream& in);

  void add_edge(std::string_view child, std::string_view parent);
  void add_sense(std::string_view term, std::string_view sense);

  // Validates acyclicity and computes depths; called by load. Throws
  // StructuralError on a cycle.
  void finalize();

  bool has_node(std::string_view sense) const;
  std::size_t node_count() const { return names_.size(); }

  // 1 + length of the shortest parent path to any root; roots have
  // depth 1. Throws UsageError for unknown nodes.
  unsigned depth(std::string_view sense) const;

  // 2 * depth(lcs) / (depth(a) + depth(b)) with the lcs the deepest
  // common ancestor (a node is its own ancestor); 0 without one.
  double wup_similarity(std::string_view a, std::string_view b) const;

  const std::vector<std::string>* senses(std::string_view term) const;

 private:
  using NodeId = std::uint32_t;

  NodeId intern(std::string_view sense);
  std::vector<bool> ancestors(NodeId node) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::vector<NodeId>> parents_;
  std::vector<unsigned> depth_;  // filled by finalize
  std::unordered_map<std::string, std::vector<std::string>> lexicon_;
  bool finalized_ = false;
};

struct BaselineAnswer {
  std::string chosen;
  double score = 0.0;
};

// Word-level similarity is the maximum Wu-Palmer similarity over all
// (compound sense, synonym sense) pairs; the best synonym wins, ties
// broken lexicographically. Throws UsageError for terms missing from
// the lexicon or fewer than two synonyms.
BaselineAnswer baseline_disambiguate(const Taxonomy& taxonomy,
                                     const std::string& compound,
                                     std::span<const std::string> synonyms);

}  // namespace cbx

#endif  // CBX_TAXONOMY_HPP_
