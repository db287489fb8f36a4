// The APPMI incidence index: vocabulary, contexts, the two sparse
// matrices, and its construction and binary persistence.

#ifndef CBX_INDEX_HPP_
#define CBX_INDEX_HPP_

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <utility>

#include "cbx/appmi.hpp"
#include "cbx/context.hpp"
#include "cbx/counts.hpp"
#include "cbx/csr.hpp"
#include "cbx/types.hpp"

namespace cbx {

// Immutable after construction; concurrent readers are safe.
struct ApmiIndex {
  Vocabulary vocabulary;
  ContextTable contexts;
  // rows = contexts, cols = words, value = APPMI(w,c)
  CsrMatrix m_vc;
  // rows = words, cols = contexts, value = APPMI(c,w)
  CsrMatrix m_cv;
  ApmiConfig config;
};

struct IndexBuildOptions {
  ContextScheme scheme = ContextScheme::Dep;
  std::size_t ngram_window = 1;
  ApmiConfig apmi;
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Counts one co-occurrence event per context of every occurrence of a
// vocabulary word. Multiword vocabulary entries are merged first.
// Context ids follow first occurrence in corpus order regardless of the
// thread count.
std::pair<CooccurrenceCounts, ContextTable> count_cooccurrences(
    std::span<const Sentence> sentences, const Vocabulary& vocab,
    const IndexBuildOptions& options);

// Computes both matrices from counts, storing strictly positive APPMI
// values only.
ApmiIndex index_from_counts(const CooccurrenceCounts& counts, Vocabulary vocab,
                            ContextTable contexts, const ApmiConfig& config);

ApmiIndex build_index(std::span<const Sentence> sentences,
                      const Vocabulary& vocab, const IndexBuildOptions& options);

// Binary, little-endian: "CBIX" magic, format version, config block,
// vocabulary and context tables, then the two CSR blocks.
void save_index(const ApmiIndex& index, std::ostream& out);
void save_index(const ApmiIndex& index, const std::filesystem::path& path);

ApmiIndex load_index(std::istream& in);
ApmiIndex load_index(const std::filesystem::path& path);

}  // namespace cbx

#endif  // CBX_INDEX_HPP_
