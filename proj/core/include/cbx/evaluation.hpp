// Evaluation protocol: accuracy over annotated test items, rho sweep,
// Fleiss' kappa agreement and the Wu-Palmer baseline comparison.

#ifndef CBX_EVALUATION_HPP_
#define CBX_EVALUATION_HPP_

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cbx/disambiguate.hpp"
#include "cbx/index.hpp"
#include "cbx/taxonomy.hpp"

namespace cbx {

// One annotated test item: a compound, one constituent, the candidate
// synonyms and the subset the annotator marked applicable.
struct TestItem {
  std::string compound;
  std::string constituent;
  std::vector<std::string> synonyms;    // >= 2
  std::vector<std::string> applicable;  // nonempty subset of synonyms
};

// JSON-lines, one object per line with fields compound, constituent,
// synonyms, applicable. Invariant violations raise ParseError naming
// the item and the violated rule.
std::vector<TestItem> load_test_items(std::istream& in);

struct ItemRecord {
  std::string compound;
  std::string constituent;
  std::string chosen;  // empty when skipped
  bool correct = false;
  bool no_signal = false;
  bool skipped = false;
  std::string skip_reason;
};

struct EvaluationReport {
  double rho = 0.0;
  bool include_constituent = true;
  std::vector<ItemRecord> items;
  std::size_t evaluated = 0;
  std::size_t correct = 0;
  std::size_t skipped = 0;
  double accuracy = 0.0;  // correct / evaluated
  // Absent when the agreement marginals are degenerate.
  std::optional<double> kappa;

  std::string to_json() const;
  static EvaluationReport from_json(std::string_view text);
  // Aligned-column rendering for terminals.
  std::string to_text() const;
};

// Runs disambiguate per item with the item's synonyms as candidates;
// an item is correct when the chosen synonym is in its applicable set.
// Items with out-of-vocabulary terms are skipped with a reason.
// threads = 0 uses hardware concurrency.
EvaluationReport evaluate(const ApmiIndex& index, std::span<const TestItem> items,
                          double rho, bool include_constituent,
                          unsigned threads = 1);

struct SweepRow {
  double rho = 0.0;
  double accuracy = 0.0;
};

// The paper's sweep grid.
inline constexpr std::array<double, 7> kDefaultRhoGrid = {1.0, 1.5, 2.5, 3.0,
                                                          3.5, 4.0, 5.0};

std::vector<SweepRow> rho_sweep(const ApmiIndex& index,
                                std::span<const TestItem> items,
                                std::span<const double> rhos,
                                bool include_constituent = true,
                                unsigned threads = 1);

// Fleiss (1973) kappa over subjects x category-count rows; every row
// must sum to the rater count. Perfect agreement on a single category
// is reported as 1; other degenerate marginals raise UsageError.
double fleiss_kappa(std::span<const std::vector<std::uint32_t>> subjects,
                    std::uint32_t raters);

// Agreement between annotator and algorithm with one subject per
// (item, synonym) pair and two raters: annotator = applicable yes/no,
// algorithm = chosen yes/no.
std::optional<double> report_kappa(std::span<const TestItem> items,
                                   std::span<const ItemRecord> records);

EvaluationReport evaluate_baseline(const Taxonomy& taxonomy,
                                   std::span<const TestItem> items);

}  // namespace cbx

#endif  // CBX_EVALUATION_HPP_
