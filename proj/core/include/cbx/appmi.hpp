// PMI and the asymmetric positive PMI stored in the incidence matrices.

#ifndef CBX_APPMI_HPP_
#define CBX_APPMI_HPP_

#include <cstdint>
#include <optional>

#include "cbx/counts.hpp"

namespace cbx {

enum class LogBase : std::uint8_t { Natural = 0, Base2 = 1, Base10 = 2 };

double log_in(LogBase base, double x);

struct ApmiConfig {
  double k = 5.0;  // shift; >= 0
  Estimator estimator = Estimator::Conditional;
  LogBase log_base = LogBase::Natural;
};

// log(P(w,c) / (P(w) P(c))). Undefined (nullopt) when the pair was never
// seen; throws UsageError when either marginal is zero.
std::optional<double> pmi(const CooccurrenceCounts& counts,
                          const ApmiConfig& config, WordId w, ContextId c);

// max(0, PMI(w,c) + log(P(w,c)/P(w)) + k); 0 for unseen pairs. The value
// stored at M_vc[c,w].
double appmi_wc(const CooccurrenceCounts& counts, const ApmiConfig& config,
                WordId w, ContextId c);

// Reverse direction, dividing by P(c) in the second log term:
// max(0, PMI(w,c) + log(P(w,c)/P(c)) + k). Stored at M_cv[w,c].
double appmi_cw(const CooccurrenceCounts& counts, const ApmiConfig& config,
                WordId w, ContextId c);

}  // namespace cbx

#endif  // CBX_APPMI_HPP_
