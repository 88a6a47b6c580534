#ifndef IBA_STATS_HPP_
#define IBA_STATS_HPP_

#include <optional>
#include <vector>

namespace iba {

struct Correlation {
  double value = 0.0;
  // Set when either input had zero variance; value is then reported as 0.
  bool degenerate = false;
};

Correlation pearson(const std::vector<double>& a, const std::vector<double>& b);

// Spearman rank correlation with average ranks for ties.
Correlation spearman(const std::vector<double>& a,
                     const std::vector<double>& b);

// Area under the ROC curve via the rank statistic, ties handled by average
// ranks. Returns nullopt when labels are single-class.
std::optional<double> auroc(const std::vector<double>& scores,
                            const std::vector<int>& labels);

// Average precision (step-wise interpolation over descending score order).
std::optional<double> average_precision(const std::vector<double>& scores,
                                        const std::vector<int>& labels);

// Trapezoidal integral of y over x.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

// Average ranks (1-based, ties averaged).
std::vector<double> average_ranks(const std::vector<double>& v);

}  // namespace iba

#endif  // IBA_STATS_HPP_
