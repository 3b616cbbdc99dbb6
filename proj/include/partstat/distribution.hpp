#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partstat/exact_count.hpp"
#include "partstat/statistics.hpp"

namespace partstat {

/// counts[j] = #{pi in P(n) : X(pi) = j}; zero counts are never stored.
/// Prob_n(X = j) is the exact rational counts[j] / total.
class DistributionTable {
 public:
  DistributionTable() = default;
  /// Drops zero counts. Throws Error(invariant) if the counts do not sum to
  /// total or a key is negative.
  DistributionTable(std::int64_t n, std::map<std::int64_t, ExactCount> counts, ExactCount total);

  std::int64_t n() const noexcept { return n_; }
  const std::map<std::int64_t, ExactCount>& counts() const noexcept { return counts_; }
  const ExactCount& total() const noexcept { return total_; }

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;

 private:
  std::int64_t n_ = 0;
  std::map<std::int64_t, ExactCount> counts_;
  ExactCount total_;
};

/// counts[j], or 0 when absent.
ExactCount marginal(const DistributionTable& table, std::int64_t j);

/// Full enumeration of P(n). With threads > 1 the partitions are split by
/// largest part; the result is identical to the sequential run.
DistributionTable distribution_bruteforce(const Statistic& stat, std::int64_t n,
                                          unsigned threads = 1);

struct Divergence {
  std::int64_t j = 0;
  ExactCount x_count;
  ExactCount y_count;
};

struct ComparisonRow {
  std::int64_t n = 0;
  DistributionTable x;
  DistributionTable y;
  std::optional<Divergence> divergence;  // empty when identical

  bool identical() const noexcept { return !divergence.has_value(); }
};

struct ComparisonReport {
  std::string x_label;
  std::string y_label;
  std::int64_t n_from = 0;
  std::int64_t n_to = 0;
  std::vector<ComparisonRow> rows;

  bool all_identical() const;
  /// First divergent row, if any.
  const ComparisonRow* first_divergence() const;
};

/// Smallest j at which the two tables differ, if any.
std::optional<Divergence> first_difference(const DistributionTable& x, const DistributionTable& y);

/// Throws Error(invalid_argument) unless 0 <= n_from <= n_to.
ComparisonReport compare(const Statistic& x, const Statistic& y, std::int64_t n_from,
                         std::int64_t n_to, unsigned threads = 1);

}  // namespace partstat
