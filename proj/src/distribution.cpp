#include "partstat/distribution.hpp"

#include <algorithm>
#include <mutex>

#include "partstat/error.hpp"
#include "partstat/parallel.hpp"

namespace partstat {

DistributionTable::DistributionTable(std::int64_t n, std::map<std::int64_t, ExactCount> counts,
                                     ExactCount total)
    : n_(n), total_(std::move(total)) {
  ExactCount sum;
  for (auto& [j, c] : counts) {
    if (j < 0) throw Error(ErrorCode::invariant, "negative statistic value " + std::to_string(j));
    if (c.is_zero()) continue;
    sum += c;
    counts_.emplace(j, std::move(c));
  }
  if (sum != total_) {
    throw Error(ErrorCode::invariant, "distribution counts sum to " + sum.to_string() +
                                          " but total is " + total_.to_string());
  }
}

ExactCount marginal(const DistributionTable& table, std::int64_t j) {
  auto it = table.counts().find(j);
  return it == table.counts().end() ? ExactCount{} : it->second;
}

DistributionTable distribution_bruteforce(const Statistic& stat, std::int64_t n, unsigned threads) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "distribution needs n >= 0");
  const BoundStatistic eval = stat.bind(n);
  // A 64-bit tally cannot wrap: it would take 2^64 enumeration steps.
  std::map<std::int64_t, std::uint64_t> tally;
  std::mutex merge_mutex;

  auto record = [](std::map<std::int64_t, std::uint64_t>& local, std::int64_t value) {
    if (value < 0) {
      throw Error(ErrorCode::invariant, "statistic returned negative value " + std::to_string(value));
    }
    ++local[value];
  };

  if (n == 0) {
    record(tally, eval(Multiset{}));
  } else {
    // Work item k: partitions whose largest part is k + 1.
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t k) {
      const auto largest = static_cast<Part>(k) + 1;
      std::map<std::int64_t, std::uint64_t> local;
      std::vector<Part> parts;
      for (PartitionStream rest(n - largest, largest); rest.current() != nullptr; rest.advance()) {
        parts.assign(1, largest);
        parts.insert(parts.end(), rest.current()->begin(), rest.current()->end());
        record(local, eval(Multiset::from_parts(parts)));
      }
      std::lock_guard lock(merge_mutex);
      for (const auto& [j, c] : local) tally[j] += c;
    });
  }

  std::map<std::int64_t, ExactCount> counts;
  for (const auto& [j, c] : tally) counts.emplace(j, ExactCount(c));
  return DistributionTable(n, std::move(counts), count_partitions(n));
}

std::optional<Divergence> first_difference(const DistributionTable& x, const DistributionTable& y) {
  std::optional<std::int64_t> first;
  for (const auto* t : {&x, &y}) {
    for (const auto& [j, c] : t->counts()) {
      if (marginal(x, j) != marginal(y, j)) {
        first = first ? std::min(*first, j) : j;
        break;
      }
    }
  }
  if (!first) return std::nullopt;
  return Divergence{*first, marginal(x, *first), marginal(y, *first)};
}

bool ComparisonReport::all_identical() const {
  return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.identical(); });
}

const ComparisonRow* ComparisonReport::first_divergence() const {
  for (const auto& r : rows) {
    if (!r.identical()) return &r;
  }
  return nullptr;
}

ComparisonReport compare(const Statistic& x, const Statistic& y, std::int64_t n_from,
                         std::int64_t n_to, unsigned threads) {
  if (n_from < 0 || n_from > n_to) {
    throw Error(ErrorCode::invalid_argument, "compare needs 0 <= n_from <= n_to");
  }
  ComparisonReport report{x.label(), y.label(), n_from, n_to, {}};
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    ComparisonRow row{n, distribution_bruteforce(x, n, threads),
                      distribution_bruteforce(y, n, threads), std::nullopt};
    row.divergence = first_difference(row.x, row.y);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace partstat
