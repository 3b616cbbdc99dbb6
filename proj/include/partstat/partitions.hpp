#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "partstat/exact_count.hpp"
#include "partstat/multiset.hpp"

namespace partstat {

/// A partition of n: a multiset of positive parts whose weight is n.
class Partition {
 public:
  Partition() = default;
  /// Throws Error(invalid_argument) if n < 0 or weight(parts) != n.
  Partition(Multiset parts, std::int64_t n);
  static Partition from_parts(const std::vector<Part>& parts);

  const Multiset& parts() const noexcept { return parts_; }
  std::int64_t n() const noexcept { return n_; }
  std::string to_string() const { return parts_.to_string(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Multiset parts_;
  std::int64_t n_ = 0;
};

/// Lazily enumerates the partitions of n whose parts are all <= max_part,
/// in reverse lexicographic order of the weakly decreasing part sequences:
/// 4 | 3,1 | 2,2 | 2,1,1 | 1,1,1,1.
class PartitionStream {
 public:
  explicit PartitionStream(std::int64_t n) : PartitionStream(n, n) {}
  PartitionStream(std::int64_t n, std::int64_t max_part);

  /// Current part sequence (weakly decreasing), or nullptr when exhausted.
  /// The pointer is invalidated by the next call to advance().
  const std::vector<Part>* current() const noexcept { return done_ ? nullptr : &parts_; }
  void advance();

  std::optional<Partition> next();

 private:
  std::vector<Part> parts_;
  std::int64_t n_;
  bool done_ = false;
  bool started_ = false;
};

PartitionStream enumerate_partitions(std::int64_t n);

/// Visits every partition of n as a weakly decreasing part sequence, in
/// canonical order.
void for_each_partition(std::int64_t n, const std::function<void(const std::vector<Part>&)>& fn);

/// p(n) by the pentagonal-number recurrence; p(0) = 1 and p(n) = 0 for n < 0.
/// The memo table is shared across threads.
ExactCount count_partitions(std::int64_t n);

/// Number of partitions of n containing `pattern`, i.e. p(n - weight(pattern)).
ExactCount count_containing(std::int64_t n, const Multiset& pattern);

}  // namespace partstat
