#include "partstat/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "partstat/error.hpp"

namespace partstat {

Partition::Partition(Multiset parts, std::int64_t n) : parts_(std::move(parts)), n_(n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "partition of a negative integer");
  if (weight(parts_) != n) {
    throw Error(ErrorCode::invalid_argument,
                "parts {" + parts_.to_string() + "} do not sum to " + std::to_string(n));
  }
}

Partition Partition::from_parts(const std::vector<Part>& parts) {
  Multiset m = Multiset::from_parts(parts);
  const auto w = weight(m);
  return Partition(std::move(m), w);
}

PartitionStream::PartitionStream(std::int64_t n, std::int64_t max_part) : n_(n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "cannot enumerate partitions of n < 0");
  if (n > 0 && max_part < 1) {
    done_ = true;
    return;
  }
  const Part m = std::min<Part>(max_part, n);
  for (std::int64_t rest = n; rest > 0; rest -= m) parts_.push_back(std::min(m, rest));
}

void PartitionStream::advance() {
  if (done_) return;
  // Strip trailing 1s, decrement the last part above 1, refill greedily.
  std::int64_t freed = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++freed;
  }
  if (parts_.empty()) {
    done_ = true;
    return;
  }
  const Part v = --parts_.back();
  ++freed;
  while (freed > 0) {
    const Part take = std::min(v, freed);
    parts_.push_back(take);
    freed -= take;
  }
}

std::optional<Partition> PartitionStream::next() {
  if (started_) advance();
  started_ = true;
  if (done_) return std::nullopt;
  return Partition(Multiset::from_parts(parts_), n_);
}

PartitionStream enumerate_partitions(std::int64_t n) { return PartitionStream(n); }

void for_each_partition(std::int64_t n, const std::function<void(const std::vector<Part>&)>& fn) {
  for (PartitionStream s(n); s.current() != nullptr; s.advance()) fn(*s.current());
}

namespace {

class PartitionNumberCache {
 public:
  PartitionNumberCache() : table_{BigInt(1)} {}

  BigInt get(std::int64_t n) {
    if (n < 0) return 0;
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (idx < table_.size()) return table_[idx];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= idx) extend();
    return table_[idx];
  }

 private:
  // p(m) = sum_{k>=1} (-1)^{k+1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
  void extend() {
    const auto m = static_cast<std::int64_t>(table_.size());
    BigInt acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      BigInt term = table_[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += table_[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    table_.push_back(std::move(acc));
  }

  std::shared_mutex mutex_;
  std::vector<BigInt> table_;
};

PartitionNumberCache& cache() {
  static PartitionNumberCache instance;
  return instance;
}

}  // namespace

ExactCount count_partitions(std::int64_t n) { return ExactCount(cache().get(n)); }

ExactCount count_containing(std::int64_t n, const Multiset& pattern) {
  return count_partitions(n - weight(pattern));
}

}  // namespace partstat
