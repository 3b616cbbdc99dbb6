#pragma once

// Test-only reference computations. None of these touch the library's
// enumeration, counting or sieve code.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Parts = std::vector<std::int64_t>;

// All partitions of n (parts weakly decreasing) by plain recursion.
inline void partitions_rec(std::int64_t rest, std::int64_t cap, Parts& cur, std::vector<Parts>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t p = std::min(rest, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions(std::int64_t n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// Coin-change DP over allowed part sizes; each size usable any number of
// times (or at most once when `distinct`).
inline std::vector<std::uint64_t> restricted_counts(std::int64_t max_n,
                                                    const std::function<bool(std::int64_t)>& allowed,
                                                    bool distinct) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(max_n) + 1, 0);
  ways[0] = 1;
  for (std::int64_t part = 1; part <= max_n; ++part) {
    if (!allowed(part)) continue;
    if (distinct) {
      for (std::int64_t m = max_n; m >= part; --m) ways[m] += ways[m - part];
    } else {
      for (std::int64_t m = part; m <= max_n; ++m) ways[m] += ways[m - part];
    }
  }
  return ways;
}

inline std::vector<std::uint64_t> partition_numbers(std::int64_t max_n) {
  return restricted_counts(max_n, [](std::int64_t) { return true; }, false);
}

inline std::map<std::int64_t, std::int64_t> multiplicities(const Parts& parts) {
  std::map<std::int64_t, std::int64_t> m;
  for (auto p : parts) ++m[p];
  return m;
}

// Does `parts` contain every element of `pattern` (as multisets)?
inline bool contains(const Parts& parts, const Parts& pattern) {
  auto have = multiplicities(parts);
  for (const auto& [size, mult] : multiplicities(pattern)) {
    if (have[size] < mult) return false;
  }
  return true;
}

// Distribution {j -> count} of a statistic over all partitions of n.
inline std::map<std::int64_t, std::uint64_t> distribution(
    std::int64_t n, const std::function<std::int64_t(const Parts&)>& stat) {
  std::map<std::int64_t, std::uint64_t> out;
  for (const auto& p : partitions(n)) ++out[stat(p)];
  return out;
}

}  // namespace oracle
