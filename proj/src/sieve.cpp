#include "partstat/sieve.hpp"

#include <atomic>
#include <mutex>

#include "partstat/error.hpp"
#include "partstat/parallel.hpp"

namespace partstat {

namespace {

class SubsetWalker {
 public:
  SubsetWalker(const std::vector<IndexedMember>& members, std::int64_t n,
               const std::vector<BigInt>& p, std::atomic<std::uint64_t>& explored,
               std::uint64_t cap, std::atomic<bool>& truncated)
      : members_(members), n_(n), p_(p), explored_(explored), cap_(cap), truncated_(truncated),
        sums_(members.size() + 1) {}

  // Records S with union `u` of weight w and size `depth`.
  bool visit(std::int64_t w, std::size_t depth) {
    if (explored_.fetch_add(1) + 1 > cap_) {
      truncated_ = true;
      return false;
    }
    sums_[depth] += p_[static_cast<std::size_t>(n_ - w)];
    return true;
  }

  void extend(const Multiset& u, std::size_t start, std::size_t depth) {
    for (std::size_t i = start; i < members_.size(); ++i) {
      if (truncated_) return;
      Multiset next = multiset_union(u, members_[i].members);
      const auto w = weight(next);
      if (w > n_) continue;
      if (!visit(w, depth + 1)) return;
      extend(next, i + 1, depth + 1);
    }
  }

  std::vector<BigInt>& sums() { return sums_; }

 private:
  const std::vector<IndexedMember>& members_;
  std::int64_t n_;
  const std::vector<BigInt>& p_;
  std::atomic<std::uint64_t>& explored_;
  std::uint64_t cap_;
  std::atomic<bool>& truncated_;
  std::vector<BigInt> sums_;
};

struct Exploration {
  std::vector<BigInt> sums;
  std::uint64_t explored = 0;
  bool truncated = false;
};

Exploration explore(const std::vector<IndexedMember>& members, std::int64_t n,
                    const std::vector<BigInt>& p, std::uint64_t cap, unsigned threads) {
  std::atomic<std::uint64_t> explored{0};
  std::atomic<bool> truncated{false};
  Exploration out;
  out.sums.assign(members.size() + 1, BigInt(0));
  std::mutex merge_mutex;

  SubsetWalker root(members, n, p, explored, cap, truncated);
  if (root.visit(0, 0)) {
    // Work item i: subsets whose first member (in weight order) is i.
    parallel_for(members.size(), threads, [&](std::size_t i) {
      if (truncated) return;
      SubsetWalker walker(members, n, p, explored, cap, truncated);
      if (walker.visit(members[i].weight, 1)) walker.extend(members[i].members, i + 1, 1);
      std::lock_guard lock(merge_mutex);
      for (std::size_t t = 0; t < out.sums.size(); ++t) out.sums[t] += walker.sums()[t];
    });
  }
  for (std::size_t t = 0; t < out.sums.size(); ++t) out.sums[t] += root.sums()[t];
  out.truncated = truncated;
  out.explored = std::min<std::uint64_t>(explored.load(), cap);
  return out;
}

}  // namespace

std::vector<std::vector<BigInt>> binomial_table(std::size_t max_t) {
  std::vector<std::vector<BigInt>> c(max_t + 1);
  for (std::size_t t = 0; t <= max_t; ++t) {
    c[t].assign(t + 1, BigInt(1));
    for (std::size_t j = 1; j < t; ++j) c[t][j] = c[t - 1][j - 1] + c[t - 1][j];
  }
  return c;
}

SieveResult sieve_distribution(const MultisetFamily& family, std::int64_t n,
                               std::uint64_t subset_cap, unsigned threads) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "sieve needs n >= 0");
  if (subset_cap == 0) throw Error(ErrorCode::invalid_argument, "subset cap must be > 0");

  const auto members = family.relevant_members(n);
  std::vector<BigInt> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t m = 0; m <= n; ++m) p.push_back(count_partitions(m).value());

  Exploration run = explore(members, n, p, subset_cap, threads);
  if (run.truncated && threads > 1) {
    // Which subsets a parallel run reaches before the cap depends on
    // scheduling; redo it in the canonical sequential order.
    run = explore(members, n, p, subset_cap, 1);
  }

  SieveResult result;
  result.n = n;
  result.subsets_explored = run.explored;
  result.truncated = run.truncated;
  while (run.sums.size() > 1 && run.sums.back().is_zero()) run.sums.pop_back();
  for (auto& s : run.sums) result.superset_sums.emplace_back(std::move(s));
  if (result.truncated) return result;

  const std::size_t max_t = result.superset_sums.size() - 1;
  const auto binom = binomial_table(max_t);
  std::map<std::int64_t, ExactCount> counts;
  for (std::size_t j = 0; j <= max_t; ++j) {
    BigInt e = 0;
    for (std::size_t t = j; t <= max_t; ++t) {
      BigInt term = binom[t][j] * result.superset_sums[t].value();
      if ((t - j) % 2 == 0) {
        e += term;
      } else {
        e -= term;
      }
    }
    if (e < 0) {
      throw Error(ErrorCode::invariant, "sieve produced negative e_" + std::to_string(j));
    }
    counts.emplace(static_cast<std::int64_t>(j), ExactCount(std::move(e)));
  }
  result.table = DistributionTable(n, std::move(counts), count_partitions(n));
  return result;
}

}  // namespace partstat
