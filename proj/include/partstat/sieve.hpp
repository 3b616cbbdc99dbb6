#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partstat/distribution.hpp"
#include "partstat/exact_count.hpp"
#include "partstat/families.hpp"

namespace partstat {

inline constexpr std::uint64_t kDefaultSubsetCap = 5'000'000;

struct SieveResult {
  std::int64_t n = 0;
  /// superset_sums[t] = N_t = sum over |S| = t of p(n - weight(F_S)), F_S the
  /// max-union of the selected members. Partial when truncated.
  std::vector<ExactCount> superset_sums;
  /// Exactly-j counts; present only when the exploration finished.
  std::optional<DistributionTable> table;
  std::uint64_t subsets_explored = 0;
  bool truncated = false;
};

/// Inclusion-exclusion over the members of `family` relevant to n:
/// e_j = sum_{t >= j} (-1)^(t-j) C(t, j) N_t.
/// Subsets are explored depth first over members sorted by weight; a branch
/// stops once its union weight exceeds n. Exploring more than `subset_cap`
/// subsets (the empty set included) yields truncated = true and no table.
SieveResult sieve_distribution(const MultisetFamily& family, std::int64_t n,
                               std::uint64_t subset_cap = kDefaultSubsetCap,
                               unsigned threads = 1);

/// C(t, j) for 0 <= j <= t <= max_t, by Pascal's rule.
std::vector<std::vector<BigInt>> binomial_table(std::size_t max_t);

enum class Theorem { B, C };
enum class HypothesisStatus { holds, violated, inconclusive };

struct Witness {
  enum class Kind {
    shared_support_f,       // two F members share a part size
    shared_support_g,       // two G members share a part size
    weight_mismatch,        // weight(F_i) != weight(G_i)
    union_weight_mismatch,  // weight(F_S) != weight(G_S)
  };
  Kind kind = Kind::weight_mismatch;
  /// Two indices for shared support, one for a weight mismatch, the index
  /// set S for a union mismatch.
  std::vector<FamilyIndex> indices;
  Part shared_size = 0;
  std::int64_t weight_f = 0;
  std::int64_t weight_g = 0;
};

struct HypothesisReport {
  Theorem theorem = Theorem::B;
  std::int64_t verified_up_to = 0;
  HypothesisStatus status = HypothesisStatus::holds;
  std::optional<Witness> witness;
  std::uint64_t subsets_explored = 0;

  bool holds() const noexcept { return status == HypothesisStatus::holds; }
};

/// Checks, over every aligned index whose F or G member has weight <= n_max:
/// F members pairwise support-disjoint, G members likewise, and equal
/// weights at each aligned index.
HypothesisReport check_theorem_b(const FamilyPair& pair, std::int64_t n_max);

/// Checks weight(F_S) == weight(G_S) (max-unions) for every set S of aligned
/// indices with min(weight(F_S), weight(G_S)) <= n_max.
HypothesisReport check_theorem_c(const FamilyPair& pair, std::int64_t n_max,
                                 std::uint64_t subset_cap = kDefaultSubsetCap);

/// Recomputes a violation witness from the pair alone. True when the
/// witness describes a genuine violation.
bool revalidate_witness(const FamilyPair& pair, const Witness& witness);

}  // namespace partstat
