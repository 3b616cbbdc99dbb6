#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace partstat {

using Part = std::int64_t;
using Multiplicity = std::int64_t;

/// Finite multiset of positive integers, stored as (size, multiplicity)
/// entries sorted by ascending size. Zero multiplicities are never stored.
class Multiset {
 public:
  struct Entry {
    Part size;
    Multiplicity mult;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Multiset() = default;
  /// Entries may be given in any order; repeated sizes accumulate.
  /// Throws Error(invalid_argument) on size < 1 or multiplicity < 0.
  Multiset(std::initializer_list<std::pair<Part, Multiplicity>> entries);
  static Multiset from_entries(std::vector<std::pair<Part, Multiplicity>> entries);
  /// Builds a multiset from a flat list of parts in any order.
  static Multiset from_parts(const std::vector<Part>& parts);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t distinct_sizes() const noexcept { return entries_.size(); }
  Multiplicity multiplicity(Part size) const noexcept;
  Part largest() const noexcept { return entries_.empty() ? 0 : entries_.back().size; }

  /// Parts in weakly decreasing order, e.g. {1:1,2:2,4:1} -> 4,2,2,1.
  std::vector<Part> parts_descending() const;
  /// Canonical text form "4,2,2,1"; the empty multiset renders as "".
  std::string to_string() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Sum of size * multiplicity.
std::int64_t weight(const Multiset& m);

bool contains(const Multiset& outer, const Multiset& pattern);

/// Multiplicity-wise difference. Throws Error(not_contained) unless
/// contains(outer, pattern).
Multiset remove(const Multiset& outer, const Multiset& pattern);

/// Multiplicity-wise sum (additive union); inverse of remove.
Multiset add(const Multiset& a, const Multiset& b);

/// Max-multiplicity union: a partition contains both A and B exactly when it
/// contains multiset_union(A, B).
Multiset multiset_union(const Multiset& a, const Multiset& b);

/// True when the two multisets share no part size.
bool disjoint_support(const Multiset& a, const Multiset& b);

/// Smallest shared part size, or 0 when the supports are disjoint.
Part first_shared_size(const Multiset& a, const Multiset& b);

}  // namespace partstat
