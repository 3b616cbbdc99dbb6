#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partstat/multiset.hpp"

namespace partstat {

/// One entry of a template strand: size(t) = c2 t^2 + c1 t + c0 copies
/// mult(t) = m1 t + m0 times.
struct TemplateEntry {
  std::array<std::int64_t, 3> size{};  // {c2, c1, c0}
  std::array<std::int64_t, 2> mult{};  // {m1, m0}

  std::int64_t size_at(std::int64_t t) const { return (size[0] * t + size[1]) * t + size[2]; }
  std::int64_t mult_at(std::int64_t t) const { return mult[0] * t + mult[1]; }

  friend bool operator==(const TemplateEntry&, const TemplateEntry&) = default;
};

/// A finitely presented run of family members. A template strand covers
/// every t >= tmin; an explicit strand is a single fixed multiset at t = tmin.
class Strand {
 public:
  /// Throws Error(invariant) when no entry grows with t, when any leading
  /// coefficient is negative, or when the entry list is empty.
  static Strand from_template(std::vector<TemplateEntry> entries, std::int64_t tmin);
  /// Throws Error(invariant) when `member` is empty.
  static Strand fixed(Multiset member, std::int64_t t);

  bool is_explicit() const noexcept { return fixed_.has_value(); }
  std::int64_t tmin() const noexcept { return tmin_; }
  /// Last valid parameter, present only for explicit strands.
  std::optional<std::int64_t> tmax() const noexcept {
    return fixed_ ? std::optional<std::int64_t>(tmin_) : std::nullopt;
  }
  bool in_domain(std::int64_t t) const noexcept {
    return t >= tmin_ && (!fixed_ || t == tmin_);
  }
  const std::vector<TemplateEntry>& template_entries() const noexcept { return entries_; }
  const std::optional<Multiset>& fixed_member() const noexcept { return fixed_; }

  /// Member at t. `where` prefixes diagnostics. Throws Error(invariant) if
  /// an entry evaluates to size < 1 or multiplicity < 1, and
  /// Error(invalid_argument) if t is outside the domain.
  Multiset at(std::int64_t t, const std::string& where = "strand") const;

  friend bool operator==(const Strand&, const Strand&) = default;

 private:
  std::vector<TemplateEntry> entries_;
  std::optional<Multiset> fixed_;
  std::int64_t tmin_ = 1;
};

struct FamilyIndex {
  std::size_t strand = 0;
  std::int64_t t = 0;

  friend auto operator<=>(const FamilyIndex&, const FamilyIndex&) = default;
  friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
};

std::string to_string(const FamilyIndex& idx);

struct IndexedMember {
  FamilyIndex index;
  Multiset members;
  std::int64_t weight = 0;
};

/// The list F_1, F_2, ... presented as strands.
class MultisetFamily {
 public:
  MultisetFamily() = default;
  /// `weight_bound`, when set, is the largest n the strands are known to
  /// cover completely (families built from a finite list). Queries above it
  /// throw Error(invalid_argument).
  MultisetFamily(std::string name, std::vector<Strand> strands,
                 std::optional<std::int64_t> weight_bound = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Strand>& strands() const noexcept { return strands_; }
  const std::optional<std::int64_t>& weight_bound() const noexcept { return weight_bound_; }

  Multiset member(const FamilyIndex& idx) const;

  /// All indices whose member has weight <= n, sorted by (weight, strand, t).
  std::vector<FamilyIndex> relevant_indices(std::int64_t n) const;
  std::vector<IndexedMember> relevant_members(std::int64_t n) const;

  /// Evaluates every template strand for t in [tmin, tmin + horizon],
  /// checking sizes, multiplicities and nondecreasing weight.
  void validate(std::int64_t horizon) const;

  /// Same family with strands permuted; `order[k]` is the source strand.
  MultisetFamily with_strand_order(const std::vector<std::size_t>& order) const;

  friend bool operator==(const MultisetFamily&, const MultisetFamily&) = default;

 private:
  std::string where(std::size_t strand) const;

  std::string name_;
  std::vector<Strand> strands_;
  std::optional<std::int64_t> weight_bound_;
};

/// F and G lists whose strands are aligned one to one (same count, same
/// domains), so that index (s, t) of F pairs with index (s, t) of G.
class FamilyPair {
 public:
  FamilyPair() = default;
  /// Throws Error(invariant) if the strands are not aligned.
  FamilyPair(std::string name, MultisetFamily f, MultisetFamily g);

  const std::string& name() const noexcept { return name_; }
  const MultisetFamily& f() const noexcept { return f_; }
  const MultisetFamily& g() const noexcept { return g_; }

  friend bool operator==(const FamilyPair&, const FamilyPair&) = default;

 private:
  std::string name_;
  MultisetFamily f_;
  MultisetFamily g_;
};

inline constexpr std::int64_t kDefaultValidationHorizon = 64;

/// Parses a family-pair JSON document:
///   {"name": ..., "tmin": 1, "bound": optional,
///    "F": [{"entries": [{"size": [c2,c1,c0], "mult": [m1,m0]}, ...]} |
///          {"explicit": [[size, mult], ...]}, ...],
///    "G": [...]}
/// Throws Error(parse) on malformed or mis-shaped input and Error(invariant)
/// when a strand is invalid; messages name the side, strand and entry.
FamilyPair parse_family_pair(const std::string& document,
                             std::int64_t horizon = kDefaultValidationHorizon);
FamilyPair load_family_pair(const std::string& path,
                            std::int64_t horizon = kDefaultValidationHorizon);
std::string render_family_pair(const FamilyPair& pair);

// Catalog of built-in pairs.

struct BuiltinParams {
  std::optional<std::int64_t> d;                 // glaisher
  std::optional<std::vector<std::int64_t>> m1;   // andrews
  std::optional<std::int64_t> bound;             // andrews: largest n covered
};

struct CatalogEntry {
  std::string name;
  std::string params;
  std::string statement;
  std::string x_description;
  std::string y_description;
};

const std::vector<CatalogEntry>& catalog();

/// Throws Error(unknown_name) or Error(invalid_argument).
FamilyPair builtin_pair(const std::string& name, const BuiltinParams& params = {});

/// Sorted, deduplicated M1 restricted to [1, bound]. Throws
/// Error(invalid_argument) unless 2m is in M1 for every m with 2m <= bound.
std::vector<std::int64_t> normalize_m1(std::vector<std::int64_t> m1, std::int64_t bound);

/// Reads one integer per line; blank lines and '#' comments are skipped.
std::vector<std::int64_t> load_m1_file(const std::string& path);

}  // namespace partstat
