#include "partstat/families.hpp"

#include <algorithm>
#include <tuple>

#include "partstat/error.hpp"

namespace partstat {

namespace {

bool grows(const TemplateEntry& e) { return e.size[0] > 0 || e.size[1] > 0 || e.mult[0] > 0; }

bool leading_nonnegative(const TemplateEntry& e) {
  const bool size_ok = e.size[0] != 0 ? e.size[0] > 0 : e.size[1] >= 0;
  return size_ok && e.mult[0] >= 0;
}

}  // namespace

Strand Strand::from_template(std::vector<TemplateEntry> entries, std::int64_t tmin) {
  if (entries.empty()) throw Error(ErrorCode::invariant, "template strand has no entries");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!leading_nonnegative(entries[k])) {
      throw Error(ErrorCode::invariant,
                  "entry " + std::to_string(k) +
                      ": negative leading coefficient, sizes or multiplicities eventually drop below 1");
    }
  }
  if (std::none_of(entries.begin(), entries.end(), grows)) {
    throw Error(ErrorCode::invariant,
                "no entry has a positive leading size or multiplicity coefficient, weight would not grow");
  }
  Strand s;
  s.entries_ = std::move(entries);
  s.tmin_ = tmin;
  return s;
}

Strand Strand::fixed(Multiset member, std::int64_t t) {
  if (member.empty()) throw Error(ErrorCode::invariant, "explicit strand multiset is empty");
  Strand s;
  s.fixed_ = std::move(member);
  s.tmin_ = t;
  return s;
}

Multiset Strand::at(std::int64_t t, const std::string& where) const {
  if (!in_domain(t)) {
    throw Error(ErrorCode::invalid_argument,
                where + ": t=" + std::to_string(t) + " outside the strand domain");
  }
  if (fixed_) return *fixed_;
  std::vector<std::pair<Part, Multiplicity>> out;
  out.reserve(entries_.size());
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto size = entries_[k].size_at(t);
    const auto mult = entries_[k].mult_at(t);
    if (size < 1 || mult < 1) {
      throw Error(ErrorCode::invariant,
                  where + " entry " + std::to_string(k) + ": at t=" + std::to_string(t) +
                      " size=" + std::to_string(size) + " mult=" + std::to_string(mult) +
                      " (both must be >= 1)");
    }
    out.emplace_back(size, mult);
  }
  return Multiset::from_entries(std::move(out));
}

std::string to_string(const FamilyIndex& idx) {
  return "(strand " + std::to_string(idx.strand) + ", t=" + std::to_string(idx.t) + ")";
}

MultisetFamily::MultisetFamily(std::string name, std::vector<Strand> strands,
                               std::optional<std::int64_t> weight_bound)
    : name_(std::move(name)), strands_(std::move(strands)), weight_bound_(weight_bound) {
  if (strands_.empty()) throw Error(ErrorCode::invariant, name_ + ": family has no strands");
}

std::string MultisetFamily::where(std::size_t strand) const {
  return name_ + " strand " + std::to_string(strand);
}

Multiset MultisetFamily::member(const FamilyIndex& idx) const {
  if (idx.strand >= strands_.size()) {
    throw Error(ErrorCode::invalid_argument,
                name_ + ": no strand " + std::to_string(idx.strand));
  }
  return strands_[idx.strand].at(idx.t, where(idx.strand));
}

std::vector<IndexedMember> MultisetFamily::relevant_members(std::int64_t n) const {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "relevant_indices needs n >= 0");
  if (weight_bound_ && n > *weight_bound_) {
    throw Error(ErrorCode::invalid_argument,
                name_ + " is only generated up to weight " + std::to_string(*weight_bound_) +
                    ", cannot answer n=" + std::to_string(n));
  }
  std::vector<IndexedMember> out;
  for (std::size_t s = 0; s < strands_.size(); ++s) {
    const Strand& strand = strands_[s];
    if (strand.is_explicit()) {
      Multiset m = strand.at(strand.tmin(), where(s));
      const auto w = weight(m);
      if (w <= n) out.push_back({{s, strand.tmin()}, std::move(m), w});
      continue;
    }
    // Weight is a nonconstant polynomial in t with positive leading term, so
    // the scan ends; the guard only catches a non-monotone strand.
    std::int64_t prev = 0;
    const std::int64_t guard = strand.tmin() + 4 * (n + 4);
    for (std::int64_t t = strand.tmin();; ++t) {
      if (t > guard) {
        throw Error(ErrorCode::invariant, where(s) + ": weight does not exceed " +
                                              std::to_string(n) + " within the scan guard");
      }
      Multiset m = strand.at(t, where(s));
      const auto w = weight(m);
      if (t > strand.tmin() && w < prev) {
        throw Error(ErrorCode::invariant, where(s) + ": weight decreases at t=" + std::to_string(t));
      }
      if (w > n) break;
      prev = w;
      out.push_back({{s, t}, std::move(m), w});
    }
  }
  std::sort(out.begin(), out.end(), [](const IndexedMember& a, const IndexedMember& b) {
    return std::tie(a.weight, a.index) < std::tie(b.weight, b.index);
  });
  return out;
}

std::vector<FamilyIndex> MultisetFamily::relevant_indices(std::int64_t n) const {
  std::vector<FamilyIndex> out;
  for (auto& m : relevant_members(n)) out.push_back(m.index);
  return out;
}

void MultisetFamily::validate(std::int64_t horizon) const {
  for (std::size_t s = 0; s < strands_.size(); ++s) {
    const Strand& strand = strands_[s];
    if (strand.is_explicit()) {
      (void)strand.at(strand.tmin(), where(s));
      continue;
    }
    std::int64_t prev = 0;
    for (std::int64_t t = strand.tmin(); t <= strand.tmin() + horizon; ++t) {
      const auto w = weight(strand.at(t, where(s)));
      if (t > strand.tmin() && w < prev) {
        throw Error(ErrorCode::invariant, where(s) + ": weight decreases at t=" + std::to_string(t));
      }
      prev = w;
    }
  }
}

MultisetFamily MultisetFamily::with_strand_order(const std::vector<std::size_t>& order) const {
  if (order.size() != strands_.size()) {
    throw Error(ErrorCode::invalid_argument, "strand permutation has the wrong length");
  }
  std::vector<Strand> permuted;
  for (auto k : order) permuted.push_back(strands_.at(k));
  return MultisetFamily(name_, std::move(permuted), weight_bound_);
}

FamilyPair::FamilyPair(std::string name, MultisetFamily f, MultisetFamily g)
    : name_(std::move(name)), f_(std::move(f)), g_(std::move(g)) {
  if (f_.strands().size() != g_.strands().size()) {
    throw Error(ErrorCode::invariant, name_ + ": F has " + std::to_string(f_.strands().size()) +
                                          " strands but G has " + std::to_string(g_.strands().size()));
  }
  for (std::size_t s = 0; s < f_.strands().size(); ++s) {
    const auto& a = f_.strands()[s];
    const auto& b = g_.strands()[s];
    if (a.tmin() != b.tmin() || a.tmax() != b.tmax()) {
      throw Error(ErrorCode::invariant,
                  name_ + ": strand " + std::to_string(s) + " has different domains in F and G");
    }
  }
  if (f_.weight_bound() != g_.weight_bound()) {
    throw Error(ErrorCode::invariant, name_ + ": F and G have different weight bounds");
  }
}

}  // namespace partstat
