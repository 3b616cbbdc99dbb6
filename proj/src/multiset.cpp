#include "partstat/multiset.hpp"

#include <algorithm>
#include <sstream>

#include "partstat/error.hpp"

namespace partstat {

Multiset::Multiset(std::initializer_list<std::pair<Part, Multiplicity>> entries)
    : Multiset(from_entries(std::vector<std::pair<Part, Multiplicity>>(entries))) {}

Multiset Multiset::from_entries(std::vector<std::pair<Part, Multiplicity>> entries) {
  std::sort(entries.begin(), entries.end());
  Multiset out;
  for (const auto& [size, mult] : entries) {
    if (size < 1) {
      throw Error(ErrorCode::invalid_argument,
                  "multiset part size must be >= 1, got " + std::to_string(size));
    }
    if (mult < 0) {
      throw Error(ErrorCode::invalid_argument,
                  "multiset multiplicity must be >= 0, got " + std::to_string(mult));
    }
    if (mult == 0) continue;
    if (!out.entries_.empty() && out.entries_.back().size == size) {
      out.entries_.back().mult += mult;
    } else {
      out.entries_.push_back({size, mult});
    }
  }
  return out;
}

Multiset Multiset::from_parts(const std::vector<Part>& parts) {
  std::vector<std::pair<Part, Multiplicity>> entries;
  entries.reserve(parts.size());
  for (Part p : parts) entries.emplace_back(p, 1);
  return from_entries(std::move(entries));
}

Multiplicity Multiset::multiplicity(Part size) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), size,
                             [](const Entry& e, Part s) { return e.size < s; });
  return (it != entries_.end() && it->size == size) ? it->mult : 0;
}

std::vector<Part> Multiset::parts_descending() const {
  std::vector<Part> out;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    out.insert(out.end(), static_cast<std::size_t>(it->mult), it->size);
  }
  return out;
}

std::string Multiset::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Part p : parts_descending()) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  return os.str();
}

std::int64_t weight(const Multiset& m) {
  std::int64_t w = 0;
  for (const auto& e : m.entries()) w += e.size * e.mult;
  return w;
}

bool contains(const Multiset& outer, const Multiset& pattern) {
  const auto& o = outer.entries();
  auto it = o.begin();
  for (const auto& e : pattern.entries()) {
    while (it != o.end() && it->size < e.size) ++it;
    if (it == o.end() || it->size != e.size || it->mult < e.mult) return false;
  }
  return true;
}

Multiset remove(const Multiset& outer, const Multiset& pattern) {
  if (!contains(outer, pattern)) {
    throw Error(ErrorCode::not_contained,
                "not contained: {" + pattern.to_string() + "} is not a sub-multiset of {" +
                    outer.to_string() + "}");
  }
  std::vector<std::pair<Part, Multiplicity>> entries;
  for (const auto& e : outer.entries()) {
    entries.emplace_back(e.size, e.mult - pattern.multiplicity(e.size));
  }
  return Multiset::from_entries(std::move(entries));
}

Multiset add(const Multiset& a, const Multiset& b) {
  std::vector<std::pair<Part, Multiplicity>> entries;
  for (const auto& e : a.entries()) entries.emplace_back(e.size, e.mult);
  for (const auto& e : b.entries()) entries.emplace_back(e.size, e.mult);
  return Multiset::from_entries(std::move(entries));
}

Multiset multiset_union(const Multiset& a, const Multiset& b) {
  std::vector<std::pair<Part, Multiplicity>> entries;
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].size < y[j].size)) {
      entries.emplace_back(x[i].size, x[i].mult);
      ++i;
    } else if (i == x.size() || y[j].size < x[i].size) {
      entries.emplace_back(y[j].size, y[j].mult);
      ++j;
    } else {
      entries.emplace_back(x[i].size, std::max(x[i].mult, y[j].mult));
      ++i;
      ++j;
    }
  }
  return Multiset::from_entries(std::move(entries));
}

Part first_shared_size(const Multiset& a, const Multiset& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].size == y[j].size) return x[i].size;
    if (x[i].size < y[j].size) {
      ++i;
    } else {
      ++j;
    }
  }
  return 0;
}

bool disjoint_support(const Multiset& a, const Multiset& b) {
  return first_shared_size(a, b) == 0;
}

}  // namespace partstat
