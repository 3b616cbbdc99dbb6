#include "partstat/statistics.hpp"

#include <algorithm>
#include <set>

#include "partstat/error.hpp"

namespace partstat {

namespace {

template <typename Pred>
std::int64_t count_sizes(const Multiset& m, Pred pred) {
  std::int64_t c = 0;
  for (const auto& e : m.entries()) {
    if (pred(e.size, e.mult)) ++c;
  }
  return c;
}

bool is_square(std::int64_t s) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= s) ++r;
  return r * r == s;
}

std::set<std::int64_t> require_m1(const NativeParams& params, const std::string& name) {
  if (!params.m1) throw Error(ErrorCode::invalid_argument, name + " needs an M1 list");
  for (auto m : *params.m1) {
    if (m < 1) throw Error(ErrorCode::invalid_argument, "M1 entries must be >= 1");
  }
  return {params.m1->begin(), params.m1->end()};
}

}  // namespace

Statistic Statistic::family_induced(MultisetFamily family, std::string label) {
  Statistic s;
  s.label_ = label.empty() ? family.name() : std::move(label);
  s.family_ = std::make_shared<const MultisetFamily>(std::move(family));
  return s;
}

const std::vector<std::string>& Statistic::native_names() {
  static const std::vector<std::string> names = {
      "even_sizes",  "repeated_sizes", "square_sizes", "mult_ge",          "mult_ge_size",
      "mod6_X",      "mod6_Y_prose",   "not_in_M2",    "andrews_Y",        "consecutive_even",
      "consecutive_repeated"};
  return names;
}

Statistic Statistic::native(const std::string& name, const NativeParams& params) {
  Statistic s;
  s.label_ = name;
  if (name == "even_sizes") {
    s.rule_ = [](const Multiset& m) {
      return count_sizes(m, [](auto size, auto) { return size % 2 == 0; });
    };
  } else if (name == "repeated_sizes") {
    s.rule_ = [](const Multiset& m) {
      return count_sizes(m, [](auto, auto mult) { return mult >= 2; });
    };
  } else if (name == "square_sizes") {
    s.rule_ = [](const Multiset& m) {
      return count_sizes(m, [](auto size, auto) { return is_square(size); });
    };
  } else if (name == "mult_ge") {
    if (!params.d || *params.d < 1) {
      throw Error(ErrorCode::invalid_argument, "mult_ge needs d >= 1");
    }
    const auto d = *params.d;
    s.label_ = "mult_ge(" + std::to_string(d) + ")";
    s.rule_ = [d](const Multiset& m) {
      return count_sizes(m, [d](auto, auto mult) { return mult >= d; });
    };
  } else if (name == "mult_ge_size") {
    s.rule_ = [](const Multiset& m) {
      return count_sizes(m, [](auto size, auto mult) { return mult >= size; });
    };
  } else if (name == "mod6_X") {
    s.rule_ = [](const Multiset& m) {
      return count_sizes(m, [](auto size, auto) {
        const auto r = size % 6;
        return r == 2 || r == 3 || r == 4;
      });
    };
  } else if (name == "mod6_Y_prose") {
    s.rule_ = [](const Multiset& m) {
      return count_sizes(m, [](auto size, auto mult) { return size % 3 == 0 || mult >= 2; });
    };
  } else if (name == "not_in_M2") {
    auto m1 = require_m1(params, name);
    s.rule_ = [m1](const Multiset& m) {
      return count_sizes(m, [&m1](auto size, auto) {
        const bool in_m1 = m1.count(size) > 0;
        const bool doubled = size % 2 == 0 && m1.count(size / 2) > 0;
        return !(in_m1 && !doubled);
      });
    };
  } else if (name == "andrews_Y") {
    auto m1 = require_m1(params, name);
    s.rule_ = [m1](const Multiset& m) {
      return count_sizes(m, [&m1](auto size, auto mult) { return m1.count(size) == 0 || mult >= 2; });
    };
  } else if (name == "consecutive_even") {
    s.rule_ = [](const Multiset& m) {
      return count_sizes(m, [&m](auto size, auto) {
        return size % 2 == 0 && m.multiplicity(size + 2) > 0;
      });
    };
  } else if (name == "consecutive_repeated") {
    s.rule_ = [](const Multiset& m) {
      return count_sizes(m, [&m](auto size, auto mult) {
        return mult >= 2 && m.multiplicity(size + 1) >= 2;
      });
    };
  } else {
    throw Error(ErrorCode::unknown_name, "unknown native statistic '" + name + "'");
  }
  return s;
}

BoundStatistic Statistic::bind(std::int64_t n) const {
  if (!family_) return rule_;
  std::vector<Multiset> members;
  for (auto& m : family_->relevant_members(n)) members.push_back(std::move(m.members));
  return [members = std::move(members)](const Multiset& parts) {
    return static_cast<std::int64_t>(std::count_if(
        members.begin(), members.end(), [&parts](const Multiset& f) { return contains(parts, f); }));
  };
}

std::int64_t Statistic::evaluate(const Partition& p) const { return bind(p.n())(p.parts()); }

}  // namespace partstat
