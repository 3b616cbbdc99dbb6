#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "partstat/error.hpp"
#include "partstat/families.hpp"

namespace partstat {

namespace {

// size(t) = c2 t^2 + c1 t + c0, repeated m1 t + m0 times.
TemplateEntry entry(std::int64_t c2, std::int64_t c1, std::int64_t c0, std::int64_t m1,
                    std::int64_t m0) {
  return {{c2, c1, c0}, {m1, m0}};
}

FamilyPair template_pair(const std::string& name, std::int64_t tmin,
                         const std::vector<std::vector<TemplateEntry>>& f,
                         const std::vector<std::vector<TemplateEntry>>& g) {
  std::vector<Strand> fs, gs;
  for (const auto& s : f) fs.push_back(Strand::from_template(s, tmin));
  for (const auto& s : g) gs.push_back(Strand::from_template(s, tmin));
  return FamilyPair(name, MultisetFamily(name + ".F", std::move(fs)),
                    MultisetFamily(name + ".G", std::move(gs)));
}

FamilyPair andrews(const BuiltinParams& params) {
  if (!params.m1) throw Error(ErrorCode::invalid_argument, "andrews needs an M1 list");
  if (!params.bound) throw Error(ErrorCode::invalid_argument, "andrews needs a weight bound");
  const auto bound = *params.bound;
  const auto m1 = normalize_m1(*params.m1, bound);
  const std::set<std::int64_t> in_m1(m1.begin(), m1.end());
  auto in_2m1 = [&](std::int64_t s) { return s % 2 == 0 && in_m1.count(s / 2) > 0; };

  std::vector<Strand> fs, gs;
  for (std::int64_t s = 1; s <= bound; ++s) {
    const bool in_m2 = in_m1.count(s) > 0 && !in_2m1(s);
    if (in_m2) continue;
    fs.push_back(Strand::fixed(Multiset{{s, 1}}, 1));
    if (in_m1.count(s) == 0) {
      gs.push_back(Strand::fixed(Multiset{{s, 1}}, 1));
    } else {
      gs.push_back(Strand::fixed(Multiset{{s / 2, 2}}, 1));
    }
  }
  if (fs.empty()) {
    throw Error(ErrorCode::invalid_argument, "andrews: M2 covers every size up to the bound");
  }
  return FamilyPair("andrews", MultisetFamily("andrews.F", std::move(fs), bound),
                    MultisetFamily("andrews.G", std::move(gs), bound));
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"euler", "", "Theorem 1", "number of even part sizes",
       "number of repeated part sizes"},
      {"squares", "", "Theorem B, example 1", "number of part sizes that are perfect squares",
       "number of part sizes i with multiplicity >= i"},
      {"mod6", "", "Theorem B, example 2 (weight-matched family form)",
       "number of part sizes = 2,3,4 mod 6",
       "number of part sizes that are odd multiples of 3, or repeated and not a multiple of 3"},
      {"glaisher", "d > 1", "Theorem B, example 3", "number of part sizes that are multiples of d",
       "number of part sizes with multiplicity >= d"},
      {"andrews", "M1 list, doubling-closed", "Theorem B, example 4",
       "number of part sizes not in M2 = M1 - 2M1",
       "number of part sizes i with i not in M1, or i in M1 and repeated"},
      {"remmel_consecutive", "", "Theorem C application",
       "number of consecutive even part sizes (2i and 2i+2 both occur)",
       "number of consecutive repeated part sizes (i and i+1 both repeated)"},
  };
  return entries;
}

FamilyPair builtin_pair(const std::string& name, const BuiltinParams& params) {
  if (name == "euler") {
    return template_pair(name, 1, {{entry(0, 2, 0, 0, 1)}}, {{entry(0, 1, 0, 0, 2)}});
  }
  if (name == "squares") {
    return template_pair(name, 1, {{entry(1, 0, 0, 0, 1)}}, {{entry(0, 1, 0, 1, 0)}});
  }
  if (name == "mod6") {
    return template_pair(name, 0,
                         {{entry(0, 6, 2, 0, 1)}, {entry(0, 6, 3, 0, 1)}, {entry(0, 6, 4, 0, 1)}},
                         {{entry(0, 3, 1, 0, 2)}, {entry(0, 6, 3, 0, 1)}, {entry(0, 3, 2, 0, 2)}});
  }
  if (name == "glaisher") {
    if (!params.d) throw Error(ErrorCode::invalid_argument, "glaisher needs d");
    const auto d = *params.d;
    if (d <= 1) {
      throw Error(ErrorCode::invalid_argument, "glaisher needs d > 1, got " + std::to_string(d));
    }
    return template_pair(name, 1, {{entry(0, d, 0, 0, 1)}}, {{entry(0, 1, 0, 0, d)}});
  }
  if (name == "andrews") return andrews(params);
  if (name == "remmel_consecutive") {
    return template_pair(name, 1, {{entry(0, 2, 0, 0, 1), entry(0, 2, 2, 0, 1)}},
                         {{entry(0, 1, 0, 0, 2), entry(0, 1, 1, 0, 2)}});
  }
  throw Error(ErrorCode::unknown_name, "unknown pair '" + name + "'");
}

std::vector<std::int64_t> normalize_m1(std::vector<std::int64_t> m1, std::int64_t bound) {
  if (bound < 1) throw Error(ErrorCode::invalid_argument, "andrews bound must be >= 1");
  for (auto m : m1) {
    if (m < 1) throw Error(ErrorCode::invalid_argument, "M1 entries must be >= 1, got " + std::to_string(m));
  }
  std::sort(m1.begin(), m1.end());
  m1.erase(std::unique(m1.begin(), m1.end()), m1.end());
  m1.erase(std::upper_bound(m1.begin(), m1.end(), bound), m1.end());
  for (auto m : m1) {
    if (2 * m <= bound && !std::binary_search(m1.begin(), m1.end(), 2 * m)) {
      throw Error(ErrorCode::invalid_argument,
                  "M1 is not doubling-closed: " + std::to_string(m) + " in M1 but " +
                      std::to_string(2 * m) + " is not");
    }
  }
  return m1;
}

std::vector<std::int64_t> load_m1_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::vector<std::int64_t> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::int64_t v = 0;
    if (!(ls >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw Error(ErrorCode::parse, path + ":" + std::to_string(lineno) + ": expected an integer");
    }
    std::string rest;
    if (ls >> rest) {
      throw Error(ErrorCode::parse, path + ":" + std::to_string(lineno) + ": trailing text");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace partstat
