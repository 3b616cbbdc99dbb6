#include <fstream>
#include <sstream>

#include <json.hpp>

#include "partstat/error.hpp"
#include "partstat/families.hpp"

namespace partstat {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::parse, where + ": " + what);
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer");
  return v.get<std::int64_t>();
}

template <std::size_t N>
std::array<std::int64_t, N> int_array(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N) {
    schema_error(where, "expected an array of " + std::to_string(N) + " integers");
  }
  std::array<std::int64_t, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = as_int(v[k], where + "[" + std::to_string(k) + "]");
  return out;
}

Strand parse_strand(const json& v, std::int64_t tmin, const std::string& where) {
  if (!v.is_object()) schema_error(where, "strand must be an object");
  const bool has_entries = v.contains("entries");
  const bool has_explicit = v.contains("explicit");
  if (has_entries == has_explicit) {
    schema_error(where, "strand needs exactly one of \"entries\" or \"explicit\"");
  }
  for (const auto& [key, _] : v.items()) {
    if (key != "entries" && key != "explicit") schema_error(where, "unknown key \"" + key + "\"");
  }
  try {
    if (has_explicit) {
      const json& list = v["explicit"];
      if (!list.is_array() || list.empty()) {
        schema_error(where + ".explicit", "expected a nonempty array of [size, mult] pairs");
      }
      std::vector<std::pair<Part, Multiplicity>> entries;
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string at = where + ".explicit[" + std::to_string(k) + "]";
        auto pair = int_array<2>(list[k], at);
        if (pair[0] < 1 || pair[1] < 1) {
          throw Error(ErrorCode::invariant, at + ": size and multiplicity must be >= 1");
        }
        entries.emplace_back(pair[0], pair[1]);
      }
      return Strand::fixed(Multiset::from_entries(std::move(entries)), tmin);
    }
    const json& list = v["entries"];
    if (!list.is_array() || list.empty()) {
      schema_error(where + ".entries", "expected a nonempty array of entries");
    }
    std::vector<TemplateEntry> entries;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = where + ".entries[" + std::to_string(k) + "]";
      const json& e = list[k];
      if (!e.is_object() || !e.contains("size") || !e.contains("mult") || e.size() != 2) {
        schema_error(at, "entry must be {\"size\": [c2,c1,c0], \"mult\": [m1,m0]}");
      }
      entries.push_back({int_array<3>(e["size"], at + ".size"), int_array<2>(e["mult"], at + ".mult")});
    }
    return Strand::from_template(std::move(entries), tmin);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::invariant) throw;
    if (std::string(err.what()).rfind(where, 0) == 0) throw;
    throw Error(ErrorCode::invariant, where + ": " + err.what());
  }
}

MultisetFamily parse_family(const json& doc, const std::string& side, const std::string& name,
                            std::int64_t tmin, std::optional<std::int64_t> bound) {
  if (!doc.contains(side)) schema_error(side, "missing");
  const json& list = doc[side];
  if (!list.is_array() || list.empty()) schema_error(side, "expected a nonempty array of strands");
  std::vector<Strand> strands;
  for (std::size_t s = 0; s < list.size(); ++s) {
    strands.push_back(parse_strand(list[s], tmin, side + "[" + std::to_string(s) + "]"));
  }
  return MultisetFamily(name + "." + side, std::move(strands), bound);
}

ordered_json render_strand(const Strand& s) {
  ordered_json out;
  if (s.is_explicit()) {
    ordered_json list = ordered_json::array();
    for (const auto& e : s.fixed_member()->entries()) list.push_back({e.size, e.mult});
    out["explicit"] = std::move(list);
    return out;
  }
  ordered_json list = ordered_json::array();
  for (const auto& e : s.template_entries()) {
    ordered_json entry;
    entry["size"] = e.size;
    entry["mult"] = e.mult;
    list.push_back(std::move(entry));
  }
  out["entries"] = std::move(list);
  return out;
}

}  // namespace

FamilyPair parse_family_pair(const std::string& document, std::int64_t horizon) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("document", "expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "tmin" && key != "bound" && key != "F" && key != "G") {
      schema_error("document", "unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("name") || !doc["name"].is_string()) schema_error("name", "expected a string");
  const auto name = doc["name"].get<std::string>();
  const std::int64_t tmin = doc.contains("tmin") ? as_int(doc["tmin"], "tmin") : 1;
  std::optional<std::int64_t> bound;
  if (doc.contains("bound")) {
    bound = as_int(doc["bound"], "bound");
    if (*bound < 0) schema_error("bound", "must be >= 0");
  }
  auto f = parse_family(doc, "F", name, tmin, bound);
  auto g = parse_family(doc, "G", name, tmin, bound);
  f.validate(horizon);
  g.validate(horizon);
  return FamilyPair(name, std::move(f), std::move(g));
}

FamilyPair load_family_pair(const std::string& path, std::int64_t horizon) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family_pair(buf.str(), horizon);
}

std::string render_family_pair(const FamilyPair& pair) {
  ordered_json doc;
  doc["name"] = pair.name();
  doc["tmin"] = pair.f().strands().front().tmin();
  if (pair.f().weight_bound()) doc["bound"] = *pair.f().weight_bound();
  for (const auto* side : {&pair.f(), &pair.g()}) {
    ordered_json list = ordered_json::array();
    for (const auto& s : side->strands()) list.push_back(render_strand(s));
    doc[side == &pair.f() ? "F" : "G"] = std::move(list);
  }
  return doc.dump(2) + "\n";
}

}  // namespace partstat
