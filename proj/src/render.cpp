#include "partstat/render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "partstat/error.hpp"

namespace partstat {

namespace {

using nlohmann::ordered_json;

std::string str(std::int64_t v) { return std::to_string(v); }

ordered_json counts_json(const DistributionTable& t) {
  ordered_json out = ordered_json::object();
  for (const auto& [j, c] : t.counts()) out[str(j)] = c.to_string();
  return out;
}

ordered_json table_json(const DistributionTable& t) {
  ordered_json out;
  out["n"] = str(t.n());
  out["counts"] = counts_json(t);
  out["total"] = t.total().to_string();
  return out;
}

std::string inline_counts(const DistributionTable& t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [j, c] : t.counts()) {
    os << (first ? "" : ", ") << j << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string csv_rows(const DistributionTable& t) {
  std::ostringstream os;
  for (const auto& [j, c] : t.counts()) {
    os << t.n() << ',' << j << ',' << c << ',' << t.total() << '\n';
  }
  return os.str();
}

std::string text_table(const DistributionTable& t, const std::string& label) {
  std::ostringstream os;
  if (!label.empty()) os << "statistic: " << label << '\n';
  os << "n = " << t.n() << ", total = " << t.total() << '\n';
  os << std::left << std::setw(6) << "j" << std::setw(24) << "count" << "probability\n";
  for (const auto& [j, c] : t.counts()) {
    os << std::setw(6) << j << std::setw(24) << c.to_string() << c << '/' << t.total() << '\n';
  }
  return os.str();
}

std::string multiset_text(const Multiset& m) { return "{" + m.to_string() + "}"; }

std::string index_list(const std::vector<FamilyIndex>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + to_string(s[k]);
  return out + "}";
}

ordered_json index_json(const FamilyIndex& idx) {
  ordered_json out;
  out["strand"] = std::to_string(idx.strand);
  out["t"] = str(idx.t);
  return out;
}

const char* kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::shared_support_f: return "shared_support_F";
    case Witness::Kind::shared_support_g: return "shared_support_G";
    case Witness::Kind::weight_mismatch: return "weight_mismatch";
    case Witness::Kind::union_weight_mismatch: return "union_weight_mismatch";
  }
  return "?";
}

std::string witness_text(const Witness& w, const FamilyPair& pair) {
  std::ostringstream os;
  switch (w.kind) {
    case Witness::Kind::shared_support_f:
    case Witness::Kind::shared_support_g: {
      const bool f = w.kind == Witness::Kind::shared_support_f;
      const auto& fam = f ? pair.f() : pair.g();
      os << (f ? "F" : "G") << " members " << to_string(w.indices[0]) << ' '
         << multiset_text(fam.member(w.indices[0])) << " and " << to_string(w.indices[1]) << ' '
         << multiset_text(fam.member(w.indices[1])) << " share element " << w.shared_size;
      break;
    }
    case Witness::Kind::weight_mismatch:
      os << "at " << to_string(w.indices[0]) << ": weight(F) = " << w.weight_f
         << " != weight(G) = " << w.weight_g << " (F " << multiset_text(pair.f().member(w.indices[0]))
         << ", G " << multiset_text(pair.g().member(w.indices[0])) << ")";
      break;
    case Witness::Kind::union_weight_mismatch:
      os << "S = " << index_list(w.indices) << ": weight(F_S) = " << w.weight_f
         << " != weight(G_S) = " << w.weight_g;
      break;
  }
  return os.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error(ErrorCode::invalid_argument, "unknown format '" + name + "' (table, csv, json)");
}

const char* to_string(HypothesisStatus status) {
  switch (status) {
    case HypothesisStatus::holds: return "holds";
    case HypothesisStatus::violated: return "violated";
    case HypothesisStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string render_table(const DistributionTable& table, Format format, const std::string& label) {
  switch (format) {
    case Format::csv: return "n,j,count,total\n" + csv_rows(table);
    case Format::json: return table_json(table).dump() + "\n";
    case Format::table: return text_table(table, label);
  }
  return {};
}

std::string render_comparison(const ComparisonReport& report, Format format) {
  if (format == Format::json) {
    ordered_json doc;
    doc["x"] = report.x_label;
    doc["y"] = report.y_label;
    doc["n_from"] = str(report.n_from);
    doc["n_to"] = str(report.n_to);
    doc["identical"] = report.all_identical();
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) {
      ordered_json row;
      row["n"] = str(r.n);
      row["identical"] = r.identical();
      if (r.divergence) {
        row["j"] = str(r.divergence->j);
        row["x_count"] = r.divergence->x_count.to_string();
        row["y_count"] = r.divergence->y_count.to_string();
      }
      row["x_counts"] = counts_json(r.x);
      row["y_counts"] = counts_json(r.y);
      row["total"] = r.x.total().to_string();
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump() + "\n";
  }
  std::ostringstream os;
  if (format == Format::csv) {
    os << "n,verdict,j,count_x,count_y\n";
    for (const auto& r : report.rows) {
      os << r.n << ',' << (r.identical() ? "identical" : "divergent") << ',';
      if (r.divergence) os << r.divergence->j << ',' << r.divergence->x_count << ',' << r.divergence->y_count;
      else os << ",,";
      os << '\n';
    }
    return os.str();
  }
  os << "X: " << report.x_label << "\nY: " << report.y_label << '\n';
  for (const auto& r : report.rows) {
    os << "n=" << r.n << ' ';
    if (r.identical()) {
      os << "identical " << inline_counts(r.x) << '\n';
    } else {
      os << "divergent at j=" << r.divergence->j << ": X=" << r.divergence->x_count
         << " Y=" << r.divergence->y_count << '\n'
         << "  X counts " << inline_counts(r.x) << '\n'
         << "  Y counts " << inline_counts(r.y) << '\n';
    }
  }
  if (const auto* first = report.first_divergence()) {
    os << "verdict: divergent (first at n=" << first->n << ")\n";
  } else {
    os << "verdict: identical for every n in " << report.n_from << ".." << report.n_to << '\n';
  }
  return os.str();
}

std::string render_sieve(const SieveResult& result, Format format, const std::string& label,
                         std::optional<bool> crosscheck) {
  const char* check = crosscheck ? (*crosscheck ? "PASS" : "FAIL") : "SKIPPED";
  if (format == Format::json) {
    ordered_json doc;
    doc["n"] = str(result.n);
    doc["statistic"] = label;
    doc["truncated"] = result.truncated;
    doc["subsets_explored"] = std::to_string(result.subsets_explored);
    ordered_json sums = ordered_json::array();
    for (const auto& s : result.superset_sums) sums.push_back(s.to_string());
    doc["superset_sums"] = std::move(sums);
    if (result.table) {
      doc["counts"] = counts_json(*result.table);
      doc["total"] = result.table->total().to_string();
    }
    doc["crosscheck"] = check;
    return doc.dump() + "\n";
  }
  if (format == Format::csv) {
    // Same layout as a distribution table; truncation is reported on stderr.
    return "n,j,count,total\n" + (result.table ? csv_rows(*result.table) : std::string());
  }
  std::ostringstream os;
  os << "statistic: " << label << "\nn = " << result.n << '\n'
     << "subsets explored: " << result.subsets_explored << '\n';
  for (std::size_t t = 0; t < result.superset_sums.size(); ++t) {
    os << "N_" << t << " = " << result.superset_sums[t] << '\n';
  }
  if (result.truncated) {
    os << "truncated: yes (subset cap reached; no exact table)\n";
  } else {
    for (const auto& [j, c] : result.table->counts()) os << "e_" << j << " = " << c << '\n';
    os << "total = " << result.table->total() << '\n';
  }
  os << "crosscheck: " << check << '\n';
  return os.str();
}

std::string render_report(const HypothesisReport& report, const FamilyPair& pair, Format format) {
  const char* theorem = report.theorem == Theorem::B ? "B" : "C";
  if (format == Format::table) {
    std::ostringstream os;
    os << "pair: " << pair.name() << "\ntheorem " << theorem << " hypotheses, verified up to n = "
       << report.verified_up_to << ": " << to_string(report.status) << '\n';
    if (report.theorem == Theorem::C) os << "subsets explored: " << report.subsets_explored << '\n';
    if (report.witness) os << "witness: " << witness_text(*report.witness, pair) << '\n';
    if (report.status == HypothesisStatus::inconclusive) {
      os << "subset cap reached before every index set was examined\n";
    }
    return os.str();
  }
  ordered_json doc;
  doc["pair"] = pair.name();
  doc["theorem"] = theorem;
  doc["verified_up_to"] = str(report.verified_up_to);
  doc["status"] = to_string(report.status);
  doc["subsets_explored"] = std::to_string(report.subsets_explored);
  if (report.witness) {
    const auto& w = *report.witness;
    ordered_json wj;
    wj["kind"] = kind_name(w.kind);
    ordered_json idx = ordered_json::array();
    for (const auto& i : w.indices) idx.push_back(index_json(i));
    wj["indices"] = std::move(idx);
    if (w.shared_size != 0) wj["shared_element"] = str(w.shared_size);
    if (w.kind == Witness::Kind::weight_mismatch || w.kind == Witness::Kind::union_weight_mismatch) {
      wj["weight_f"] = str(w.weight_f);
      wj["weight_g"] = str(w.weight_g);
    }
    wj["description"] = witness_text(w, pair);
    doc["witness"] = std::move(wj);
  }
  if (format == Format::json) return doc.dump() + "\n";
  std::ostringstream os;
  os << "pair,theorem,verified_up_to,status,witness\n"
     << pair.name() << ',' << theorem << ',' << report.verified_up_to << ','
     << to_string(report.status) << ",\"" << (report.witness ? witness_text(*report.witness, pair) : "")
     << "\"\n";
  return os.str();
}

std::string render_catalog(Format format) {
  const auto& entries = catalog();
  if (format == Format::json) {
    ordered_json list = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json item;
      item["name"] = e.name;
      item["params"] = e.params;
      item["statement"] = e.statement;
      item["x"] = e.x_description;
      item["y"] = e.y_description;
      list.push_back(std::move(item));
    }
    return list.dump() + "\n";
  }
  std::ostringstream os;
  if (format == Format::csv) {
    os << "name,params,statement,x,y\n";
    for (const auto& e : entries) {
      os << e.name << ",\"" << e.params << "\",\"" << e.statement << "\",\"" << e.x_description
         << "\",\"" << e.y_description << "\"\n";
    }
    return os.str();
  }
  for (const auto& e : entries) {
    os << e.name << " — " << e.statement;
    if (!e.params.empty()) os << "  [params: " << e.params << "]";
    os << "\n    X: " << e.x_description << "\n    Y: " << e.y_description << '\n';
  }
  return os.str();
}

}  // namespace partstat
