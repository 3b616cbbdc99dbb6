#include "partstat/partstat.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "partstat/distribution.hpp"
#include "partstat/error.hpp"
#include "partstat/families.hpp"
#include "partstat/parallel.hpp"
#include "partstat/render.hpp"
#include "partstat/sieve.hpp"
#include "partstat/statistics.hpp"

struct psx_pair {
  partstat::FamilyPair value;
};

struct psx_statistic {
  partstat::Statistic value;
};

struct psx_table {
  partstat::DistributionTable value;
};

struct psx_comparison {
  partstat::ComparisonReport value;
};

struct psx_sieve_result {
  partstat::SieveResult value;
  std::string label;
  std::optional<bool> crosscheck;
  std::optional<psx_table> table;
};

struct psx_report {
  partstat::HypothesisReport value;
  partstat::FamilyPair pair;
};

namespace {

thread_local std::string last_error;
std::atomic<unsigned> thread_override{0};

psx_status fail(psx_status status, const std::string& message) {
  last_error = message;
  return status;
}

psx_status map_code(partstat::ErrorCode code) {
  using partstat::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::not_contained: return PSX_ERR_INVALID_ARGUMENT;
    case ErrorCode::unknown_name: return PSX_ERR_UNKNOWN_NAME;
    case ErrorCode::parse: return PSX_ERR_PARSE;
    case ErrorCode::invariant: return PSX_ERR_INVARIANT;
    case ErrorCode::io: return PSX_ERR_IO;
  }
  return PSX_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
psx_status guarded(F&& body) {
  try {
    body();
    return PSX_OK;
  } catch (const partstat::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PSX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PSX_ERR_INTERNAL, e.what());
  }
}

#define PSX_REQUIRE(cond, what) \
  if (!(cond)) return fail(PSX_ERR_INVALID_ARGUMENT, what)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

unsigned threads() {
  const unsigned t = thread_override;
  return t != 0 ? t : partstat::default_thread_count();
}

partstat::Format to_format(psx_format f) {
  switch (f) {
    case PSX_FORMAT_TABLE: return partstat::Format::table;
    case PSX_FORMAT_CSV: return partstat::Format::csv;
    case PSX_FORMAT_JSON: return partstat::Format::json;
  }
  throw partstat::Error(partstat::ErrorCode::invalid_argument, "unknown format");
}

std::optional<std::vector<std::int64_t>> m1_of(const psx_params* p) {
  if (p == nullptr || p->m1 == nullptr) return std::nullopt;
  return std::vector<std::int64_t>(p->m1, p->m1 + p->m1_len);
}

}  // namespace

extern "C" {

const char* psx_version(void) { return "1.0.0"; }

const char* psx_last_error(void) { return last_error.c_str(); }

void psx_string_free(char* s) { std::free(s); }

psx_status psx_set_threads(unsigned n) {
  thread_override = n;
  return PSX_OK;
}

psx_status psx_catalog_render(psx_format format, char** out) {
  PSX_REQUIRE(out != nullptr, "null output pointer");
  return guarded([&] { *out = dup_string(partstat::render_catalog(to_format(format))); });
}

psx_status psx_pair_builtin(const char* name, const psx_params* params, psx_pair** out) {
  PSX_REQUIRE(name != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    partstat::BuiltinParams bp;
    if (params != nullptr && params->has_d) bp.d = params->d;
    if (params != nullptr && params->has_bound) bp.bound = params->bound;
    bp.m1 = m1_of(params);
    *out = new psx_pair{partstat::builtin_pair(name, bp)};
  });
}

psx_status psx_pair_parse(const char* json_text, psx_pair** out) {
  PSX_REQUIRE(json_text != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = new psx_pair{partstat::parse_family_pair(json_text)}; });
}

psx_status psx_pair_load(const char* path, psx_pair** out) {
  PSX_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = new psx_pair{partstat::load_family_pair(path)}; });
}

psx_status psx_pair_render(const psx_pair* pair, char** out) {
  PSX_REQUIRE(pair != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(partstat::render_family_pair(pair->value)); });
}

const char* psx_pair_name(const psx_pair* pair) {
  return pair != nullptr ? pair->value.name().c_str() : "";
}

void psx_pair_free(psx_pair* pair) { delete pair; }

psx_status psx_m1_load(const char* path, int64_t** out, size_t* len) {
  PSX_REQUIRE(path != nullptr && out != nullptr && len != nullptr, "null argument");
  return guarded([&] {
    const auto values = partstat::load_m1_file(path);
    auto* buf = static_cast<int64_t*>(std::malloc(std::max<size_t>(1, values.size()) * sizeof(int64_t)));
    if (buf == nullptr) throw std::bad_alloc();
    std::copy(values.begin(), values.end(), buf);
    *out = buf;
    *len = values.size();
  });
}

void psx_int_array_free(int64_t* values) { std::free(values); }

psx_status psx_statistic_from_pair(const psx_pair* pair, psx_side side, psx_statistic** out) {
  PSX_REQUIRE(pair != nullptr && out != nullptr, "null argument");
  PSX_REQUIRE(side == PSX_SIDE_X || side == PSX_SIDE_Y, "side must be X or Y");
  return guarded([&] {
    const auto& fam = side == PSX_SIDE_X ? pair->value.f() : pair->value.g();
    *out = new psx_statistic{partstat::Statistic::family_induced(fam)};
  });
}

psx_status psx_statistic_native(const char* name, const psx_params* params, psx_statistic** out) {
  PSX_REQUIRE(name != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    partstat::NativeParams np;
    if (params != nullptr && params->has_d) np.d = params->d;
    np.m1 = m1_of(params);
    *out = new psx_statistic{partstat::Statistic::native(name, np)};
  });
}

const char* psx_statistic_label(const psx_statistic* stat) {
  return stat != nullptr ? stat->value.label().c_str() : "";
}

psx_status psx_statistic_evaluate(const psx_statistic* stat, const int64_t* parts, size_t len,
                                  int64_t* value) {
  PSX_REQUIRE(stat != nullptr && value != nullptr && (parts != nullptr || len == 0), "null argument");
  return guarded([&] {
    const std::vector<partstat::Part> list(parts, parts + len);
    *value = stat->value.evaluate(partstat::Partition::from_parts(list));
  });
}

void psx_statistic_free(psx_statistic* stat) { delete stat; }

psx_status psx_distribution(const psx_statistic* stat, int64_t n, psx_table** out) {
  PSX_REQUIRE(stat != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new psx_table{partstat::distribution_bruteforce(stat->value, n, threads())};
  });
}

int64_t psx_table_n(const psx_table* table) { return table != nullptr ? table->value.n() : -1; }

psx_status psx_table_count(const psx_table* table, int64_t j, char** out) {
  PSX_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(partstat::marginal(table->value, j).to_string()); });
}

psx_status psx_table_total(const psx_table* table, char** out) {
  PSX_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(table->value.total().to_string()); });
}

int psx_table_equal(const psx_table* a, const psx_table* b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

psx_status psx_table_render(const psx_table* table, psx_format format, char** out) {
  PSX_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(partstat::render_table(table->value, to_format(format))); });
}

void psx_table_free(psx_table* table) { delete table; }

psx_status psx_count_partitions(int64_t n, char** out) {
  PSX_REQUIRE(out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(partstat::count_partitions(n).to_string()); });
}

psx_status psx_compare(const psx_statistic* x, const psx_statistic* y, int64_t n_from, int64_t n_to,
                       psx_comparison** out) {
  PSX_REQUIRE(x != nullptr && y != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new psx_comparison{partstat::compare(x->value, y->value, n_from, n_to, threads())};
  });
}

int psx_comparison_identical(const psx_comparison* cmp) {
  return cmp != nullptr && cmp->value.all_identical() ? 1 : 0;
}

int64_t psx_comparison_first_divergence(const psx_comparison* cmp) {
  if (cmp == nullptr) return -1;
  const auto* row = cmp->value.first_divergence();
  return row != nullptr ? row->n : -1;
}

psx_status psx_comparison_render(const psx_comparison* cmp, psx_format format, char** out) {
  PSX_REQUIRE(cmp != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = dup_string(partstat::render_comparison(cmp->value, to_format(format))); });
}

void psx_comparison_free(psx_comparison* cmp) { delete cmp; }

psx_status psx_sieve(const psx_pair* pair, psx_side side, int64_t n, uint64_t subset_cap,
                     psx_sieve_result** out) {
  PSX_REQUIRE(pair != nullptr && out != nullptr, "null argument");
  PSX_REQUIRE(side == PSX_SIDE_X || side == PSX_SIDE_Y, "side must be X or Y");
  return guarded([&] {
    const auto& fam = side == PSX_SIDE_X ? pair->value.f() : pair->value.g();
    auto res = std::make_unique<psx_sieve_result>();
    res->value = partstat::sieve_distribution(fam, n, subset_cap, threads());
    res->label = fam.name();
    if (res->value.table) {
      const auto brute =
          partstat::distribution_bruteforce(partstat::Statistic::family_induced(fam), n, threads());
      res->crosscheck = brute == *res->value.table;
      res->table = psx_table{*res->value.table};
    }
    *out = res.release();
  });
}

int psx_sieve_truncated(const psx_sieve_result* res) {
  return res != nullptr && res->value.truncated ? 1 : 0;
}

int psx_sieve_crosscheck(const psx_sieve_result* res) {
  if (res == nullptr || !res->crosscheck) return -1;
  return *res->crosscheck ? 1 : 0;
}

uint64_t psx_sieve_subsets_explored(const psx_sieve_result* res) {
  return res != nullptr ? res->value.subsets_explored : 0;
}

const psx_table* psx_sieve_table(const psx_sieve_result* res) {
  return res != nullptr && res->table ? &*res->table : nullptr;
}

psx_status psx_sieve_render(const psx_sieve_result* res, psx_format format, char** out) {
  PSX_REQUIRE(res != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = dup_string(partstat::render_sieve(res->value, to_format(format), res->label, res->crosscheck));
  });
}

void psx_sieve_free(psx_sieve_result* res) { delete res; }

psx_status psx_check(const psx_pair* pair, psx_theorem theorem, int64_t n_max, uint64_t subset_cap,
                     psx_report** out) {
  PSX_REQUIRE(pair != nullptr && out != nullptr, "null argument");
  PSX_REQUIRE(theorem == PSX_THEOREM_B || theorem == PSX_THEOREM_C, "theorem must be B or C");
  return guarded([&] {
    auto report = theorem == PSX_THEOREM_B
                      ? partstat::check_theorem_b(pair->value, n_max)
                      : partstat::check_theorem_c(pair->value, n_max, subset_cap);
    *out = new psx_report{std::move(report), pair->value};
  });
}

psx_verdict psx_report_verdict(const psx_report* report) {
  if (report == nullptr) return PSX_INCONCLUSIVE;
  switch (report->value.status) {
    case partstat::HypothesisStatus::holds: return PSX_HOLDS;
    case partstat::HypothesisStatus::violated: return PSX_VIOLATED;
    case partstat::HypothesisStatus::inconclusive: return PSX_INCONCLUSIVE;
  }
  return PSX_INCONCLUSIVE;
}

int psx_report_witness_valid(const psx_report* report) {
  if (report == nullptr || !report->value.witness) return 0;
  try {
    return partstat::revalidate_witness(report->pair, *report->value.witness) ? 1 : 0;
  } catch (const std::exception& e) {
    last_error = e.what();
    return 0;
  }
}

int64_t psx_report_shared_element(const psx_report* report) {
  if (report == nullptr || !report->value.witness) return 0;
  return report->value.witness->shared_size;
}

psx_status psx_report_render(const psx_report* report, psx_format format, char** out) {
  PSX_REQUIRE(report != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = dup_string(partstat::render_report(report->value, report->pair, to_format(format)));
  });
}

void psx_report_free(psx_report* report) { delete report; }

}  // extern "C"
