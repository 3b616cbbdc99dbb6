// partstat: command-line front end over the partstat C API.
//
// Exit codes: 0 verified / success, 1 divergence or hypothesis violation,
// 2 usage or input error, 3 subset cap reached.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partstat/partstat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError {
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, HandleDeleter<T, Free>>;

using Pair = Handle<psx_pair, psx_pair_free>;
using Stat = Handle<psx_statistic, psx_statistic_free>;
using Table = Handle<psx_table, psx_table_free>;
using Comparison = Handle<psx_comparison, psx_comparison_free>;
using SieveResult = Handle<psx_sieve_result, psx_sieve_free>;
using Report = Handle<psx_report, psx_report_free>;

void check(psx_status status) {
  if (status != PSX_OK) throw UsageError{psx_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  psx_string_free(s);
  return out;
}

struct Options {
  std::string pair;
  std::string pair_file;
  std::optional<std::int64_t> d;
  std::string m1_file;
  std::vector<std::int64_t> m1;
  std::string side = "X";
  std::int64_t n = 0;
  std::int64_t n_min = 1;
  std::int64_t n_max = 30;
  std::string theorem = "b";
  std::uint64_t subset_cap = 5'000'000;
  std::string format = "table";
  bool prose_y = false;
};

psx_format format_of(const std::string& f) {
  if (f == "csv") return PSX_FORMAT_CSV;
  if (f == "json") return PSX_FORMAT_JSON;
  return PSX_FORMAT_TABLE;
}

psx_side side_of(const std::string& s) { return (s == "Y" || s == "y") ? PSX_SIDE_Y : PSX_SIDE_X; }

// `bound` is the largest n the command will ask about; andrews needs it.
Pair open_pair(const Options& o, std::int64_t bound) {
  if (o.pair.empty() == o.pair_file.empty()) {
    throw UsageError{"exactly one of --pair or --pair-file is required"};
  }
  psx_pair* raw = nullptr;
  if (!o.pair_file.empty()) {
    check(psx_pair_load(o.pair_file.c_str(), &raw));
    return Pair(raw);
  }
  psx_params params{};
  if (o.d) {
    params.has_d = 1;
    params.d = *o.d;
  }
  std::vector<std::int64_t> m1 = o.m1;
  if (!o.m1_file.empty()) {
    int64_t* values = nullptr;
    size_t len = 0;
    check(psx_m1_load(o.m1_file.c_str(), &values, &len));
    m1.insert(m1.end(), values, values + len);
    psx_int_array_free(values);
  }
  if (!o.m1_file.empty() || !o.m1.empty()) {
    params.m1 = m1.data();
    params.m1_len = m1.size();
  }
  params.has_bound = 1;
  params.bound = std::max<std::int64_t>(bound, 1);
  check(psx_pair_builtin(o.pair.c_str(), &params, &raw));
  return Pair(raw);
}

Stat side_statistic(const Options& o, const psx_pair* pair, psx_side side) {
  psx_statistic* raw = nullptr;
  if (side == PSX_SIDE_Y && o.prose_y) {
    if (o.pair != "mod6") throw UsageError{"--prose-y only applies to --pair mod6"};
    check(psx_statistic_native("mod6_Y_prose", nullptr, &raw));
  } else {
    check(psx_statistic_from_pair(pair, side, &raw));
  }
  return Stat(raw);
}

void require_family_side(const Options& o) {
  if (o.prose_y) throw UsageError{"--prose-y has no family form; use it with dist or compare"};
}

int cmd_catalog(const Options& o) {
  char* out = nullptr;
  check(psx_catalog_render(format_of(o.format), &out));
  std::cout << take(out);
  return kExitOk;
}

int cmd_dist(const Options& o) {
  if (o.n < 0) throw UsageError{"--n must be >= 0"};
  auto pair = open_pair(o, o.n);
  auto stat = side_statistic(o, pair.get(), side_of(o.side));
  psx_table* raw = nullptr;
  check(psx_distribution(stat.get(), o.n, &raw));
  Table table(raw);
  if (format_of(o.format) == PSX_FORMAT_TABLE) {
    std::cout << "pair: " << psx_pair_name(pair.get()) << "\nstatistic: " << psx_statistic_label(stat.get())
              << '\n';
  }
  char* out = nullptr;
  check(psx_table_render(table.get(), format_of(o.format), &out));
  std::cout << take(out);
  return kExitOk;
}

int cmd_compare(const Options& o) {
  if (o.n_min < 0 || o.n_min > o.n_max) throw UsageError{"need 0 <= --n-min <= --n-max"};
  auto pair = open_pair(o, o.n_max);
  auto x = side_statistic(o, pair.get(), PSX_SIDE_X);
  auto y = side_statistic(o, pair.get(), PSX_SIDE_Y);
  psx_comparison* raw = nullptr;
  check(psx_compare(x.get(), y.get(), o.n_min, o.n_max, &raw));
  Comparison cmp(raw);
  char* out = nullptr;
  check(psx_comparison_render(cmp.get(), format_of(o.format), &out));
  std::cout << take(out);
  return psx_comparison_identical(cmp.get()) ? kExitOk : kExitFinding;
}

int cmd_sieve(const Options& o) {
  require_family_side(o);
  if (o.n < 0) throw UsageError{"--n must be >= 0"};
  if (o.subset_cap == 0) throw UsageError{"--subset-cap must be > 0"};
  auto pair = open_pair(o, o.n);
  psx_sieve_result* raw = nullptr;
  check(psx_sieve(pair.get(), side_of(o.side), o.n, o.subset_cap, &raw));
  SieveResult res(raw);
  char* out = nullptr;
  check(psx_sieve_render(res.get(), format_of(o.format), &out));
  std::cout << take(out);
  if (psx_sieve_truncated(res.get())) {
    std::cerr << "partstat: subset cap " << o.subset_cap << " reached; result truncated\n";
    return kExitCap;
  }
  return psx_sieve_crosscheck(res.get()) == 1 ? kExitOk : kExitFinding;
}

int cmd_check(const Options& o) {
  require_family_side(o);
  if (o.n_max < 1) throw UsageError{"--n-max must be >= 1"};
  if (o.subset_cap == 0) throw UsageError{"--subset-cap must be > 0"};
  const bool b = o.theorem == "b" || o.theorem == "B";
  auto pair = open_pair(o, o.n_max);
  psx_report* raw = nullptr;
  check(psx_check(pair.get(), b ? PSX_THEOREM_B : PSX_THEOREM_C, o.n_max, o.subset_cap, &raw));
  Report report(raw);
  char* out = nullptr;
  check(psx_report_render(report.get(), format_of(o.format), &out));
  std::cout << take(out);
  switch (psx_report_verdict(report.get())) {
    case PSX_HOLDS: return kExitOk;
    case PSX_VIOLATED:
      if (!psx_report_witness_valid(report.get())) {
        std::cerr << "partstat: witness failed independent re-validation\n";
        return kExitUsage;
      }
      return kExitFinding;
    case PSX_INCONCLUSIVE: return kExitCap;
  }
  return kExitUsage;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
}

void add_pair_options(CLI::App* cmd, Options& o) {
  auto* pair = cmd->add_option("--pair", o.pair, "Built-in pair (see `catalog`)");
  auto* file = cmd->add_option("--pair-file", o.pair_file, "Family-pair JSON document");
  pair->excludes(file);
  cmd->add_option("--d", o.d, "glaisher: d > 1");
  cmd->add_option("--m1-file", o.m1_file, "andrews: M1, one integer per line");
  cmd->add_option("--m1", o.m1, "andrews: M1 given inline")->delimiter(',');
  add_format(cmd, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distributions and hypothesis checks for partition statistics", "partstat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(psx_version()));
  Options o;

  auto* catalog = app.add_subcommand("catalog", "List the built-in statistic pairs");
  add_format(catalog, o);

  auto* dist = app.add_subcommand("dist", "Distribution table of one side by full enumeration");
  add_pair_options(dist, o);
  dist->add_option("--side", o.side, "X (F family) or Y (G family)")->capture_default_str()
      ->check(CLI::IsMember({"X", "Y", "x", "y"}));
  dist->add_option("--n", o.n, "Integer to partition")->required();
  dist->add_flag("--prose-y", o.prose_y, "mod6: use the prose reading of Y");

  auto* compare = app.add_subcommand("compare", "Compare the X and Y distributions over a range of n");
  add_pair_options(compare, o);
  compare->add_option("--n-min", o.n_min, "First n")->capture_default_str();
  compare->add_option("--n-max", o.n_max, "Last n")->capture_default_str();
  compare->add_flag("--prose-y", o.prose_y, "mod6: use the prose reading of Y");

  auto* sieve = app.add_subcommand("sieve", "Inclusion-exclusion distribution, cross-checked by enumeration");
  add_pair_options(sieve, o);
  sieve->add_option("--side", o.side, "X (F family) or Y (G family)")->capture_default_str()
      ->check(CLI::IsMember({"X", "Y", "x", "y"}));
  sieve->add_option("--n", o.n, "Integer to partition")->required();
  sieve->add_option("--subset-cap", o.subset_cap, "Maximum subsets explored")->capture_default_str();
  sieve->add_flag("--prose-y", o.prose_y, "Rejected: the prose statistic has no family");

  auto* check_cmd = app.add_subcommand("check", "Check the hypotheses of Theorem B or C up to n-max");
  add_pair_options(check_cmd, o);
  check_cmd->add_option("--theorem", o.theorem, "b or c")->check(CLI::IsMember({"b", "c", "B", "C"}));
  check_cmd->add_option("--n-max", o.n_max, "Largest weight examined")->capture_default_str();
  check_cmd->add_option("--subset-cap", o.subset_cap, "Maximum index sets explored (theorem c)")
      ->capture_default_str();
  check_cmd->add_flag("--prose-y", o.prose_y, "Rejected: the prose statistic has no family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(o);
    if (dist->parsed()) return cmd_dist(o);
    if (compare->parsed()) return cmd_compare(o);
    if (sieve->parsed()) return cmd_sieve(o);
    if (check_cmd->parsed()) return cmd_check(o);
  } catch (const UsageError& e) {
    std::cerr << "partstat: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
