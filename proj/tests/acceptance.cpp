// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected values come from the oracles in oracles.hpp or
// from small hand-checked cases.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "partstat/distribution.hpp"
#include "partstat/render.hpp"
#include "partstat/sieve.hpp"
#include "run_cli.hpp"

using namespace partstat;

namespace {

// Collects failure notes for one criterion.
struct Checker {
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  std::printf("[%s] criterion %d: %s\n", c.notes.empty() ? "PASS" : "FAIL", number, title.c_str());
  for (const auto& note : c.notes) std::printf("       %s\n", note.c_str());
  if (!c.notes.empty()) ++failures;
}

bool identical(const FamilyPair& pair, std::int64_t n_max) {
  return compare(Statistic::family_induced(pair.f()), Statistic::family_induced(pair.g()), 1, n_max, 4)
      .all_identical();
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<FamilyPair> builtin_sides_pairs(std::int64_t bound) {
  std::vector<FamilyPair> out = {builtin_pair("euler"), builtin_pair("squares"), builtin_pair("mod6"),
                                 builtin_pair("remmel_consecutive")};
  for (std::int64_t d = 2; d <= 5; ++d) out.push_back(builtin_pair("glaisher", {d, {}, {}}));
  out.push_back(builtin_pair("andrews", {{}, range(1, bound), bound}));
  out.push_back(builtin_pair("andrews", {{}, std::vector<std::int64_t>{1, 2, 4, 8, 16}, bound}));
  return out;
}

}  // namespace

int main() {
  criterion(1, "euler pair identically distributed for 1 <= n <= 40", [](Checker& c) {
    const auto pair = builtin_pair("euler");
    const auto report = compare(Statistic::family_induced(pair.f()), Statistic::family_induced(pair.g()), 1, 40, 4);
    c.expect(report.rows.size() == 40, "expected 40 rows");
    c.expect(report.all_identical(), "divergence at n=" + std::to_string(report.first_divergence() ? report.first_divergence()->n : -1));
    c.expect(run_cli("compare --pair euler --n-max 40").exit_code == 0, "CLI compare did not exit 0");
  });

  criterion(2, "euler j = 0 marginals match distinct-part and odd-part counts", [](Checker& c) {
    const auto distinct = oracle::restricted_counts(40, [](std::int64_t) { return true; }, true);
    const auto odd = oracle::restricted_counts(40, [](std::int64_t p) { return p % 2 == 1; }, false);
    const auto pair = builtin_pair("euler");
    const auto x = Statistic::family_induced(pair.f());
    const auto y = Statistic::family_induced(pair.g());
    for (std::int64_t n = 0; n <= 40; ++n) {
      c.expect(marginal(distribution_bruteforce(x, n, 4), 0) == ExactCount(odd[n]), "X marginal n=" + std::to_string(n));
      c.expect(marginal(distribution_bruteforce(y, n, 4), 0) == ExactCount(distinct[n]),
               "Y marginal n=" + std::to_string(n));
    }
    c.expect(marginal(distribution_bruteforce(y, 5), 0) == ExactCount(3), "distinct-part count at n=5 is not 3");
  });

  criterion(3, "squares, glaisher d=2..5 and andrews pairs identical for n <= 30", [](Checker& c) {
    c.expect(identical(builtin_pair("squares"), 30), "squares");
    for (std::int64_t d = 2; d <= 5; ++d) {
      c.expect(identical(builtin_pair("glaisher", {d, {}, {}}), 30), "glaisher d=" + std::to_string(d));
    }
    // M1 = {1..30} collapses to the euler pair.
    const auto all = builtin_pair("andrews", {{}, range(1, 30), 30});
    c.expect(identical(all, 30), "andrews M1=1..30");
    const auto euler = builtin_pair("euler");
    for (std::int64_t n = 1; n <= 30; ++n) {
      c.expect(distribution_bruteforce(Statistic::family_induced(all.g()), n) ==
                   distribution_bruteforce(Statistic::family_induced(euler.g()), n),
               "andrews M1=1..30 G differs from euler G at n=" + std::to_string(n));
    }
    c.expect(identical(builtin_pair("andrews", {{}, std::vector<std::int64_t>{1, 2, 4, 8, 16}, 30}), 30),
             "andrews M1=powers of two");
    for (const auto& args : {"compare --pair squares --n-max 30", "compare --pair glaisher --d 3 --n-max 30",
                             "compare --pair andrews --m1 1,2,4,8,16 --n-max 30"}) {
      c.expect(run_cli(args).exit_code == 0, std::string("CLI exit != 0: ") + args);
    }
  });

  criterion(4, "remmel_consecutive: identical, Theorem C holds, Theorem B fails at element 4", [](Checker& c) {
    const auto pair = builtin_pair("remmel_consecutive");
    c.expect(identical(pair, 30), "distributions differ for some n <= 30");
    c.expect(check_theorem_c(pair, 24).status == HypothesisStatus::holds, "Theorem C not verified to 24");
    const auto b = check_theorem_b(pair, 30);
    c.expect(b.status == HypothesisStatus::violated, "Theorem B not reported violated");
    c.expect(b.witness && b.witness->shared_size == 4, "witness does not name element 4");
    c.expect(b.witness && b.witness->indices == std::vector<FamilyIndex>{{0, 1}, {0, 2}},
             "witness members are not t=1 and t=2");
    c.expect(run_cli("check --pair remmel_consecutive --theorem c --n-max 24").exit_code == 0, "CLI check c exit");
    c.expect(run_cli("check --pair remmel_consecutive --theorem b --n-max 30").exit_code == 1, "CLI check b exit");
  });

  criterion(5, "sieve equals brute force for every built-in side, n <= 25", [](Checker& c) {
    for (const auto& pair : builtin_sides_pairs(25)) {
      for (const auto* fam : {&pair.f(), &pair.g()}) {
        const auto stat = Statistic::family_induced(*fam);
        for (std::int64_t n = 0; n <= 25; ++n) {
          const auto res = sieve_distribution(*fam, n);
          c.expect(res.table && *res.table == distribution_bruteforce(stat, n, 4),
                   fam->name() + " n=" + std::to_string(n));
        }
      }
    }
    const auto four = sieve_distribution(builtin_pair("euler").f(), 4);
    c.expect(four.table && marginal(*four.table, 0) == ExactCount(2) && marginal(*four.table, 1) == ExactCount(3),
             "euler n=4 is not e_0=2, e_1=3");
  });

  criterion(6, "mod6 family pair identical, prose Y diverges at n = 6", [](Checker& c) {
    c.expect(identical(builtin_pair("mod6"), 30), "mod6 family pair differs for some n <= 30");
    // Independent count of the prose statistic at n = 6 from the recursive enumerator.
    const auto prose6 = oracle::distribution(6, [](const oracle::Parts& p) {
      std::int64_t k = 0;
      for (const auto& [size, mult] : oracle::multiplicities(p)) k += (size % 3 == 0 || mult >= 2) ? 1 : 0;
      return k;
    });
    c.expect(prose6.at(0) == 2 && prose6.at(1) == 7 && prose6.at(2) == 2, "oracle prose counts unexpected");
    const auto report = compare(Statistic::native("mod6_X"), Statistic::native("mod6_Y_prose"), 1, 6);
    c.expect(report.first_divergence() && report.first_divergence()->n == 6, "prose reading does not first diverge at n=6");
    const auto& row = report.rows.back();
    c.expect(row.divergence && row.divergence->j == 0 && row.divergence->x_count == ExactCount(3) &&
                 row.divergence->y_count == ExactCount(2),
             "divergence is not j=0 with X=3, Y=2");
    for (const auto& [j, count] : prose6) {
      c.expect(marginal(row.y, j) == ExactCount(count), "prose Y count mismatch at j=" + std::to_string(j));
    }
    const auto cli = run_cli("compare --pair mod6 --prose-y --n-max 6");
    c.expect(cli.exit_code == 1, "CLI prose compare did not exit 1");
    c.expect(cli.output.find("X=3 Y=2") != std::string::npos, "CLI output lacks the divergent counts");
  });

  criterion(7, "enumeration length equals p(n); p(6) = 11, p(100) = 190569292", [](Checker& c) {
    const auto p = oracle::partition_numbers(100);
    for (std::int64_t n = 0; n <= 30; ++n) {
      std::uint64_t seen = 0;
      auto stream = enumerate_partitions(n);
      while (stream.next()) ++seen;
      c.expect(seen == p[n], "enumeration length n=" + std::to_string(n));
      c.expect(count_partitions(n) == ExactCount(p[n]), "count_partitions n=" + std::to_string(n));
    }
    c.expect(count_partitions(6) == ExactCount(11), "p(6)");
    c.expect(p[100] == 190569292 && count_partitions(100) == ExactCount(p[100]), "p(100)");
  });

  criterion(8, "violation witnesses re-validate and corrupted pairs are caught", [](Checker& c) {
    const auto remmel = builtin_pair("remmel_consecutive");
    const auto b = check_theorem_b(remmel, 30);
    c.expect(b.witness && revalidate_witness(remmel, *b.witness), "remmel witness does not re-validate");
    const auto corrupt = load_family_pair(std::string(PARTSTAT_TEST_DATA) + "/corrupt_weight.json");
    const auto w = check_theorem_b(corrupt, 20);
    c.expect(w.status == HypothesisStatus::violated && w.witness &&
                 w.witness->kind == Witness::Kind::weight_mismatch && revalidate_witness(corrupt, *w.witness),
             "corrupted weight not caught");
    const auto shared = load_family_pair(std::string(PARTSTAT_TEST_DATA) + "/shared_support.json");
    const auto s = check_theorem_b(shared, 20);
    c.expect(s.status == HypothesisStatus::violated && s.witness && revalidate_witness(shared, *s.witness),
             "shared support not caught");
    if (s.witness) {
      auto fake = *s.witness;
      fake.shared_size += 1;
      c.expect(!revalidate_witness(shared, fake), "fabricated witness re-validated");
    }
    for (const auto* file : {"corrupt_weight.json", "shared_support.json"}) {
      c.expect(run_cli("check --pair-file " + data_file(file) + " --theorem b --n-max 20").exit_code == 1,
               std::string("CLI exit != 1 for ") + file);
    }
  });

  return failures == 0 ? 0 : 1;
}
