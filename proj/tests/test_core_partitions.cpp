#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "partstat/error.hpp"
#include "partstat/partitions.hpp"

using namespace partstat;

namespace {

Multiset random_multiset(std::mt19937_64& rng, std::int64_t max_size, int max_entries) {
  std::uniform_int_distribution<std::int64_t> size(1, max_size);
  std::uniform_int_distribution<std::int64_t> mult(1, 3);
  std::uniform_int_distribution<int> count(0, max_entries);
  std::vector<std::pair<Part, Multiplicity>> e;
  for (int k = count(rng); k > 0; --k) e.emplace_back(size(rng), mult(rng));
  return Multiset::from_entries(e);
}

std::vector<std::vector<Part>> collect(std::int64_t n) {
  std::vector<std::vector<Part>> out;
  for_each_partition(n, [&](const std::vector<Part>& p) { out.push_back(p); });
  return out;
}

}  // namespace

TEST_CASE("weight") {
  CHECK(weight(Multiset{}) == 0);
  CHECK(weight(Multiset{{2, 1}, {4, 1}}) == 6);
  CHECK(weight(Multiset{{1, 2}, {2, 2}}) == 6);
}

TEST_CASE("multiset construction rejects bad entries and drops zero multiplicities") {
  CHECK_THROWS_AS(Multiset({{0, 1}}), Error);
  CHECK_THROWS_AS(Multiset({{3, -1}}), Error);
  Multiset m{{3, 0}, {2, 1}, {2, 1}};
  CHECK(m.entries().size() == 1);
  CHECK(m.multiplicity(2) == 2);
  CHECK(m.multiplicity(3) == 0);
  CHECK(Multiset::from_parts({1, 2, 4, 2}).to_string() == "4,2,2,1");
  CHECK(Multiset{}.to_string().empty());
}

TEST_CASE("contains") {
  CHECK(contains(Multiset{{3, 1}, {2, 2}, {1, 1}}, Multiset{{2, 2}}));
  CHECK_FALSE(contains(Multiset{{3, 1}, {1, 1}}, Multiset{{2, 1}}));
  CHECK(contains(Multiset{{5, 1}}, Multiset{}));
  CHECK(contains(Multiset{}, Multiset{}));
  CHECK_FALSE(contains(Multiset{{2, 1}}, Multiset{{2, 2}}));
}

TEST_CASE("remove") {
  CHECK(remove(Multiset{{2, 2}, {1, 1}}, Multiset{{2, 2}}) == Multiset{{1, 1}});
  CHECK(remove(Multiset{{4, 1}}, Multiset{}) == Multiset{{4, 1}});
  CHECK(remove(Multiset{{3, 2}}, Multiset{{3, 1}}) == Multiset{{3, 1}});
  try {
    (void)remove(Multiset{{3, 1}}, Multiset{{2, 1}});
    FAIL("expected not contained");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_contained);
    CHECK(std::string(e.what()).find("not contained") != std::string::npos);
  }
}

TEST_CASE("multiset_union is max-multiplicity") {
  CHECK(multiset_union(Multiset{{2, 1}, {4, 1}}, Multiset{{4, 1}, {6, 1}}) ==
        Multiset{{2, 1}, {4, 1}, {6, 1}});
  CHECK(multiset_union(Multiset{{1, 2}, {2, 2}}, Multiset{{2, 2}, {3, 2}}) ==
        Multiset{{1, 2}, {2, 2}, {3, 2}});
  const Multiset a{{7, 3}, {1, 1}};
  CHECK(multiset_union(a, Multiset{}) == a);
}

TEST_CASE("property: remove/add round trip and union laws") {
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 2000; ++iter) {
    const Multiset a = random_multiset(rng, 8, 4);
    const Multiset b = random_multiset(rng, 8, 4);
    const Multiset c = random_multiset(rng, 8, 4);
    const Multiset outer = add(a, b);
    REQUIRE(contains(outer, a));
    const Multiset rest = remove(outer, a);
    CHECK(weight(rest) == weight(outer) - weight(a));
    CHECK(add(rest, a) == outer);

    CHECK(multiset_union(a, b) == multiset_union(b, a));
    CHECK(multiset_union(multiset_union(a, b), c) == multiset_union(a, multiset_union(b, c)));
    CHECK(multiset_union(a, a) == a);
    const Multiset pi = random_multiset(rng, 8, 6);
    CHECK((contains(pi, a) && contains(pi, b)) == contains(pi, multiset_union(a, b)));
  }
}

TEST_CASE("enumerate_partitions: canonical order") {
  auto stream = enumerate_partitions(0);
  auto first = stream.next();
  REQUIRE(first.has_value());
  CHECK(first->parts().empty());
  CHECK(first->n() == 0);
  CHECK_FALSE(stream.next().has_value());

  const std::vector<std::vector<Part>> four = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(collect(4) == four);

  std::size_t count = 0;
  for (auto s = enumerate_partitions(10); auto p = s.next();) {
    CHECK(p->n() == 10);
    ++count;
  }
  CHECK(count == 42);
}

TEST_CASE("enumerate_partitions matches an independent recursive enumerator, in order") {
  for (std::int64_t n = 0; n <= 18; ++n) CHECK(collect(n) == oracle::partitions(n));
}

TEST_CASE("enumeration is duplicate free and the length equals p(n) for n <= 30") {
  for (std::int64_t n = 0; n <= 30; ++n) {
    std::set<std::string> seen;
    std::size_t length = 0;
    for_each_partition(n, [&](const std::vector<Part>& p) {
      seen.insert(Multiset::from_parts(p).to_string());
      ++length;
    });
    CHECK(seen.size() == length);
    CHECK(ExactCount(length) == count_partitions(n));
  }
}

TEST_CASE("bounded largest part") {
  std::size_t count = 0;
  for (PartitionStream s(10, 3); s.current() != nullptr; s.advance()) {
    CHECK(s.current()->front() <= 3);
    ++count;
  }
  // Partitions of 10 into parts <= 3.
  const auto expected = oracle::restricted_counts(10, [](std::int64_t p) { return p <= 3; }, false);
  CHECK(count == expected[10]);
  CHECK(PartitionStream(3, 0).current() == nullptr);
}

TEST_CASE("count_partitions") {
  CHECK(count_partitions(-3) == ExactCount(0));
  CHECK(count_partitions(0) == ExactCount(1));
  CHECK(count_partitions(6) == ExactCount(11));
  CHECK(count_partitions(100) == ExactCount(190569292));
  const auto dp = oracle::partition_numbers(100);
  CHECK(dp[100] == 190569292u);
  for (std::int64_t n = 0; n <= 100; ++n) CHECK(count_partitions(n) == ExactCount(dp[n]));
  // Beyond 64 bits: p(500) = 2300165032574323995027
  CHECK(count_partitions(500).to_string() == "2300165032574323995027");
}

TEST_CASE("count_partitions is safe under concurrent first use") {
  std::vector<std::string> results(8);
  std::vector<std::jthread> pool;
  for (std::size_t k = 0; k < results.size(); ++k) {
    pool.emplace_back([&results, k] { results[k] = count_partitions(700 + static_cast<std::int64_t>(k % 2)).to_string(); });
  }
  pool.clear();
  for (std::size_t k = 2; k < results.size(); ++k) CHECK(results[k] == results[k % 2]);
}

TEST_CASE("count_containing") {
  CHECK(count_containing(4, Multiset{{2, 2}}) == ExactCount(1));
  CHECK(count_containing(6, Multiset{{2, 1}, {4, 1}}) == ExactCount(1));
  CHECK(count_containing(10, Multiset{{3, 1}}) == ExactCount(15));
  CHECK(count_containing(2, Multiset{{5, 1}}) == ExactCount(0));
}

TEST_CASE("property: count_containing equals brute force for n <= 20") {
  std::mt19937_64 rng(7);
  for (std::int64_t n = 0; n <= 20; ++n) {
    const auto all = oracle::partitions(n);
    for (int iter = 0; iter < 25; ++iter) {
      const Multiset m = random_multiset(rng, std::max<std::int64_t>(1, n), 3);
      if (weight(m) > n) continue;
      const auto pattern = m.parts_descending();
      std::uint64_t brute = 0;
      for (const auto& p : all) brute += oracle::contains(p, pattern) ? 1 : 0;
      CHECK(count_containing(n, m) == ExactCount(brute));
    }
  }
}

TEST_CASE("Partition validates its weight") {
  CHECK_THROWS_AS(Partition(Multiset{{2, 1}}, 3), Error);
  CHECK_THROWS_AS(Partition(Multiset{}, -1), Error);
  CHECK(Partition::from_parts({2, 2, 1}).n() == 5);
}
