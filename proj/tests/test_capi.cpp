#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "partstat/partstat.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  psx_string_free(s);
  return out;
}

psx_pair* builtin(const char* name, const psx_params* params = nullptr) {
  psx_pair* pair = nullptr;
  REQUIRE(psx_pair_builtin(name, params, &pair) == PSX_OK);
  return pair;
}

}  // namespace

TEST_CASE("status codes and last error") {
  psx_pair* pair = nullptr;
  CHECK(psx_pair_builtin("no_such_pair", nullptr, &pair) == PSX_ERR_UNKNOWN_NAME);
  CHECK(pair == nullptr);
  CHECK(std::string(psx_last_error()).find("no_such_pair") != std::string::npos);
  CHECK(psx_pair_builtin(nullptr, nullptr, &pair) == PSX_ERR_INVALID_ARGUMENT);
  CHECK(psx_pair_parse("{", &pair) == PSX_ERR_PARSE);
  CHECK(psx_pair_load("/nonexistent.json", &pair) == PSX_ERR_IO);
  psx_params bad{};
  bad.has_d = 1;
  bad.d = 1;
  CHECK(psx_pair_builtin("glaisher", &bad, &pair) == PSX_ERR_INVALID_ARGUMENT);
  CHECK(psx_pair_parse(R"({"name":"z","F":[{"entries":[{"size":[0,1,-1],"mult":[0,1]}]}],
                          "G":[{"entries":[{"size":[0,1,0],"mult":[0,1]}]}]})", &pair) == PSX_ERR_INVARIANT);
  psx_pair_free(nullptr);
}

TEST_CASE("distribution through handles") {
  psx_pair* pair = builtin("euler");
  CHECK(std::string(psx_pair_name(pair)) == "euler");
  psx_statistic* x = nullptr;
  REQUIRE(psx_statistic_from_pair(pair, PSX_SIDE_X, &x) == PSX_OK);
  const int64_t parts[] = {4, 2, 2, 1};
  int64_t value = -1;
  REQUIRE(psx_statistic_evaluate(x, parts, 4, &value) == PSX_OK);
  CHECK(value == 2);
  REQUIRE(psx_statistic_evaluate(x, nullptr, 0, &value) == PSX_OK);
  CHECK(value == 0);

  psx_table* table = nullptr;
  REQUIRE(psx_distribution(x, 4, &table) == PSX_OK);
  CHECK(psx_table_n(table) == 4);
  char* s = nullptr;
  REQUIRE(psx_table_count(table, 0, &s) == PSX_OK);
  CHECK(take(s) == "2");
  REQUIRE(psx_table_count(table, 7, &s) == PSX_OK);
  CHECK(take(s) == "0");
  REQUIRE(psx_table_total(table, &s) == PSX_OK);
  CHECK(take(s) == "5");
  REQUIRE(psx_table_render(table, PSX_FORMAT_CSV, &s) == PSX_OK);
  CHECK(take(s) == "n,j,count,total\n4,0,2,5\n4,1,3,5\n");
  CHECK(psx_distribution(x, -2, &table) == PSX_ERR_INVALID_ARGUMENT);

  psx_table_free(table);
  psx_statistic_free(x);
  psx_pair_free(pair);
}

TEST_CASE("count_partitions beyond 64 bits") {
  char* s = nullptr;
  REQUIRE(psx_count_partitions(100, &s) == PSX_OK);
  CHECK(take(s) == "190569292");
  REQUIRE(psx_count_partitions(500, &s) == PSX_OK);
  CHECK(take(s) == "2300165032574323995027");
  REQUIRE(psx_count_partitions(-4, &s) == PSX_OK);
  CHECK(take(s) == "0");
}

TEST_CASE("compare, sieve and check through handles") {
  psx_pair* pair = builtin("remmel_consecutive");
  psx_statistic *x = nullptr, *y = nullptr;
  REQUIRE(psx_statistic_from_pair(pair, PSX_SIDE_X, &x) == PSX_OK);
  REQUIRE(psx_statistic_from_pair(pair, PSX_SIDE_Y, &y) == PSX_OK);
  psx_comparison* cmp = nullptr;
  REQUIRE(psx_compare(x, y, 1, 18, &cmp) == PSX_OK);
  CHECK(psx_comparison_identical(cmp) == 1);
  CHECK(psx_comparison_first_divergence(cmp) == -1);
  psx_comparison_free(cmp);

  psx_sieve_result* res = nullptr;
  REQUIRE(psx_sieve(pair, PSX_SIDE_Y, 18, 1000000, &res) == PSX_OK);
  CHECK(psx_sieve_truncated(res) == 0);
  CHECK(psx_sieve_crosscheck(res) == 1);
  REQUIRE(psx_sieve_table(res) != nullptr);
  psx_table* brute = nullptr;
  REQUIRE(psx_distribution(y, 18, &brute) == PSX_OK);
  CHECK(psx_table_equal(psx_sieve_table(res), brute) == 1);
  psx_table_free(brute);
  psx_sieve_free(res);

  REQUIRE(psx_sieve(pair, PSX_SIDE_Y, 18, 2, &res) == PSX_OK);
  CHECK(psx_sieve_truncated(res) == 1);
  CHECK(psx_sieve_crosscheck(res) == -1);
  CHECK(psx_sieve_table(res) == nullptr);
  CHECK(psx_sieve_subsets_explored(res) == 2);
  psx_sieve_free(res);

  psx_report* report = nullptr;
  REQUIRE(psx_check(pair, PSX_THEOREM_B, 30, 1000, &report) == PSX_OK);
  CHECK(psx_report_verdict(report) == PSX_VIOLATED);
  CHECK(psx_report_witness_valid(report) == 1);
  CHECK(psx_report_shared_element(report) == 4);
  char* s = nullptr;
  REQUIRE(psx_report_render(report, PSX_FORMAT_JSON, &s) == PSX_OK);
  CHECK(take(s).find("shared_support_F") != std::string::npos);
  psx_report_free(report);

  REQUIRE(psx_check(pair, PSX_THEOREM_C, 24, 1000000, &report) == PSX_OK);
  CHECK(psx_report_verdict(report) == PSX_HOLDS);
  CHECK(psx_report_witness_valid(report) == 0);
  psx_report_free(report);

  psx_statistic_free(x);
  psx_statistic_free(y);
  psx_pair_free(pair);
}

TEST_CASE("native statistics and andrews params") {
  psx_statistic* prose = nullptr;
  REQUIRE(psx_statistic_native("mod6_Y_prose", nullptr, &prose) == PSX_OK);
  CHECK(std::string(psx_statistic_label(prose)) == "mod6_Y_prose");
  psx_table* t = nullptr;
  REQUIRE(psx_distribution(prose, 6, &t) == PSX_OK);
  char* s = nullptr;
  REQUIRE(psx_table_render(t, PSX_FORMAT_JSON, &s) == PSX_OK);
  CHECK(take(s) == "{\"n\":\"6\",\"counts\":{\"0\":\"2\",\"1\":\"7\",\"2\":\"2\"},\"total\":\"11\"}\n");
  psx_table_free(t);
  psx_statistic_free(prose);

  psx_statistic* unknown = nullptr;
  CHECK(psx_statistic_native("crank", nullptr, &unknown) == PSX_ERR_UNKNOWN_NAME);

  const int64_t m1[] = {1, 2, 4, 8, 16};
  psx_params params{};
  params.m1 = m1;
  params.m1_len = 5;
  params.has_bound = 1;
  params.bound = 20;
  psx_pair* pair = builtin("andrews", &params);
  REQUIRE(psx_pair_render(pair, &s) == PSX_OK);
  const auto doc = take(s);
  psx_pair* again = nullptr;
  REQUIRE(psx_pair_parse(doc.c_str(), &again) == PSX_OK);
  REQUIRE(psx_pair_render(again, &s) == PSX_OK);
  CHECK(take(s) == doc);
  psx_pair_free(again);
  psx_pair_free(pair);
}

TEST_CASE("thread override gives identical output") {
  psx_pair* pair = builtin("mod6");
  psx_statistic* y = nullptr;
  REQUIRE(psx_statistic_from_pair(pair, PSX_SIDE_Y, &y) == PSX_OK);
  std::string outputs[2];
  const unsigned settings[2] = {1, 6};
  for (int k = 0; k < 2; ++k) {
    REQUIRE(psx_set_threads(settings[k]) == PSX_OK);
    psx_table* t = nullptr;
    REQUIRE(psx_distribution(y, 24, &t) == PSX_OK);
    char* s = nullptr;
    REQUIRE(psx_table_render(t, PSX_FORMAT_JSON, &s) == PSX_OK);
    outputs[k] = take(s);
    psx_table_free(t);
  }
  psx_set_threads(0);
  CHECK(outputs[0] == outputs[1]);
  psx_statistic_free(y);
  psx_pair_free(pair);
}

TEST_CASE("catalog") {
  char* s = nullptr;
  REQUIRE(psx_catalog_render(PSX_FORMAT_TABLE, &s) == PSX_OK);
  const auto text = take(s);
  CHECK(text.find("euler — Theorem 1") != std::string::npos);
  CHECK(std::string(psx_version()).size() > 0);
}
