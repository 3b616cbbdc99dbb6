#pragma once

#include <optional>
#include <string>

#include "partstat/distribution.hpp"
#include "partstat/families.hpp"
#include "partstat/sieve.hpp"

namespace partstat {

enum class Format { table, csv, json };

/// Parses "table", "csv" or "json"; throws Error(invalid_argument) otherwise.
Format parse_format(const std::string& name);

// Machine formats (csv, json) print every number as a decimal string and
// are byte-stable: key order is fixed and nothing depends on thread count.

/// csv header: n,j,count,total
/// json: {"n": "4", "counts": {"0": "2", "1": "3"}, "total": "5"}
std::string render_table(const DistributionTable& table, Format format, const std::string& label = {});
std::string render_comparison(const ComparisonReport& report, Format format);
std::string render_sieve(const SieveResult& result, Format format, const std::string& label,
                         std::optional<bool> crosscheck);
std::string render_report(const HypothesisReport& report, const FamilyPair& pair, Format format);
std::string render_catalog(Format format);

const char* to_string(HypothesisStatus status);

}  // namespace partstat
