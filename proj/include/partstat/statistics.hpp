#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "partstat/families.hpp"
#include "partstat/partitions.hpp"

namespace partstat {

/// Statistic specialised to partitions of one fixed n.
using BoundStatistic = std::function<std::int64_t(const Multiset&)>;

struct NativeParams {
  std::optional<std::int64_t> d;               // mult_ge
  std::optional<std::vector<std::int64_t>> m1; // not_in_M2, andrews_Y
};

/// A nonnegative-integer-valued function on partitions. Either induced by a
/// family, X(pi) = #{i : F_i contained in pi}, or a named closed-form rule.
class Statistic {
 public:
  static Statistic family_induced(MultisetFamily family, std::string label = {});
  /// Natives: even_sizes, repeated_sizes, square_sizes, mult_ge (d),
  /// mult_ge_size, mod6_X, mod6_Y_prose, not_in_M2 (m1), andrews_Y (m1),
  /// consecutive_even, consecutive_repeated.
  /// Throws Error(unknown_name) or Error(invalid_argument).
  static Statistic native(const std::string& name, const NativeParams& params = {});
  static const std::vector<std::string>& native_names();

  const std::string& label() const noexcept { return label_; }
  bool is_family_induced() const noexcept { return family_ != nullptr; }
  const MultisetFamily* family() const noexcept { return family_.get(); }

  /// Evaluator for partitions of n; family members are resolved once here.
  BoundStatistic bind(std::int64_t n) const;
  std::int64_t evaluate(const Partition& p) const;

 private:
  std::string label_;
  std::shared_ptr<const MultisetFamily> family_;
  std::function<std::int64_t(const Multiset&)> rule_;
};

inline std::int64_t evaluate(const Statistic& stat, const Partition& p) { return stat.evaluate(p); }

}  // namespace partstat
