#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace props {

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

Result growth_curve(std::size_t cases, std::uint64_t seed);
Result averaged_growth(std::size_t cases, std::uint64_t seed);
Result rank_table(std::size_t cases, std::uint64_t seed);
Result recode(std::size_t cases, std::uint64_t seed);
Result ttr_bounds(std::size_t cases, std::uint64_t seed);
Result proportion_sums(std::size_t cases, std::uint64_t seed);
Result filter_idempotence(std::size_t cases, std::uint64_t seed);
Result group_conservation(std::size_t cases, std::uint64_t seed);
Result tokenizer(std::size_t cases, std::uint64_t seed);
Result clean_idempotence(std::size_t cases, std::uint64_t seed);
Result gap_statistics(std::size_t cases, std::uint64_t seed);
Result pearson(std::size_t cases, std::uint64_t seed);
Result unique_runs(std::size_t cases, std::uint64_t seed);
Result jsonl_round_trip(std::size_t cases, std::uint64_t seed);
Result exact_fit(std::size_t cases, std::uint64_t seed);

using Check = std::function<Result(std::size_t, std::uint64_t)>;

/// The invariant suite the acceptance gate reports on, in report order.
std::vector<std::pair<std::string, Check>> invariant_suite();

}  // namespace props
