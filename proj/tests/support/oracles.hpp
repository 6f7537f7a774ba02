#pragma once

// Brute-force reference implementations. These deliberately avoid the library's
// code paths (no shared helpers) so that agreement is meaningful.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// N(t) by rebuilding the set of the first t tokens for every t.
std::vector<double> growth(const std::vector<std::string>& forms);

/// (count, type) multiset, sorted by count descending then type.
std::vector<std::pair<std::size_t, std::string>> tally(const std::vector<std::string>& forms);

struct Ols {
  long double slope = 0;
  long double intercept = 0;
  long double ses = 0;
};

/// Normal-equation OLS in long double on already-transformed coordinates.
Ols closed_form_ols(const std::vector<long double>& x, const std::vector<long double>& y);

/// 1-based positions of `key`, then consecutive differences.
std::vector<std::size_t> gaps(const std::vector<std::string>& forms, const std::string& key);

std::optional<double> burstiness(const std::vector<std::size_t>& gaps);
std::optional<double> memory(const std::vector<std::size_t>& gaps);

/// Longest window of consecutive tokens none of which is a first occurrence.
std::size_t max_run(const std::vector<std::string>& forms);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace oracle
