#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace oracle {

std::vector<double> growth(const std::vector<std::string>& forms) {
  std::vector<double> n;
  for (std::size_t t = 1; t <= forms.size(); ++t) {
    std::set<std::string> seen(forms.begin(), forms.begin() + static_cast<long>(t));
    n.push_back(static_cast<double>(seen.size()));
  }
  return n;
}

std::vector<std::pair<std::size_t, std::string>> tally(const std::vector<std::string>& forms) {
  std::map<std::string, std::size_t> counts;
  for (const auto& f : forms) counts[f]++;
  std::vector<std::pair<std::size_t, std::string>> out;
  for (const auto& [type, count] : counts) out.emplace_back(count, type);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  return out;
}

Ols closed_form_ols(const std::vector<long double>& x, const std::vector<long double>& y) {
  const auto n = static_cast<long double>(x.size());
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  Ols r;
  r.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  r.intercept = (sy - r.slope * sx) / n;
  long double rss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double e = y[i] - r.intercept - r.slope * x[i];
    rss += e * e;
  }
  const long double sxx_c = sxx - sx * sx / n;
  r.ses = std::sqrt(rss / (n - 2) / sxx_c);
  return r;
}

std::vector<std::size_t> gaps(const std::vector<std::string>& forms, const std::string& key) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i] == key) pos.push_back(i + 1);
  }
  std::vector<std::size_t> g;
  for (std::size_t i = 1; i < pos.size(); ++i) g.push_back(pos[i] - pos[i - 1]);
  return g;
}

std::optional<double> burstiness(const std::vector<std::size_t>& g) {
  if (g.size() < 2) return std::nullopt;
  long double mean = 0;
  for (auto v : g) mean += v;
  mean /= g.size();
  long double var = 0;
  for (auto v : g) var += (v - mean) * (v - mean);
  const long double sd = std::sqrt(var / g.size());
  return static_cast<double>((sd - mean) / (sd + mean));
}

std::optional<double> memory(const std::vector<std::size_t>& g) {
  if (g.size() < 3) return std::nullopt;
  std::vector<double> a(g.begin(), g.end() - 1);
  std::vector<double> b(g.begin() + 1, g.end());
  auto constant = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
  };
  if (constant(a) || constant(b)) return std::nullopt;
  return pearson(a, b);
}

std::size_t max_run(const std::vector<std::string>& forms) {
  std::vector<bool> first(forms.size(), false);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    first[i] = std::find(forms.begin(), forms.begin() + static_cast<long>(i), forms[i]) == forms.begin() + static_cast<long>(i);
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i; j < forms.size(); ++j) {
      bool ok = true;
      for (std::size_t k = i; k <= j && ok; ++k) ok = !first[k];
      if (ok) best = std::max(best, j - i + 1);
    }
  }
  return best;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<long double>(x.size());
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
  }
  const long double num = n * sxy - sx * sy;
  const long double den = std::sqrt(n * sxx - sx * sx) * std::sqrt(n * syy - sy * sy);
  return static_cast<double>(num / den);
}

}  // namespace oracle
