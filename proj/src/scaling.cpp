#include "convoscale/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "convoscale/errors.hpp"

namespace convoscale {

GrowthCurve growth_curve(std::span<const std::string> forms) {
  if (forms.empty()) throw InvalidArgument("growth_curve: empty token stream");
  GrowthCurve curve;
  curve.unique.reserve(forms.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& form : forms) {
    seen.insert(form);
    curve.unique.push_back(static_cast<double>(seen.size()));
  }
  return curve;
}

GrowthCurve averaged_growth_curve(const Corpus& corpus, const AnalysisUnit& unit) {
  require_tagged_for(corpus, unit);
  std::vector<double> sum;
  std::vector<std::size_t> running;
  for (const auto& conversation : corpus.conversations) {
    const auto forms = form_stream(conversation, unit);
    if (forms.empty()) continue;
    const auto curve = growth_curve(forms);
    if (curve.size() > sum.size()) {
      sum.resize(curve.size(), 0.0);
      running.resize(curve.size(), 0);
    }
    for (std::size_t t = 0; t < curve.size(); ++t) {
      sum[t] += curve.unique[t];
      ++running[t];
    }
  }
  if (sum.empty()) {
    throw InsufficientDataError("no tokens for unit '" + std::string(unit_key(unit)) + "'");
  }
  GrowthCurve averaged;
  averaged.unique.resize(sum.size());
  for (std::size_t t = 0; t < sum.size(); ++t) {
    averaged.unique[t] = sum[t] / static_cast<double>(running[t]);
  }
  return averaged;
}

namespace {

struct Tally {
  std::size_t count = 0;
  std::size_t first = 0;
};

RankTable build_table(std::unordered_map<std::string_view, Tally>& tallies) {
  std::vector<std::pair<std::string_view, Tally>> rows(tallies.begin(), tallies.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second.count != b.second.count) return a.second.count > b.second.count;
    if (a.second.first != b.second.first) return a.second.first < b.second.first;
    return a.first < b.first;
  });
  RankTable table;
  table.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table.push_back({i + 1, std::string(rows[i].first), rows[i].second.count});
  }
  return table;
}

void tally(std::unordered_map<std::string_view, Tally>& tallies, std::span<const std::string> forms,
           std::size_t& position) {
  for (const auto& form : forms) {
    auto [it, inserted] = tallies.try_emplace(form, Tally{0, position});
    ++it->second.count;
    ++position;
  }
}

}  // namespace

RankTable rank_frequency(std::span<const std::string> forms) {
  if (forms.empty()) throw InvalidArgument("rank_frequency: empty token stream");
  std::unordered_map<std::string_view, Tally> tallies;
  std::size_t position = 0;
  tally(tallies, forms, position);
  return build_table(tallies);
}

RankTable rank_frequency(const Corpus& corpus, const AnalysisUnit& unit) {
  require_tagged_for(corpus, unit);
  std::vector<std::vector<std::string>> streams;
  streams.reserve(corpus.conversations.size());
  for (const auto& conversation : corpus.conversations) streams.push_back(form_stream(conversation, unit));

  std::unordered_map<std::string_view, Tally> tallies;
  std::size_t position = 0;
  for (const auto& stream : streams) tally(tallies, stream, position);
  if (tallies.empty()) {
    throw InsufficientDataError("no tokens for unit '" + std::string(unit_key(unit)) + "'");
  }
  return build_table(tallies);
}

RegimeBounds::RegimeBounds(double lo_value, double hi_value, Axis regime_axis)
    : lo(lo_value), hi(hi_value), axis(regime_axis) {
  if (!(lo < hi)) {
    throw InvalidArgument("regime bounds need lo < hi, got " + std::to_string(lo) + " and " +
                          std::to_string(hi));
  }
}

FitResult fit_loglog(std::span<const Point> points, const RegimeBounds& regime) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : points) {
    if (!(p.x > 0.0) || !(p.y > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidArgument("fit_loglog: coordinates must be positive and finite");
    }
    const double lx = std::log10(p.x);
    const double ly = std::log10(p.y);
    if (regime.contains(regime.axis == Axis::X ? lx : ly)) {
      xs.push_back(lx);
      ys.push_back(ly);
    }
  }
  const std::size_t n = xs.size();
  if (n < 3) {
    throw InsufficientDataError("fit_loglog: " + std::to_string(n) +
                                " point(s) inside the regime, need at least 3");
  }

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw InsufficientDataError("fit_loglog: all regime points share one x value");

  FitResult fit;
  fit.exponent = sxy / sxx;
  fit.intercept = mean_y - fit.exponent * mean_x;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.exponent * xs[i]);
    ssr += r * r;
  }
  fit.ses = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  fit.r2 = syy > 0.0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 1.0;
  fit.n_points = n;
  fit.regime = regime;
  return fit;
}

std::vector<Point> curve_points(const GrowthCurve& curve) {
  std::vector<Point> points;
  points.reserve(curve.size());
  for (std::size_t t = 0; t < curve.size(); ++t) {
    points.push_back({static_cast<double>(t + 1), curve.unique[t]});
  }
  return points;
}

std::vector<Point> rank_points(const RankTable& table) {
  std::vector<Point> points;
  points.reserve(table.size());
  for (const auto& entry : table) {
    points.push_back({static_cast<double>(entry.rank), static_cast<double>(entry.count)});
  }
  return points;
}

RegimeMatrix RegimeMatrix::defaults() {
  RegimeMatrix m;
  m.set_corpus_level({2.0, 3.4});
  constexpr std::array<CorpusKind, 3> columns = {CorpusKind::Candor, CorpusKind::MoviesIndividual,
                                                 CorpusKind::MoviesGrouped};
  // Rows follow kAllMacroClasses: noun, verb, other, func, intj.
  constexpr double starts[5][3] = {
      {1.4, 1.0, 1.4}, {1.5, 1.3, 1.5}, {1.5, 1.45, 1.45}, {1.25, 1.15, 1.25}, {1.2, 0.9, 1.4},
  };
  constexpr double ends[5][3] = {
      {3.2, 3.2, 3.2}, {3.0, 3.0, 3.2}, {3.0, 2.6, 3.2}, {1.9, 1.9, 1.9}, {2.1, 2.2, 2.4},
  };
  for (std::size_t row = 0; row < kAllMacroClasses.size(); ++row) {
    for (std::size_t col = 0; col < columns.size(); ++col) {
      m.set(kAllMacroClasses[row], columns[col], {starts[row][col], ends[row][col]});
    }
  }
  return m;
}

void RegimeMatrix::set(MacroClass macro, CorpusKind kind, Cell cell) {
  if (!(cell.start < cell.end)) {
    throw InvalidArgument("regime for " + std::string(macro_key(macro)) + "/" +
                          std::string(kind_name(kind)) + " needs start < end");
  }
  cells_[{macro, kind}] = {cell.start, cell.end};
}

void RegimeMatrix::set_corpus_level(Cell cell) {
  if (!(cell.start < cell.end)) throw InvalidArgument("corpus-level regime needs start < end");
  corpus_level_ = cell;
}

RegimeMatrix::Cell RegimeMatrix::cell(const AnalysisUnit& unit, CorpusKind kind) const {
  if (!unit) return corpus_level_;
  auto it = cells_.find({*unit, kind});
  if (it == cells_.end() && kind == CorpusKind::Generic) it = cells_.find({*unit, CorpusKind::Candor});
  if (it == cells_.end()) {
    throw InvalidArgument("no regime configured for " + std::string(macro_key(*unit)) + "/" +
                          std::string(kind_name(kind)));
  }
  return {it->second.first, it->second.second};
}

RegimeBounds RegimeMatrix::heaps(const AnalysisUnit& unit, CorpusKind kind) const {
  const auto c = cell(unit, kind);
  return {c.start, c.end, Axis::Y};
}

RegimeBounds RegimeMatrix::zipf(const AnalysisUnit& unit, CorpusKind kind) const {
  const auto c = cell(unit, kind);
  return {c.start, c.end, Axis::X};
}

FitResult heaps_fit(const Corpus& corpus, const AnalysisUnit& unit, const RegimeMatrix& regimes) {
  const auto curve = averaged_growth_curve(corpus, unit);
  const auto points = curve_points(curve);
  return fit_loglog(points, regimes.heaps(unit, corpus.kind));
}

FitResult zipf_fit(const Corpus& corpus, const AnalysisUnit& unit, const RegimeMatrix& regimes) {
  const auto table = rank_frequency(corpus, unit);
  const auto points = rank_points(table);
  return fit_loglog(points, regimes.zipf(unit, corpus.kind));
}

PerConversationFits per_conversation_exponents(const Corpus& corpus, const RegimeMatrix& regimes) {
  PerConversationFits result;
  const auto regime = regimes.heaps(std::nullopt, corpus.kind);
  for (const auto& conversation : corpus.conversations) {
    const auto forms = form_stream(conversation);
    if (forms.empty()) {
      ++result.skipped;
      continue;
    }
    try {
      const auto points = curve_points(growth_curve(forms));
      result.fits.push_back({conversation.id, fit_loglog(points, regime)});
    } catch (const InsufficientDataError&) {
      ++result.skipped;
    }
  }
  return result;
}

namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

GroupFit fit_group(const Corpus& corpus, std::vector<std::size_t> members, const RegimeMatrix& regimes) {
  GroupFit group;
  Corpus subset;
  subset.kind = corpus.kind;
  subset.provenance = corpus.provenance;
  for (auto i : members) {
    group.conversation_ids.push_back(corpus.conversations[i].id);
    subset.conversations.push_back(corpus.conversations[i]);
  }
  if (members.empty()) {
    group.error = "empty group";
    return group;
  }
  try {
    group.fit = heaps_fit(subset, std::nullopt, regimes);
  } catch (const Error& e) {
    group.error = e.what();
  }
  return group;
}

}  // namespace

InterjectionSplit interjection_split_fit(const Corpus& corpus, const RegimeMatrix& regimes) {
  require_tagged_for(corpus, MacroClass::Intj);
  if (corpus.conversations.empty()) throw InsufficientDataError("interjection split: empty corpus");

  std::vector<double> shares;
  shares.reserve(corpus.conversations.size());
  for (const auto& conversation : corpus.conversations) {
    std::size_t total = 0;
    std::size_t intj = 0;
    for (const auto& u : conversation.utterances) {
      for (const auto& t : u.tokens) {
        ++total;
        if (t.macro == MacroClass::Intj) ++intj;
      }
    }
    shares.push_back(total == 0 ? 0.0 : static_cast<double>(intj) / static_cast<double>(total));
  }

  InterjectionSplit split;
  split.median_share = median_of(shares);
  std::vector<std::size_t> low;
  std::vector<std::size_t> high;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    (shares[i] <= split.median_share ? low : high).push_back(i);
  }
  const auto n = static_cast<double>(shares.size());
  split.low_proportion = static_cast<double>(low.size()) / n;
  split.high_proportion = static_cast<double>(high.size()) / n;
  split.low = fit_group(corpus, std::move(low), regimes);
  split.high = fit_group(corpus, std::move(high), regimes);
  return split;
}

std::string ses_flag(double ses) {
  if (ses < 0.01) return "";
  if (ses < 0.05) return "^";
  return "*";
}

}  // namespace convoscale
