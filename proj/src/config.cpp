#include "convoscale/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "convoscale/errors.hpp"

namespace convoscale {

using nlohmann::json;

namespace {

const std::array<CorpusKind, 3> kRegimeKinds = {CorpusKind::Candor, CorpusKind::MoviesIndividual,
                                                CorpusKind::MoviesGrouped};

void check_keys(const json& doc, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!doc.is_object()) throw InvalidArgument("config: " + where + " must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw InvalidArgument("config: unknown key '" + (where.empty() ? key : where + "." + key) + "'");
    }
  }
}

template <typename T>
void read(const json& doc, const char* key, T& target, const std::string& where) {
  if (!doc.contains(key)) return;
  try {
    target = doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument("config: bad value for '" + (where.empty() ? std::string(key) : where + "." + key) + "'");
  }
}

std::string order_name(AveragingOrder order) {
  return order == AveragingOrder::KeysThenConversations ? "keys_then_conversations" : "conversations_then_keys";
}

AveragingOrder parse_order(const std::string& name) {
  if (name == "keys_then_conversations") return AveragingOrder::KeysThenConversations;
  if (name == "conversations_then_keys") return AveragingOrder::ConversationsThenKeys;
  throw InvalidArgument("config: unknown averaging order '" + name + "'");
}

json profile_json(const CleanProfile& profile) {
  json rules = json::array();
  for (const auto& r : profile.rules) rules.push_back({{"pattern", r.pattern}, {"replacement", r.replacement}});
  return rules;
}

CleanProfile profile_from_json(const std::string& name, const json& rules) {
  if (!rules.is_array()) throw InvalidArgument("config: clean_profiles." + name + " must be a list of rules");
  CleanProfile profile{name, {}};
  for (const auto& r : rules) {
    check_keys(r, "clean_profiles." + name + "[]", {"pattern", "replacement"});
    CleanRule rule;
    read(r, "pattern", rule.pattern, "clean_profiles." + name);
    read(r, "replacement", rule.replacement, "clean_profiles." + name);
    profile.rules.push_back(std::move(rule));
  }
  return profile;
}

json regimes_json(const RegimeMatrix& regimes) {
  json start = json::object();
  json end = json::object();
  for (const auto& [key, value] : regimes.entries()) {
    const auto unit = macro_key(key.first);
    const auto kind = kind_name(key.second);
    start[std::string(unit)][std::string(kind)] = value.first;
    end[std::string(unit)][std::string(kind)] = value.second;
  }
  const auto level = regimes.corpus_level();
  return {{"corpus_level", {{"start", level.start}, {"end", level.end}}}, {"start", start}, {"end", end}};
}

void regimes_from_json(const json& doc, RegimeMatrix& regimes) {
  check_keys(doc, "regimes", {"corpus_level", "start", "end"});
  if (doc.contains("corpus_level")) {
    const auto& level = doc.at("corpus_level");
    check_keys(level, "regimes.corpus_level", {"start", "end"});
    auto cell = regimes.corpus_level();
    read(level, "start", cell.start, "regimes.corpus_level");
    read(level, "end", cell.end, "regimes.corpus_level");
    regimes.set_corpus_level(cell);
  }
  for (auto macro : kAllMacroClasses) {
    for (auto kind : kRegimeKinds) {
      auto cell = regimes.cell(macro, kind);
      bool touched = false;
      for (const char* side : {"start", "end"}) {
        if (!doc.contains(side)) continue;
        const auto& table = doc.at(side);
        const std::string unit(macro_key(macro));
        const std::string column(kind_name(kind));
        if (!table.contains(unit) || !table.at(unit).contains(column)) continue;
        double value = 0.0;
        read(table.at(unit), column.c_str(), value, std::string("regimes.") + side + "." + unit);
        (std::string(side) == "start" ? cell.start : cell.end) = value;
        touched = true;
      }
      if (touched) regimes.set(macro, kind, cell);
    }
  }
  for (const char* side : {"start", "end"}) {
    if (!doc.contains(side)) continue;
    for (const auto& [unit, row] : doc.at(side).items()) {
      parse_macro(unit);
      for (const auto& [column, _] : row.items()) {
        const auto kind = parse_kind(column);
        if (kind == CorpusKind::Generic) {
          throw InvalidArgument("config: regimes use the candor column for generic corpora");
        }
      }
    }
  }
}

json synth_json(const synth::SynthSpec& spec) {
  return {{"process", synth::process_name(spec.process)},
          {"params", spec.params},
          {"n_tokens", spec.n_tokens},
          {"n_conversations", spec.n_conversations},
          {"seed", spec.seed}};
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig config;
  for (const char* name : {"candor", "movies", "common"}) config.clean_profiles[name] = CleanProfile::builtin(name);
  config.filter = FilterSettings::movie_defaults();
  config.regimes = RegimeMatrix::defaults();
  config.synth.params = {{"beta", 0.63}};
  return config;
}

const CleanProfile& RunConfig::profile(const std::string& name) const {
  auto it = clean_profiles.find(name);
  if (it == clean_profiles.end()) throw InvalidArgument("config: no clean profile named '" + name + "'");
  return it->second;
}

json to_json(const RunConfig& config) {
  json profiles = json::object();
  for (const auto& [name, profile] : config.clean_profiles) profiles[name] = profile_json(profile);
  return {
      {"inputs", config.inputs},
      {"kind", std::string(kind_name(config.kind))},
      {"out_dir", config.out_dir},
      {"seed", config.seed},
      {"unit", config.unit},
      {"case_fold", config.case_fold},
      {"clean_profiles", profiles},
      {"filter",
       {{"min_utterances", config.filter.min_utterances},
        {"excluded_genres", config.filter.excluded_genres},
        {"drop_null", config.filter.drop_null}}},
      {"regimes", regimes_json(config.regimes)},
      {"temporal",
       {{"averaging", order_name(config.temporal.averaging)},
        {"shuffle", config.temporal.shuffle},
        {"histogram_bin_width", config.temporal.histogram_bin_width}}},
      {"descriptives",
       {{"run_coverage", config.descriptives.run_coverage},
        {"top_interjections", config.descriptives.top_interjections},
        {"pause",
         {{"overlap_below", config.descriptives.pause.overlap_below},
          {"short_below", config.descriptives.pause.short_below},
          {"medium_below", config.descriptives.pause.medium_below},
          {"long_from", config.descriptives.pause.long_from}}}}},
      {"synth", synth_json(config.synth)},
  };
}

RunConfig config_from_json(const json& doc, const RunConfig& base) {
  RunConfig config = base;
  check_keys(doc, "", {"inputs", "kind", "out_dir", "seed", "unit", "case_fold", "clean_profiles", "filter",
                       "regimes", "temporal", "descriptives", "synth"});
  read(doc, "inputs", config.inputs, "");
  if (doc.contains("kind")) {
    std::string kind;
    read(doc, "kind", kind, "");
    config.kind = parse_kind(kind);
  }
  read(doc, "out_dir", config.out_dir, "");
  read(doc, "seed", config.seed, "");
  if (doc.contains("unit")) {
    read(doc, "unit", config.unit, "");
    parse_unit(config.unit);
  }
  read(doc, "case_fold", config.case_fold, "");

  if (doc.contains("clean_profiles")) {
    const auto& profiles = doc.at("clean_profiles");
    if (!profiles.is_object()) throw InvalidArgument("config: clean_profiles must be an object");
    for (const auto& [name, rules] : profiles.items()) config.clean_profiles[name] = profile_from_json(name, rules);
  }

  if (doc.contains("filter")) {
    const auto& f = doc.at("filter");
    check_keys(f, "filter", {"min_utterances", "excluded_genres", "drop_null"});
    read(f, "min_utterances", config.filter.min_utterances, "filter");
    read(f, "excluded_genres", config.filter.excluded_genres, "filter");
    read(f, "drop_null", config.filter.drop_null, "filter");
  }

  if (doc.contains("regimes")) regimes_from_json(doc.at("regimes"), config.regimes);

  if (doc.contains("temporal")) {
    const auto& t = doc.at("temporal");
    check_keys(t, "temporal", {"averaging", "shuffle", "histogram_bin_width"});
    if (t.contains("averaging")) {
      std::string order;
      read(t, "averaging", order, "temporal");
      config.temporal.averaging = parse_order(order);
    }
    read(t, "shuffle", config.temporal.shuffle, "temporal");
    read(t, "histogram_bin_width", config.temporal.histogram_bin_width, "temporal");
    if (!(config.temporal.histogram_bin_width > 0.0)) {
      throw InvalidArgument("config: temporal.histogram_bin_width must be positive");
    }
  }

  if (doc.contains("descriptives")) {
    const auto& d = doc.at("descriptives");
    check_keys(d, "descriptives", {"run_coverage", "top_interjections", "pause"});
    read(d, "run_coverage", config.descriptives.run_coverage, "descriptives");
    read(d, "top_interjections", config.descriptives.top_interjections, "descriptives");
    if (d.contains("pause")) {
      const auto& p = d.at("pause");
      check_keys(p, "descriptives.pause", {"overlap_below", "short_below", "medium_below", "long_from"});
      auto& th = config.descriptives.pause;
      read(p, "overlap_below", th.overlap_below, "descriptives.pause");
      read(p, "short_below", th.short_below, "descriptives.pause");
      read(p, "medium_below", th.medium_below, "descriptives.pause");
      read(p, "long_from", th.long_from, "descriptives.pause");
      th.validate();
    }
    const double c = config.descriptives.run_coverage;
    if (!(c > 0.0 && c <= 1.0)) throw InvalidArgument("config: descriptives.run_coverage must be in (0, 1]");
  }

  if (doc.contains("synth")) {
    const auto& s = doc.at("synth");
    check_keys(s, "synth", {"process", "params", "n_tokens", "n_conversations", "seed"});
    if (s.contains("process")) {
      std::string process;
      read(s, "process", process, "synth");
      config.synth.process = synth::parse_process(process);
    }
    read(s, "params", config.synth.params, "synth");
    read(s, "n_tokens", config.synth.n_tokens, "synth");
    read(s, "n_conversations", config.synth.n_conversations, "synth");
    read(s, "seed", config.synth.seed, "synth");
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("config " + path.string() + ": " + e.what());
  }
  return config_from_json(doc);
}

std::string config_hash(const RunConfig& config) {
  const std::string canonical = to_json(config).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

}  // namespace convoscale
