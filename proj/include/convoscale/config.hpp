#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "convoscale/corpus.hpp"
#include "convoscale/descriptives.hpp"
#include "convoscale/ingest.hpp"
#include "convoscale/scaling.hpp"
#include "convoscale/synth.hpp"
#include "convoscale/temporal.hpp"
#include "convoscale/textprep.hpp"

namespace convoscale {

struct TemporalSettings {
  AveragingOrder averaging = AveragingOrder::KeysThenConversations;
  bool shuffle = false;
  double histogram_bin_width = 0.1;
};

struct DescriptiveSettings {
  double run_coverage = 0.9995;
  std::size_t top_interjections = 10;
  PauseThresholds pause;
};

/// Everything a CLI run depends on. Serialized as a JSON document; the
/// canonical dump (sorted keys, compact) is what the config hash covers.
struct RunConfig {
  std::vector<std::string> inputs;
  CorpusKind kind = CorpusKind::Generic;
  std::string out_dir = "out";
  std::uint64_t seed = 42;
  std::string unit = "all";
  bool case_fold = true;
  std::map<std::string, CleanProfile> clean_profiles;  // candor, movies, common
  FilterSettings filter;
  RegimeMatrix regimes;
  TemporalSettings temporal;
  DescriptiveSettings descriptives;
  synth::SynthSpec synth;

  /// Built-in defaults: movie filter settings, default regimes, built-in clean profiles.
  static RunConfig defaults();

  const CleanProfile& profile(const std::string& name) const;
};

nlohmann::json to_json(const RunConfig& config);

/// Starts from `base` and overrides the keys present in `doc`.
/// Unknown keys are rejected with InvalidArgument naming the key.
RunConfig config_from_json(const nlohmann::json& doc, const RunConfig& base = RunConfig::defaults());

RunConfig load_config(const std::filesystem::path& path);

/// Hex SHA-256 of the canonical JSON dump.
std::string config_hash(const RunConfig& config);

}  // namespace convoscale
