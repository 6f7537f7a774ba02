#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convoscale/config.hpp"
#include "convoscale/errors.hpp"
#include "convoscale/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Scaling-law and burstiness statistics for conversation corpora"};

  std::string command;
  std::string config_path;
  std::vector<std::string> inputs;
  std::string kind;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::string unit;
  bool shuffle = false;
  std::optional<std::size_t> min_utterances;

  app.add_option("command", command,
                 "ingest | clean | analyze-heaps | analyze-zipf | analyze-pos | analyze-temporal | descriptives | "
                 "synth | report")
      ->required();
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--input", inputs, "Input files or directories")->expected(1, -1);
  app.add_option("--kind", kind, "candor | movies_individual | movies_grouped | generic");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--unit", unit, "all | noun | verb | other | func | intj");
  app.add_flag("--shuffle", shuffle, "Shuffle tokens within each conversation before temporal analysis");
  app.add_option("--min-utterances", min_utterances, "Minimum utterances per conversation (movies)");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto cmd = convoscale::parse_command(command);
    auto config = config_path.empty() ? convoscale::RunConfig::defaults() : convoscale::load_config(config_path);
    if (!inputs.empty()) config.inputs = inputs;
    if (!kind.empty()) config.kind = convoscale::parse_kind(kind);
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (seed) {
      config.seed = *seed;
      config.synth.seed = *seed;
    }
    if (!unit.empty()) {
      convoscale::parse_unit(unit);
      config.unit = unit;
    }
    if (shuffle) config.temporal.shuffle = true;
    if (min_utterances) config.filter.min_utterances = *min_utterances;
    return convoscale::run_pipeline(config, cmd, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
