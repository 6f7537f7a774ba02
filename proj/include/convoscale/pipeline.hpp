#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "convoscale/config.hpp"

namespace convoscale {

enum class Command { Ingest, Clean, AnalyzeHeaps, AnalyzeZipf, AnalyzePos, AnalyzeTemporal, Descriptives, Synth, Report };

/// Throws InvalidArgument for an unknown command name.
Command parse_command(std::string_view name);
std::string_view command_name(Command command) noexcept;

/// Applies the kind's clean profile followed by the common profile to each
/// utterance's text (or its joined surfaces) and re-tokenizes with placeholder tags.
Corpus clean_corpus(Corpus corpus, const RunConfig& config);

/// Loads every configured input and applies the kind-specific preparation:
/// raw sources (Movie-Dialogs, plain text) are cleaned, and Movie-Dialogs inputs are
/// filtered, and grouped when the kind is movies_grouped.
/// Throws when nothing is left ("no conversations found").
Corpus load_inputs(const RunConfig& config);

/// Runs one command, writing its artifacts under `config.out_dir`. Returns the
/// exit status; on failure a single "error: ..." line goes to `diagnostics`.
int run_pipeline(const RunConfig& config, Command command, std::ostream& diagnostics);

}  // namespace convoscale
