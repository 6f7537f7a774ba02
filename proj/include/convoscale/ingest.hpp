#pragma once

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "convoscale/corpus.hpp"

namespace convoscale {

struct LoadOptions {
  bool case_fold = true;
};

/// Reads canonical JSONL, one conversation per line:
///
///   {"id": str, "kind": str, "meta": {str: str|list},
///    "utterances": [{"speaker": str, "start_s": num|null, "stop_s": num|null,
///                    "text": str (optional), "tokens": [{"s": surface, "p": UPOS}]}]}
///
/// Token macro-classes are always recomputed from "p"; a "m" field is ignored.
/// Blank lines are skipped. Errors are ParseError carrying the 1-based line.
Corpus load_tagged_jsonl(const std::filesystem::path& path, const LoadOptions& options = {});
Corpus read_tagged_jsonl(std::istream& in, const std::string& source, const LoadOptions& options = {});

/// Writes records in schema field order; the output is byte-stable for a given corpus.
void write_tagged_jsonl(const Corpus& corpus, std::ostream& out);
void write_tagged_jsonl(const Corpus& corpus, const std::filesystem::path& path);

/// One JSONL record (no trailing newline).
std::string to_jsonl_record(const Conversation& conversation);

/// Reconstructs conversations from the legacy Movie-Dialogs release
/// (movie_titles_metadata.txt, movie_characters_metadata.txt,
/// movie_conversations.txt, movie_lines.txt; fields separated by " +++$+++ ").
///
/// Returns an unfiltered movies_individual corpus in conversation-file order.
/// Utterances keep their raw text and are tokenized with placeholder tag X.
/// A referenced line that is missing or has empty text is left out of the
/// conversation and counted under meta "null_utterances".
Corpus load_movie_dialogs(const std::filesystem::path& dir, const LoadOptions& options = {});

/// One conversation per text file (id = file stem), one utterance per nonempty line.
/// Directories are expanded to their *.txt files in name order.
Corpus load_plain_text(const std::vector<std::filesystem::path>& paths, const LoadOptions& options = {});

/// Concatenates every conversation of a movie, in source order, into one
/// movies_grouped conversation whose id is the movie id.
Corpus group_by_movie(const Corpus& corpus);

struct FilterSettings {
  std::size_t min_utterances = 0;
  std::set<std::string> excluded_genres;  // compared case-insensitively
  bool drop_null = false;

  /// 10 utterances, {documentary, biography}, drop null-containing conversations.
  static FilterSettings movie_defaults();

  std::string describe() const;
};

/// Keeps conversations with at least `min_utterances` utterances, no excluded
/// genre, and (with drop_null) no null utterances. Idempotent.
Corpus filter_conversations(const Corpus& corpus, const FilterSettings& settings);

}  // namespace convoscale
