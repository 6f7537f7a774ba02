#include "convoscale/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "convoscale/errors.hpp"
#include "convoscale/textprep.hpp"
#include "convoscale/unicode.hpp"

namespace convoscale {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (end == text.size()) {
      if (!line.empty()) lines.push_back(std::move(line));
      break;
    }
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::vector<Token> placeholder_tokens(std::string_view text, bool case_fold) {
  std::vector<Token> tokens;
  for (auto& t : tokenize(text, case_fold)) {
    tokens.push_back({std::move(t.surface), std::move(t.form), Upos::X, MacroClass::Other});
  }
  return tokens;
}

// --- JSONL schema -----------------------------------------------------------

const json& require(const json& obj, const char* field, std::size_t line, const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError(line, where + "missing field '" + field + "'");
  }
  return *it;
}

std::string require_string(const json& obj, const char* field, std::size_t line,
                           const std::string& where) {
  const auto& value = require(obj, field, line, where);
  if (!value.is_string()) throw ParseError(line, where + "field '" + field + "' must be a string");
  return value.get<std::string>();
}

std::optional<double> optional_seconds(const json& obj, const char* field, std::size_t line,
                                       const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw ParseError(line, where + "field '" + field + "' must be a number or null");
  return it->get<double>();
}

Meta parse_meta(const json& record, std::size_t line) {
  Meta meta;
  auto it = record.find("meta");
  if (it == record.end() || it->is_null()) return meta;
  if (!it->is_object()) throw ParseError(line, "field 'meta' must be an object");
  for (const auto& [key, value] : it->items()) {
    if (value.is_string()) {
      meta.emplace(key, value.get<std::string>());
    } else if (value.is_array()) {
      std::vector<std::string> items;
      for (const auto& item : value) {
        if (!item.is_string()) throw ParseError(line, "meta '" + key + "' must hold strings");
        items.push_back(item.get<std::string>());
      }
      meta.emplace(key, std::move(items));
    } else {
      throw ParseError(line, "meta '" + key + "' must be a string or a list of strings");
    }
  }
  return meta;
}

Conversation parse_record(const std::string& text, std::size_t line, const LoadOptions& options) {
  json record;
  try {
    record = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line, std::string("malformed JSON: ") + e.what());
  }
  if (!record.is_object()) throw ParseError(line, "record must be a JSON object");

  Conversation conversation;
  conversation.id = require_string(record, "id", line, "");
  try {
    conversation.kind = parse_kind(require_string(record, "kind", line, ""));
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }
  conversation.meta = parse_meta(record, line);

  const auto& utterances = require(record, "utterances", line, "");
  if (!utterances.is_array()) throw ParseError(line, "field 'utterances' must be an array");
  std::size_t u_index = 0;
  for (const auto& u : utterances) {
    const std::string where = "utterance " + std::to_string(u_index++) + ": ";
    if (!u.is_object()) throw ParseError(line, where + "must be an object");
    Utterance utterance;
    utterance.speaker_id = require_string(u, "speaker", line, where);
    utterance.start_s = optional_seconds(u, "start_s", line, where);
    utterance.stop_s = optional_seconds(u, "stop_s", line, where);
    if (utterance.start_s && utterance.stop_s && *utterance.stop_s < *utterance.start_s) {
      throw ParseError(line, where + "stop_s precedes start_s");
    }
    if (auto t = u.find("text"); t != u.end() && !t->is_null()) {
      if (!t->is_string()) throw ParseError(line, where + "field 'text' must be a string");
      utterance.text = t->get<std::string>();
    }
    const auto& tokens = require(u, "tokens", line, where);
    if (!tokens.is_array()) throw ParseError(line, where + "field 'tokens' must be an array");
    for (const auto& t : tokens) {
      if (!t.is_object()) throw ParseError(line, where + "token must be an object");
      std::string surface = require_string(t, "s", line, where);
      if (surface.empty()) throw ParseError(line, where + "empty token surface");
      const std::string tag = require_string(t, "p", line, where);
      Upos upos;
      try {
        upos = parse_upos(tag);
      } catch (const InvalidArgument& e) {
        throw ParseError(line, where + e.what());
      }
      utterance.tokens.push_back(make_token(std::move(surface), upos, options.case_fold));
    }
    conversation.utterances.push_back(std::move(utterance));
  }
  return conversation;
}

// --- Movie-Dialogs ------------------------------------------------------------

constexpr std::string_view kFieldSep = "+++$+++";

std::vector<std::string> split_fields(const std::string& line, std::size_t max_fields) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (fields.size() + 1 < max_fields) {
    auto pos = line.find(kFieldSep, start);
    if (pos == std::string::npos) break;
    fields.push_back(trim(std::string_view(line).substr(start, pos - start)));
    start = pos + kFieldSep.size();
  }
  fields.push_back(trim(std::string_view(line).substr(start)));
  return fields;
}

// "['a', 'b']" -> {a, b}
std::vector<std::string> parse_quoted_list(const std::string& field) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (true) {
    auto open = field.find_first_of("'\"", pos);
    if (open == std::string::npos) break;
    auto close = field.find(field[open], open + 1);
    if (close == std::string::npos) break;
    items.push_back(field.substr(open + 1, close - open - 1));
    pos = close + 1;
  }
  return items;
}

struct LegacyFile {
  std::vector<std::string> lines;
  std::size_t replaced = 0;
};

LegacyFile read_legacy(const fs::path& dir, const char* name) {
  const fs::path path = dir / name;
  if (!fs::exists(path)) throw Error("missing Movie-Dialogs file: " + std::string(name));
  LegacyFile file;
  file.lines = split_lines(unicode::decode_lossy(read_file(path), &file.replaced));
  return file;
}

struct MovieInfo {
  std::string title;
  std::string year;
  std::vector<std::string> genres;
};

}  // namespace

// --- JSONL --------------------------------------------------------------------

Corpus read_tagged_jsonl(std::istream& in, const std::string& source, const LoadOptions& options) {
  Corpus corpus;
  std::size_t replaced_total = 0;
  std::string raw;
  std::size_t line = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t replaced = 0;
    const std::string text = unicode::decode_lossy(raw, &replaced);
    replaced_total += replaced;
    Conversation conversation = parse_record(text, line, options);
    if (first) {
      corpus.kind = conversation.kind;
      first = false;
    } else if (conversation.kind != corpus.kind) {
      throw ParseError(line, "kind '" + std::string(kind_name(conversation.kind)) +
                                 "' differs from corpus kind '" +
                                 std::string(kind_name(corpus.kind)) + "'");
    }
    corpus.conversations.push_back(std::move(conversation));
  }
  corpus.provenance = "jsonl source=" + source + "; replaced_bytes=" + std::to_string(replaced_total);
  return corpus;
}

Corpus load_tagged_jsonl(const fs::path& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_tagged_jsonl(in, path.string(), options);
}

std::string to_jsonl_record(const Conversation& conversation) {
  ordered_json record;
  record["id"] = conversation.id;
  record["kind"] = kind_name(conversation.kind);
  ordered_json meta = ordered_json::object();
  for (const auto& [key, value] : conversation.meta) {
    std::visit([&](const auto& v) { meta[key] = v; }, value);
  }
  record["meta"] = std::move(meta);
  ordered_json utterances = ordered_json::array();
  for (const auto& u : conversation.utterances) {
    ordered_json item;
    item["speaker"] = u.speaker_id;
    item["start_s"] = u.start_s ? ordered_json(*u.start_s) : ordered_json(nullptr);
    item["stop_s"] = u.stop_s ? ordered_json(*u.stop_s) : ordered_json(nullptr);
    if (u.text) item["text"] = *u.text;
    ordered_json tokens = ordered_json::array();
    for (const auto& t : u.tokens) {
      tokens.push_back({{"s", t.surface}, {"p", upos_name(t.upos)}});
    }
    item["tokens"] = std::move(tokens);
    utterances.push_back(std::move(item));
  }
  record["utterances"] = std::move(utterances);
  return record.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

void write_tagged_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const auto& conversation : corpus.conversations) {
    out << to_jsonl_record(conversation) << '\n';
  }
}

void write_tagged_jsonl(const Corpus& corpus, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_tagged_jsonl(corpus, out);
}

// --- Movie-Dialogs ------------------------------------------------------------

Corpus load_movie_dialogs(const fs::path& dir, const LoadOptions& options) {
  const LegacyFile titles = read_legacy(dir, "movie_titles_metadata.txt");
  const LegacyFile characters = read_legacy(dir, "movie_characters_metadata.txt");
  const LegacyFile conversations = read_legacy(dir, "movie_conversations.txt");
  const LegacyFile lines = read_legacy(dir, "movie_lines.txt");

  std::unordered_map<std::string, MovieInfo> movies;
  for (const auto& line : titles.lines) {
    auto f = split_fields(line, 6);
    if (f.size() < 6) continue;
    movies[f[0]] = {f[1], f[2], parse_quoted_list(f[5])};
  }

  struct LineRecord {
    std::string speaker;
    std::string text;
  };
  std::unordered_map<std::string, LineRecord> line_index;
  for (const auto& line : lines.lines) {
    auto f = split_fields(line, 5);
    if (f.empty() || f[0].empty()) continue;
    LineRecord record;
    if (f.size() > 1) record.speaker = f[1];
    if (f.size() >= 5) record.text = f[4];
    line_index[f[0]] = std::move(record);
  }

  Corpus corpus;
  corpus.kind = CorpusKind::MoviesIndividual;
  std::size_t index = 0;
  for (const auto& line : conversations.lines) {
    auto f = split_fields(line, 4);
    if (f.size() < 4) continue;
    Conversation conversation;
    conversation.id = "conv" + std::to_string(index++);
    conversation.kind = CorpusKind::MoviesIndividual;
    const std::string& movie_id = f[2];
    conversation.meta.emplace(std::string(meta_keys::kMovieId), movie_id);
    if (auto it = movies.find(movie_id); it != movies.end()) {
      conversation.meta.emplace(std::string(meta_keys::kTitle), it->second.title);
      conversation.meta.emplace(std::string(meta_keys::kYear), it->second.year);
      conversation.meta.emplace(std::string(meta_keys::kGenres), it->second.genres);
    }
    std::size_t nulls = 0;
    for (const auto& line_id : parse_quoted_list(f[3])) {
      auto it = line_index.find(line_id);
      if (it == line_index.end() || it->second.text.empty()) {
        ++nulls;
        continue;
      }
      Utterance utterance;
      utterance.speaker_id = it->second.speaker;
      utterance.text = it->second.text;
      utterance.tokens = placeholder_tokens(it->second.text, options.case_fold);
      conversation.utterances.push_back(std::move(utterance));
    }
    if (nulls > 0) {
      conversation.meta.emplace(std::string(meta_keys::kNullUtterances), std::to_string(nulls));
    }
    corpus.conversations.push_back(std::move(conversation));
  }

  const std::size_t replaced =
      titles.replaced + characters.replaced + conversations.replaced + lines.replaced;
  corpus.provenance = "movie-dialogs source=" + dir.string() + "; replaced_bytes=" + std::to_string(replaced);
  return corpus;
}

Corpus load_plain_text(const std::vector<fs::path>& paths, const LoadOptions& options) {
  std::vector<fs::path> files;
  for (const auto& path : paths) {
    if (fs::is_directory(path)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }

  Corpus corpus;
  corpus.kind = CorpusKind::Generic;
  std::size_t replaced_total = 0;
  std::string sources;
  for (const auto& file : files) {
    std::size_t replaced = 0;
    const std::string text = unicode::decode_lossy(read_file(file), &replaced);
    replaced_total += replaced;
    Conversation conversation;
    conversation.id = file.stem().string();
    conversation.kind = CorpusKind::Generic;
    for (const auto& line : split_lines(text)) {
      std::string content = trim(line);
      if (content.empty()) continue;
      Utterance utterance;
      utterance.tokens = placeholder_tokens(content, options.case_fold);
      utterance.text = std::move(content);
      conversation.utterances.push_back(std::move(utterance));
    }
    if (!sources.empty()) sources += ",";
    sources += file.string();
    corpus.conversations.push_back(std::move(conversation));
  }
  corpus.provenance = "plain-text source=" + sources + "; replaced_bytes=" + std::to_string(replaced_total);
  return corpus;
}

Corpus group_by_movie(const Corpus& corpus) {
  if (corpus.kind != CorpusKind::MoviesIndividual) {
    throw InvalidArgument("group_by_movie needs a movies_individual corpus, got " +
                          std::string(kind_name(corpus.kind)));
  }
  Corpus grouped;
  grouped.kind = CorpusKind::MoviesGrouped;
  std::map<std::string, std::size_t> slot;
  std::vector<std::size_t> parts;
  std::vector<std::size_t> nulls;
  for (const auto& conversation : corpus.conversations) {
    auto movie_id = conversation.meta_text(meta_keys::kMovieId);
    if (!movie_id || movie_id->empty()) {
      throw InvalidArgument("conversation '" + conversation.id + "' has no movie id");
    }
    auto [it, inserted] = slot.emplace(*movie_id, grouped.conversations.size());
    if (inserted) {
      Conversation movie;
      movie.id = *movie_id;
      movie.kind = CorpusKind::MoviesGrouped;
      for (auto key : {meta_keys::kMovieId, meta_keys::kTitle, meta_keys::kYear, meta_keys::kGenres}) {
        if (auto m = conversation.meta.find(std::string(key)); m != conversation.meta.end()) {
          movie.meta.insert(*m);
        }
      }
      grouped.conversations.push_back(std::move(movie));
      parts.push_back(0);
      nulls.push_back(0);
    }
    auto& movie = grouped.conversations[it->second];
    movie.utterances.insert(movie.utterances.end(), conversation.utterances.begin(),
                            conversation.utterances.end());
    ++parts[it->second];
    nulls[it->second] += conversation.null_utterances();
  }
  for (std::size_t i = 0; i < grouped.conversations.size(); ++i) {
    auto& meta = grouped.conversations[i].meta;
    meta[std::string(meta_keys::kSourceConversations)] = std::to_string(parts[i]);
    if (nulls[i] > 0) meta[std::string(meta_keys::kNullUtterances)] = std::to_string(nulls[i]);
  }
  grouped.provenance = corpus.provenance + "; grouped_by_movie";
  return grouped;
}

FilterSettings FilterSettings::movie_defaults() {
  return {10, {"documentary", "biography"}, true};
}

std::string FilterSettings::describe() const {
  std::string genres;
  for (const auto& g : excluded_genres) {
    if (!genres.empty()) genres += ",";
    genres += g;
  }
  return "filter(min_utterances=" + std::to_string(min_utterances) + " excluded_genres=[" + genres +
         "] drop_null=" + (drop_null ? "true" : "false") + ")";
}

Corpus filter_conversations(const Corpus& corpus, const FilterSettings& settings) {
  std::set<std::string> excluded;
  for (const auto& g : settings.excluded_genres) excluded.insert(lower_ascii(g));

  Corpus out;
  out.kind = corpus.kind;
  for (const auto& conversation : corpus.conversations) {
    if (conversation.utterances.size() < settings.min_utterances) continue;
    if (settings.drop_null && conversation.null_utterances() > 0) continue;
    const auto genres = conversation.meta_list(meta_keys::kGenres);
    const bool excluded_genre = std::any_of(genres.begin(), genres.end(), [&](const std::string& g) {
      return excluded.count(lower_ascii(g)) > 0;
    });
    if (excluded_genre) continue;
    out.conversations.push_back(conversation);
  }
  const std::string clause = "; " + settings.describe();
  out.provenance = corpus.provenance;
  if (!out.provenance.ends_with(clause)) out.provenance += clause;
  return out;
}

}  // namespace convoscale
