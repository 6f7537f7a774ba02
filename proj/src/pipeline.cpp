#include "convoscale/pipeline.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "convoscale/descriptives.hpp"
#include "convoscale/errors.hpp"
#include "convoscale/ingest.hpp"
#include "convoscale/report.hpp"
#include "convoscale/scaling.hpp"
#include "convoscale/synth.hpp"
#include "convoscale/temporal.hpp"
#include "convoscale/textprep.hpp"

namespace fs = std::filesystem;

namespace convoscale {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 9> kCommands = {{
    {Command::Ingest, "ingest"},
    {Command::Clean, "clean"},
    {Command::AnalyzeHeaps, "analyze-heaps"},
    {Command::AnalyzeZipf, "analyze-zipf"},
    {Command::AnalyzePos, "analyze-pos"},
    {Command::AnalyzeTemporal, "analyze-temporal"},
    {Command::Descriptives, "descriptives"},
    {Command::Synth, "synth"},
    {Command::Report, "report"},
}};

bool is_movie_dialogs_dir(const fs::path& p) {
  return fs::is_directory(p) && fs::exists(p / "movie_conversations.txt");
}

bool is_jsonl(const fs::path& p) { return fs::is_regular_file(p) && p.extension() == ".jsonl"; }

void append(Corpus& into, Corpus&& part) {
  if (into.conversations.empty() && into.provenance.empty()) {
    into = std::move(part);
    return;
  }
  for (auto& c : part.conversations) into.conversations.push_back(std::move(c));
  into.provenance += " + " + part.provenance;
}

void set_kind(Corpus& corpus, CorpusKind kind) {
  corpus.kind = kind;
  for (auto& c : corpus.conversations) c.kind = kind;
}

Corpus prepare_movies(Corpus raw, const RunConfig& config) {
  if (config.kind == CorpusKind::MoviesGrouped) {
    FilterSettings settings = config.filter;
    settings.min_utterances = 0;
    return group_by_movie(filter_conversations(raw, settings));
  }
  set_kind(raw, CorpusKind::MoviesIndividual);
  return filter_conversations(raw, config.filter);
}

AnalysisUnit config_unit(const RunConfig& config) { return parse_unit(config.unit); }

std::vector<AnalysisUnit> units_for(const Corpus& corpus, const RunConfig& config) {
  const auto unit = config_unit(config);
  if (unit) {
    require_tagged_for(corpus, unit);
    return {unit};
  }
  std::vector<AnalysisUnit> units{std::nullopt};
  if (is_tagged(corpus)) {
    for (auto m : kAllMacroClasses) units.emplace_back(m);
  }
  return units;
}

std::string corpus_label(const Corpus& corpus) { return std::string(kind_name(corpus.kind)); }

const CleanProfile& profile_for(const RunConfig& config, CorpusKind kind) {
  switch (kind) {
    case CorpusKind::Candor:
      return config.profile("candor");
    case CorpusKind::MoviesIndividual:
    case CorpusKind::MoviesGrouped:
      return config.profile("movies");
    case CorpusKind::Generic:
      break;
  }
  return config.profile("common");
}

std::string utterance_source_text(const Utterance& u) {
  if (u.text) return *u.text;
  std::string joined;
  for (const auto& t : u.tokens) {
    if (!joined.empty()) joined += ' ';
    joined += t.surface;
  }
  return joined;
}

class Run {
 public:
  Run(const RunConfig& config, Command command)
      : config_(config), command_(command), out_(config.out_dir), hash_(config_hash(config)) {
    fs::create_directories(out_);
  }

  void execute() {
    switch (command_) {
      case Command::Ingest:
        ingest();
        break;
      case Command::Clean:
        clean();
        break;
      case Command::AnalyzeHeaps:
        heaps();
        break;
      case Command::AnalyzeZipf:
        zipf();
        break;
      case Command::AnalyzePos:
        pos();
        break;
      case Command::AnalyzeTemporal:
        temporal();
        break;
      case Command::Descriptives:
        descriptives();
        break;
      case Command::Synth:
        synthesize();
        break;
      case Command::Report:
        report_table();
        break;
    }
    write_provenance();
  }

 private:
  // Per-class fits that run as part of "all" leave a blank row instead of failing the command.
  template <typename Fit>
  std::optional<FitResult> fit_unit(const AnalysisUnit& unit, Fit&& fit) {
    try {
      return fit();
    } catch (const InsufficientDataError&) {
      if (!unit || config_unit(config_)) throw;
      return std::nullopt;
    }
  }

  std::vector<std::string> fit_row_or_blank(const AnalysisUnit& unit, const std::optional<FitResult>& fit,
                                            const RegimeBounds& regime) {
    const std::string key(unit_key(unit));
    if (fit) return report::fit_row(key, corpus_label(*corpus_), *fit);
    return {key, corpus_label(*corpus_), "", "", "", "", "0", report::num(regime.lo), report::num(regime.hi)};
  }

  void write_jsonl(Corpus corpus, const fs::path& path) {
    for (auto& c : corpus.conversations) c.meta[std::string(meta_keys::kConfigHash)] = hash_;
    write_tagged_jsonl(corpus, path);
  }

  const Corpus& corpus() {
    if (!corpus_) corpus_ = load_inputs(config_);
    return *corpus_;
  }

  void ingest() {
    const auto& c = corpus();
    write_jsonl(c, out_ / "corpus.jsonl");
    report::CsvWriter csv(out_ / "ingest_summary.csv", {"corpus", "conversations", "utterances", "tokens", "movies"},
                          hash_);
    std::set<std::string> movies;
    for (const auto& conv : c.conversations) {
      if (auto id = conv.meta_text(meta_keys::kMovieId)) movies.insert(*id);
    }
    csv.row({corpus_label(c), std::to_string(c.conversations.size()), std::to_string(c.utterance_count()),
             std::to_string(c.token_count()), std::to_string(movies.size())});
  }

  void clean() {
    write_jsonl(clean_corpus(corpus(), config_), out_ / "raw.jsonl");
  }

  void heaps() {
    const auto& c = corpus();
    report::CsvWriter csv(out_ / "heaps.csv", report::fit_columns(), hash_);
    for (const auto& unit : units_for(c, config_)) {
      const auto key = std::string(unit_key(unit));
      const auto curve = averaged_growth_curve(c, unit);
      const auto points = curve_points(curve);
      report::write_points(out_ / ("heaps_curve_" + key + ".dat"), points, "tokens", "unique_types", hash_);
      const auto fit = fit_unit(unit, [&] { return heaps_fit(c, unit, config_.regimes); });
      csv.row(fit_row_or_blank(unit, fit, config_.regimes.heaps(unit, c.kind)));
    }
    const auto per_conv = per_conversation_exponents(c, config_.regimes);
    report::CsvWriter pc(out_ / "heaps_per_conversation.csv", {"conversation", "exponent", "ses", "r2", "n_points"},
                         hash_);
    for (const auto& f : per_conv.fits) {
      pc.row({f.conversation_id, report::num(f.fit.exponent), report::num(f.fit.ses), report::num(f.fit.r2),
              std::to_string(f.fit.n_points)});
    }
  }

  void zipf() {
    const auto& c = corpus();
    report::CsvWriter csv(out_ / "zipf.csv", report::fit_columns(), hash_);
    for (const auto& unit : units_for(c, config_)) {
      const auto key = std::string(unit_key(unit));
      const auto table = rank_frequency(c, unit);
      report::CsvWriter ranks(out_ / ("zipf_ranks_" + key + ".csv"), {"rank", "type", "count"}, hash_);
      for (const auto& e : table) ranks.row({std::to_string(e.rank), e.type, std::to_string(e.count)});
      const auto points = rank_points(table);
      report::write_points(out_ / ("zipf_curve_" + key + ".dat"), points, "rank", "count", hash_);
      const auto fit = fit_unit(unit, [&] { return zipf_fit(c, unit, config_.regimes); });
      csv.row(fit_row_or_blank(unit, fit, config_.regimes.zipf(unit, c.kind)));
    }
  }

  void pos() {
    const auto& c = corpus();
    const auto shares = pos_proportions(c);
    report::CsvWriter csv(out_ / "pos_proportions.csv", {"class", "total_share", "unique_share"}, hash_);
    for (auto m : kAllMacroClasses) {
      const auto i = macro_index(m);
      csv.row({std::string(macro_name(m)), report::num(shares.total[i]), report::num(shares.unique[i])});
    }
    report::CsvWriter top(out_ / "top_interjections.csv", {"form", "count", "share"}, hash_);
    for (const auto& row : top_interjections(c, config_.descriptives.top_interjections)) {
      top.row({row.form, std::to_string(row.count), report::num(row.share)});
    }
    const auto split = interjection_split_fit(c, config_.regimes);
    report::CsvWriter sp(out_ / "interjection_split.csv",
                         {"group", "conversations", "proportion", "exponent", "ses", "ses_flag", "note"}, hash_);
    auto group_row = [&](const std::string& name, const GroupFit& g, double proportion) {
      if (g.fit) {
        sp.row({name, std::to_string(g.conversation_ids.size()), report::num(proportion), report::num(g.fit->exponent),
                report::num(g.fit->ses), ses_flag(g.fit->ses), ""});
      } else {
        sp.row({name, std::to_string(g.conversation_ids.size()), report::num(proportion), "", "", "", g.error});
      }
    };
    group_row("low", split.low, split.low_proportion);
    group_row("high", split.high, split.high_proportion);
  }

  void temporal() {
    const auto& c = corpus();
    BmOptions options;
    options.shuffle = config_.temporal.shuffle;
    options.seed = config_.seed;
    options.order = config_.temporal.averaging;
    report::CsvWriter csv(out_ / "temporal.csv", {"unit", "corpus", "shuffled", "burstiness", "memory"}, hash_);
    const std::string shuffled = options.shuffle ? "true" : "false";
    auto bm_row = [&](const std::string& unit, const BurstinessMemory& bm) {
      csv.row({unit, corpus_label(c), shuffled, bm.b ? report::num(*bm.b) : "", bm.m ? report::num(*bm.m) : ""});
    };
    bm_row("word_types", corpus_bm(c, BmUnit::WordTypes, options));
    if (is_tagged(c)) {
      bm_row("classes", corpus_bm(c, BmUnit::MacroClasses, options));
      for (auto m : kAllMacroClasses) bm_row(std::string(macro_key(m)), class_bm(c, m, options));
    }

    const auto unit = config_unit(config_);
    require_tagged_for(c, unit);
    std::array<std::vector<std::size_t>, 3> pooled;
    for (const auto& conv : c.conversations) {
      if (conv.token_count() < 3) continue;
      auto parts = tertile_interarrivals(conv, unit);
      for (std::size_t k = 0; k < 3; ++k) pooled[k].insert(pooled[k].end(), parts[k].begin(), parts[k].end());
    }
    const std::string key(unit_key(unit));
    for (std::size_t k = 0; k < 3; ++k) {
      const auto hist = report::log10_histogram(pooled[k], config_.temporal.histogram_bin_width);
      report::write_histogram(out_ / fmt::format("interarrival_{}_t{}.hist", key, k + 1), hist, hash_);
    }
  }

  void descriptives() {
    const auto& c = corpus();
    report::CsvWriter csv(out_ / "descriptives.csv",
                          {"corpus", "measure", "n", "mean", "sd", "median", "min", "max", "cv"}, hash_);
    const std::array<std::pair<Measure, const char*>, 3> measures = {
        {{Measure::Words, "words"}, {Measure::Utterances, "utterances"}, {Measure::SpeakerWords, "speaker_words"}}};
    for (const auto& [measure, name] : measures) {
      const auto s = basic_stats(c, measure);
      csv.row({corpus_label(c), name, std::to_string(s.n), report::num(s.mean), report::num(s.sd),
               report::num(s.median), report::num(s.min), report::num(s.max), report::num(s.cv)});
    }

    report::CsvWriter extra(out_ / "descriptives_extra.csv", {"corpus", "statistic", "value"}, hash_);
    const auto t = corpus_ttr(c);
    extra.row({corpus_label(c), "ttr_mean", report::num(t.mean)});
    extra.row({corpus_label(c), "ttr_sd", report::num(t.sd)});
    const auto words = measure_values(c, Measure::Words);
    const auto utterances = measure_values(c, Measure::Utterances);
    try {
      extra.row({corpus_label(c), "pearson_words_utterances", report::num(pearson_r(words, utterances))});
    } catch (const InvalidArgument&) {
      extra.row({corpus_label(c), "pearson_words_utterances", ""});
    }
    const auto runs = run_outliers(c, config_.descriptives.run_coverage);
    extra.row({corpus_label(c), "max_unique_run_median", report::num(runs.median)});
    extra.row({corpus_label(c), "max_unique_run_cutoff", std::to_string(runs.cutoff)});
    extra.row({corpus_label(c), "max_unique_run_outliers", std::to_string(runs.outliers.size())});

    std::array<std::size_t, 4> scores{};
    std::size_t n_pauses = 0;
    for (const auto& conv : c.conversations) {
      for (double p : pauses(conv)) {
        ++scores[static_cast<std::size_t>(pause_score(p, config_.descriptives.pause) + 1)];
        ++n_pauses;
      }
    }
    if (n_pauses > 0) {
      report::CsvWriter pz(out_ / "pauses.csv", {"score", "count"}, hash_);
      for (std::size_t k = 0; k < scores.size(); ++k) pz.row({std::to_string(static_cast<int>(k) - 1), std::to_string(scores[k])});
    }
  }

  void synthesize() {
    const auto streams = synth::generate(config_.synth);
    auto c = synth::to_corpus(streams, config_.kind);
    c.provenance = fmt::format("synthetic process={} seed={}", synth::process_name(config_.synth.process),
                               config_.synth.seed);
    write_jsonl(std::move(c), out_ / "synth.jsonl");
  }

  void report_table() {
    const auto& c = corpus();
    report::CsvWriter csv(out_ / "report.csv", {"corpus", "unit", "beta", "ses_flag", "alpha", "zipf_ses_flag"},
                          hash_);
    for (const auto& unit : units_for(c, config_)) {
      const auto h = fit_unit(unit, [&] { return heaps_fit(c, unit, config_.regimes); });
      const auto z = fit_unit(unit, [&] { return zipf_fit(c, unit, config_.regimes); });
      csv.row({corpus_label(c), std::string(unit_key(unit)), h ? report::num(h->exponent) : "",
               h ? ses_flag(h->ses) : "", z ? report::num(-z->exponent) : "", z ? ses_flag(z->ses) : ""});
    }
  }

  void write_provenance() {
    nlohmann::ordered_json doc;
    doc["command"] = std::string(command_name(command_));
    doc["config_sha256"] = hash_;
    doc["config"] = to_json(config_);
    if (corpus_) {
      doc["corpus"] = {{"kind", corpus_label(*corpus_)},
                       {"provenance", corpus_->provenance},
                       {"conversations", corpus_->conversations.size()},
                       {"utterances", corpus_->utterance_count()},
                       {"tokens", corpus_->token_count()}};
    }
    std::ofstream out(out_ / "provenance.json", std::ios::binary);
    if (!out) throw Error("cannot write " + (out_ / "provenance.json").string());
    out << doc.dump(2) << '\n';
  }

  const RunConfig& config_;
  Command command_;
  fs::path out_;
  std::string hash_;
  std::optional<Corpus> corpus_;
};

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

void log_line(const RunConfig& config, const std::string& line) {
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  std::ofstream log(fs::path(config.out_dir) / "run.log", std::ios::app);
  if (log) log << timestamp() << ' ' << line << '\n';
}

}  // namespace

Corpus clean_corpus(Corpus corpus, const RunConfig& config) {
  const auto& profile = profile_for(config, corpus.kind);
  const auto& common = config.profile("common");
  for (auto& conv : corpus.conversations) {
    for (auto& u : conv.utterances) {
      std::string text = profile.name == "common" ? apply_profile(utterance_source_text(u), profile)
                                                  : clean_text(utterance_source_text(u), profile, common);
      u.tokens.clear();
      for (auto& t : tokenize(text, config.case_fold)) {
        u.tokens.push_back(make_token(std::move(t.surface), Upos::X, config.case_fold));
      }
      u.text = std::move(text);
    }
  }
  const std::string clause = "; cleaned=" + profile.name;
  if (!corpus.provenance.ends_with(clause)) corpus.provenance += clause;
  return corpus;
}

Command parse_command(std::string_view name) {
  for (const auto& [command, text] : kCommands) {
    if (text == name) return command;
  }
  throw InvalidArgument("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command command) noexcept {
  for (const auto& [c, text] : kCommands) {
    if (c == command) return text;
  }
  return "ingest";
}

Corpus load_inputs(const RunConfig& config) {
  if (config.inputs.empty()) throw InvalidArgument("no input given");
  LoadOptions options{config.case_fold};
  Corpus corpus;
  std::vector<fs::path> text_inputs;
  for (const auto& input : config.inputs) {
    const fs::path p(input);
    if (!fs::exists(p)) throw Error("cannot read input " + input);
    if (is_movie_dialogs_dir(p)) {
      append(corpus, prepare_movies(clean_corpus(load_movie_dialogs(p, options), config), config));
    } else if (is_jsonl(p)) {
      append(corpus, load_tagged_jsonl(p, options));
    } else {
      text_inputs.push_back(p);
    }
  }
  if (!text_inputs.empty()) {
    auto plain = load_plain_text(text_inputs, options);
    if (config.kind != CorpusKind::Generic) set_kind(plain, config.kind);
    append(corpus, clean_corpus(std::move(plain), config));
  }

  if (config.kind != CorpusKind::Generic && corpus.kind != config.kind) {
    if (corpus.kind != CorpusKind::Generic) {
      throw InvalidArgument(fmt::format("input corpus kind {} does not match --kind {}", kind_name(corpus.kind),
                                        kind_name(config.kind)));
    }
    set_kind(corpus, config.kind);
  }
  if (corpus.conversations.empty()) throw Error("no conversations found");
  return corpus;
}

int run_pipeline(const RunConfig& config, Command command, std::ostream& diagnostics) {
  const std::string name(command_name(command));
  try {
    Run run(config, command);
    run.execute();
    log_line(config, name + " ok config_sha256=" + config_hash(config));
    return 0;
  } catch (const std::exception& e) {
    diagnostics << "error: " << e.what() << '\n';
    log_line(config, name + " failed: " + e.what());
    return 1;
  }
}

}  // namespace convoscale
