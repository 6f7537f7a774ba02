#include "convoscale/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "convoscale/errors.hpp"

namespace convoscale::synth {

namespace {

double param(const SynthSpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end()) {
    throw InvalidArgument("synth process " + process_name(spec.process) + " needs parameter '" + name + "'");
  }
  return it->second;
}

std::string filler(std::size_t i) { return "f" + std::to_string(i); }

}  // namespace

std::vector<std::string> zipf_sample(double alpha, std::size_t vocab, std::size_t n_tokens, std::uint64_t seed) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("zipf_sample: alpha must be >= 0");
  if (vocab < 2) throw InvalidArgument("zipf_sample: vocab must be >= 2");
  std::vector<double> weights(vocab);
  for (std::size_t r = 0; r < vocab; ++r) weights[r] = std::pow(static_cast<double>(r + 1), -alpha);
  std::discrete_distribution<std::size_t> draw(weights.begin(), weights.end());
  std::mt19937_64 rng(seed);

  std::vector<std::string> names(vocab);
  for (std::size_t r = 0; r < vocab; ++r) names[r] = "r" + std::to_string(r + 1);
  std::vector<std::string> stream;
  stream.reserve(n_tokens);
  for (std::size_t i = 0; i < n_tokens; ++i) stream.push_back(names[draw(rng)]);
  return stream;
}

std::vector<std::string> heaps_process(double beta, std::size_t n_tokens, std::uint64_t seed) {
  if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("heaps_process: beta must be in (0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::string> stream;
  stream.reserve(n_tokens);
  std::vector<std::size_t> seen;  // type ids in order of introduction
  for (std::size_t t = 1; t <= n_tokens; ++t) {
    const double p_new = std::min(1.0, beta * std::pow(static_cast<double>(t), beta - 1.0));
    std::size_t id = 0;
    if (seen.empty() || coin(rng) < p_new) {
      id = seen.size();
      seen.push_back(id);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, seen.size() - 1);
      id = seen[pick(rng)];
    }
    stream.push_back("w" + std::to_string(id));
  }
  return stream;
}

std::vector<std::string> periodic(std::size_t period, std::size_t n_tokens) {
  if (period == 0) throw InvalidArgument("periodic: period must be >= 1");
  std::vector<std::string> stream;
  stream.reserve(n_tokens);
  for (std::size_t i = 0; i < n_tokens; ++i) stream.push_back(i % period == 0 ? "a" : filler(i));
  return stream;
}

std::vector<std::size_t> geometric_gaps(double p, std::size_t n, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("geometric_gaps: p must be in (0, 1]");
  std::mt19937_64 rng(seed);
  std::geometric_distribution<std::size_t> failures(p);
  std::vector<std::size_t> gaps;
  gaps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gaps.push_back(failures(rng) + 1);
  return gaps;
}

std::vector<std::string> stream_from_gaps(const std::vector<std::size_t>& gaps) {
  std::vector<std::string> stream{"a"};
  for (auto gap : gaps) {
    if (gap == 0) throw InvalidArgument("stream_from_gaps: gaps must be >= 1");
    for (std::size_t k = 1; k < gap; ++k) stream.push_back(filler(stream.size()));
    stream.push_back("a");
  }
  return stream;
}

std::vector<std::string> iid_gaps(double p, std::size_t n_events, std::uint64_t seed) {
  if (n_events == 0) return {};
  return stream_from_gaps(geometric_gaps(p, n_events - 1, seed));
}

Process parse_process(const std::string& name) {
  if (name == "zipf_sample") return Process::ZipfSample;
  if (name == "heaps_process") return Process::HeapsProcess;
  if (name == "periodic") return Process::Periodic;
  if (name == "iid_gaps") return Process::IidGaps;
  throw InvalidArgument("unknown synth process '" + name + "'");
}

std::string process_name(Process process) {
  switch (process) {
    case Process::ZipfSample:
      return "zipf_sample";
    case Process::HeapsProcess:
      return "heaps_process";
    case Process::Periodic:
      return "periodic";
    case Process::IidGaps:
      return "iid_gaps";
  }
  return "heaps_process";
}

std::vector<std::vector<std::string>> generate(const SynthSpec& spec) {
  if (spec.n_tokens < 1) throw InvalidArgument("synth: n_tokens must be >= 1");
  std::vector<std::vector<std::string>> streams;
  for (std::size_t i = 0; i < spec.n_conversations; ++i) {
    const std::uint64_t seed = spec.seed + i;
    switch (spec.process) {
      case Process::ZipfSample:
        streams.push_back(zipf_sample(param(spec, "alpha"),
                                      static_cast<std::size_t>(param(spec, "vocab")), spec.n_tokens, seed));
        break;
      case Process::HeapsProcess:
        streams.push_back(heaps_process(param(spec, "beta"), spec.n_tokens, seed));
        break;
      case Process::Periodic:
        streams.push_back(periodic(static_cast<std::size_t>(param(spec, "period")), spec.n_tokens));
        break;
      case Process::IidGaps: {
        // n_tokens counts marker events for this process.
        streams.push_back(iid_gaps(param(spec, "p"), spec.n_tokens, seed));
        break;
      }
    }
  }
  return streams;
}

Corpus to_corpus(const std::vector<std::vector<std::string>>& streams, CorpusKind kind,
                 std::size_t utterance_length) {
  if (utterance_length == 0) throw InvalidArgument("to_corpus: utterance_length must be >= 1");
  Corpus corpus;
  corpus.kind = kind;
  corpus.provenance = "synthetic";
  for (std::size_t i = 0; i < streams.size(); ++i) {
    Conversation conversation;
    conversation.id = "synth" + std::to_string(i);
    conversation.kind = kind;
    for (std::size_t start = 0; start < streams[i].size(); start += utterance_length) {
      Utterance utterance;
      utterance.speaker_id = (conversation.utterances.size() % 2 == 0) ? "A" : "B";
      const std::size_t end = std::min(streams[i].size(), start + utterance_length);
      for (std::size_t k = start; k < end; ++k) {
        utterance.tokens.push_back({streams[i][k], streams[i][k], Upos::X, MacroClass::Other});
      }
      conversation.utterances.push_back(std::move(utterance));
    }
    corpus.conversations.push_back(std::move(conversation));
  }
  return corpus;
}

}  // namespace convoscale::synth
