#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "convoscale/corpus.hpp"

namespace convoscale::synth {

/// I.i.d. draws of ranks 1..vocab with p(r) proportional to r^-alpha, emitted as forms "r<rank>".
/// Throws InvalidArgument unless alpha >= 0 and vocab >= 2.
std::vector<std::string> zipf_sample(double alpha, std::size_t vocab, std::size_t n_tokens, std::uint64_t seed);

/// At step t a new type appears with probability min(1, beta * t^(beta - 1)),
/// otherwise a uniformly chosen previously seen type repeats; E[N(t)] ~ t^beta.
/// Oracle-only construction. Forms are "w<id>".
std::vector<std::string> heaps_process(double beta, std::size_t n_tokens, std::uint64_t seed);

/// "a" every `period` tokens (starting at position 0), distinct fillers elsewhere.
std::vector<std::string> periodic(std::size_t period, std::size_t n_tokens);

/// n geometric(p) gaps on {1, 2, ...}.
std::vector<std::size_t> geometric_gaps(double p, std::size_t n, std::uint64_t seed);

/// Places marker "a" with geometric(p) gaps; the stream ends at the last marker.
std::vector<std::string> iid_gaps(double p, std::size_t n_events, std::uint64_t seed);

/// Stream whose marker "a" occurs with exactly the given gaps (fillers between).
std::vector<std::string> stream_from_gaps(const std::vector<std::size_t>& gaps);

enum class Process { ZipfSample, HeapsProcess, Periodic, IidGaps };

struct SynthSpec {
  Process process = Process::HeapsProcess;
  std::map<std::string, double> params;  // alpha, vocab, beta, period, p
  std::size_t n_tokens = 100000;
  std::size_t n_conversations = 1;
  std::uint64_t seed = 0;
};

Process parse_process(const std::string& name);
std::string process_name(Process process);

/// One stream per conversation; conversation i uses seed + i.
std::vector<std::vector<std::string>> generate(const SynthSpec& spec);

/// Wraps streams as a corpus with placeholder tags; utterances of `utterance_length` tokens
/// alternate between speakers "A" and "B".
Corpus to_corpus(const std::vector<std::vector<std::string>>& streams, CorpusKind kind = CorpusKind::Generic,
                 std::size_t utterance_length = 20);

}  // namespace convoscale::synth
