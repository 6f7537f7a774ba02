#include "generators.hpp"

#include <array>
#include <cmath>

namespace gen {

using namespace convoscale;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::string> stream(Rng& rng, std::size_t length, std::size_t alphabet) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::string> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto k = static_cast<std::size_t>(std::floor(static_cast<double>(alphabet) * u(rng) * u(rng)));
    out.push_back("t" + std::to_string(std::min(k, alphabet - 1)));
  }
  return out;
}

std::string text(Rng& rng, std::size_t max_chunks) {
  static const std::array<const char*, 30> chunks = {
      "a",  "B",  "yeah", "Oh",  "I'm", "é",   "ß",    "Ωmega", "42",  "x1", "'",   "-",    "’",  ",",  ".",
      "!",  "?",  "...",  "!!",  " ",   "  ", "\t",   "≪",     "😀",  "é", "well-known", "rock'n'roll", "--", "\"", "日本"};
  std::string out;
  const auto n = uniform(rng, 0, max_chunks);
  for (std::size_t i = 0; i < n; ++i) out += chunks[uniform(rng, 0, chunks.size() - 1)];
  return out;
}

Upos upos(Rng& rng) { return kAllUpos[uniform(rng, 0, kAllUpos.size() - 1)]; }

Corpus tagged_corpus(Rng& rng, std::size_t max_conversations, std::size_t max_tokens) {
  Corpus corpus;
  corpus.kind = CorpusKind::Candor;
  const auto n_conv = uniform(rng, 1, max_conversations);
  for (std::size_t c = 0; c < n_conv; ++c) {
    Conversation conv;
    conv.id = "c" + std::to_string(c);
    conv.kind = corpus.kind;
    const auto forms = stream(rng, uniform(rng, 1, max_tokens), uniform(rng, 1, 40));
    std::size_t i = 0;
    while (i < forms.size()) {
      Utterance u;
      u.speaker_id = coin(rng) ? "A" : "B";
      const auto len = uniform(rng, 0, 8);
      for (std::size_t k = 0; k < len && i < forms.size(); ++k, ++i) {
        // Tie tags to forms most of the time so per-class uniqueness is exercised both ways.
        const auto tag = coin(rng, 0.8) ? kAllUpos[std::hash<std::string>{}(forms[i]) % kAllUpos.size()] : upos(rng);
        u.tokens.push_back(make_token(forms[i], tag));
      }
      conv.utterances.push_back(std::move(u));
    }
    corpus.conversations.push_back(std::move(conv));
  }
  return corpus;
}

Corpus movie_corpus(Rng& rng, std::size_t max_conversations) {
  static const std::array<const char*, 6> genres = {"drama", "Documentary", "comedy", "BIOGRAPHY", "thriller", "crime"};
  Corpus corpus;
  corpus.kind = CorpusKind::MoviesIndividual;
  const auto n_conv = uniform(rng, 0, max_conversations);
  for (std::size_t c = 0; c < n_conv; ++c) {
    Conversation conv;
    conv.id = "conv" + std::to_string(c);
    conv.kind = corpus.kind;
    conv.meta["movie_id"] = "m" + std::to_string(uniform(rng, 0, 5));
    std::vector<std::string> g;
    for (std::size_t k = uniform(rng, 0, 3); k > 0; --k) g.push_back(genres[uniform(rng, 0, genres.size() - 1)]);
    conv.meta["genres"] = g;
    if (coin(rng, 0.2)) conv.meta["null_utterances"] = std::to_string(uniform(rng, 0, 2));
    for (std::size_t u = uniform(rng, 1, 16); u > 0; --u) {
      Utterance utt;
      utt.speaker_id = "u" + std::to_string(uniform(rng, 0, 3));
      for (const auto& f : stream(rng, uniform(rng, 1, 6), 30)) utt.tokens.push_back(make_token(f, Upos::X));
      conv.utterances.push_back(std::move(utt));
    }
    corpus.conversations.push_back(std::move(conv));
  }
  return corpus;
}

}  // namespace gen
