#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "convoscale/corpus.hpp"

namespace gen {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

/// Forms "t0".."t<alphabet-1>", skewed toward low indices so repeats are common.
std::vector<std::string> stream(Rng& rng, std::size_t length, std::size_t alphabet);

/// Mixed-script text with punctuation, joiners, repeated spaces and combining marks.
std::string text(Rng& rng, std::size_t max_chunks);

convoscale::Upos upos(Rng& rng);

/// Tagged corpus with random conversations; some utterances may be empty.
convoscale::Corpus tagged_corpus(Rng& rng, std::size_t max_conversations, std::size_t max_tokens);

/// movies_individual corpus with movie ids, genre lists and null counts in meta.
convoscale::Corpus movie_corpus(Rng& rng, std::size_t max_conversations);

}  // namespace gen
