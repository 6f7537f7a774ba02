#include <gtest/gtest.h>

#include <cmath>

#include "convoscale/descriptives.hpp"
#include "convoscale/errors.hpp"
#include "convoscale/ingest.hpp"

using namespace convoscale;

namespace {

using Forms = std::vector<std::string>;

Conversation conversation_of(const std::string& id, const Forms& forms, Upos tag = Upos::X) {
  Conversation c;
  c.id = id;
  Utterance u;
  u.speaker_id = "A";
  for (const auto& f : forms) u.tokens.push_back(make_token(f, tag));
  c.utterances.push_back(u);
  return c;
}

Utterance timed(const std::string& speaker, double start, double stop) {
  Utterance u;
  u.speaker_id = speaker;
  u.start_s = start;
  u.stop_s = stop;
  u.tokens.push_back(make_token("mm", Upos::INTJ));
  return u;
}

}  // namespace

TEST(Summarize, Moments) {
  const std::vector<double> v = {2, 4, 4, 4, 5, 5, 7, 9};
  const auto s = summarize(v);
  EXPECT_EQ(s.n, 8u);
  EXPECT_DOUBLE_EQ(s.mean, 5.0);
  EXPECT_NEAR(s.sd, std::sqrt(32.0 / 7.0), 1e-12);
  EXPECT_DOUBLE_EQ(s.median, 4.5);
  EXPECT_EQ(s.min, 2.0);
  EXPECT_EQ(s.max, 9.0);
  EXPECT_NEAR(s.cv, s.sd / 5.0, 1e-15);
}

TEST(BasicStats, SingleConversationHasZeroSpread) {
  Corpus corpus;
  corpus.conversations.push_back(conversation_of("c", {"hello", ",", "world", "!"}));
  const auto s = basic_stats(corpus, Measure::Words);
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_EQ(s.sd, 0.0);
  EXPECT_EQ(s.cv, 0.0);
  EXPECT_THROW(basic_stats(Corpus{}, Measure::Words), InvalidArgument);
}

TEST(BasicStats, SpeakerWordsWithinConversation) {
  Corpus corpus;
  Conversation c;
  c.id = "c";
  c.utterances.push_back({"A", {make_token("one", Upos::X), make_token("two", Upos::X)}, {}, {}, {}});
  c.utterances.push_back({"B", {make_token("three", Upos::X), make_token(".", Upos::X)}, {}, {}, {}});
  c.utterances.push_back({"A", {make_token("four", Upos::X)}, {}, {}, {}});
  corpus.conversations.push_back(c);
  EXPECT_EQ(measure_values(corpus, Measure::SpeakerWords), (std::vector<double>{3, 1}));
  EXPECT_EQ(measure_values(corpus, Measure::Utterances), (std::vector<double>{3}));
}

TEST(Ttr, DirectRatio) {
  EXPECT_DOUBLE_EQ(ttr(conversation_of("c", {"a", "a", "a", "b"})), 0.5);
  EXPECT_DOUBLE_EQ(ttr(conversation_of("c", {"a", "b", "c"})), 1.0);
  EXPECT_THROW(ttr(conversation_of("c", {})), InvalidArgument);
  Corpus corpus;
  corpus.conversations.push_back(conversation_of("x", {"a", "a"}));
  corpus.conversations.push_back(conversation_of("y", {"a", "b"}));
  const auto t = corpus_ttr(corpus);
  EXPECT_DOUBLE_EQ(t.mean, 0.75);
  EXPECT_NEAR(t.sd, std::sqrt(0.125), 1e-15);
}

TEST(Pearson, IdentityAntisymmetryAndErrors) {
  const std::vector<double> x = {1, 2, 3, 5, 8};
  std::vector<double> neg;
  for (double v : x) neg.push_back(-v);
  EXPECT_NEAR(pearson_r(x, x), 1.0, 1e-15);
  EXPECT_NEAR(pearson_r(x, neg), -1.0, 1e-15);
  EXPECT_THROW(pearson_r(x, std::vector<double>{1, 1, 1, 1, 1}), InvalidArgument);
  EXPECT_THROW(pearson_r(std::vector<double>{1}, std::vector<double>{2}), InvalidArgument);
  EXPECT_THROW(pearson_r(x, std::vector<double>{1, 2}), InvalidArgument);
}

TEST(UniqueRuns, Examples) {
  EXPECT_EQ(max_unique_run(Forms{"a", "b", "a", "a", "a", "b", "c"}), 4u);
  EXPECT_EQ(max_unique_run(Forms{"a", "b", "c"}), 0u);
  EXPECT_EQ(max_unique_run(Forms{"a", "a"}), 1u);
}

TEST(UniqueRuns, OutlierCutoff) {
  Corpus corpus;
  for (int i = 0; i < 9; ++i) corpus.conversations.push_back(conversation_of("c" + std::to_string(i), {"a", "b", "a"}));
  corpus.conversations.push_back(conversation_of("long", {"a", "a", "a", "a", "a", "a"}));
  auto report = run_outliers(corpus, 0.9);
  EXPECT_EQ(report.cutoff, 1u);
  EXPECT_EQ(report.outliers, (std::vector<std::string>{"long"}));
  EXPECT_DOUBLE_EQ(report.median, 1.0);
  report = run_outliers(corpus, 0.9995);
  EXPECT_EQ(report.cutoff, 5u);
  EXPECT_TRUE(report.outliers.empty());
}

TEST(PosProportions, SingleClassAndUntagged) {
  Corpus corpus;
  corpus.conversations.push_back(conversation_of("c", {"dog", "cat", "dog"}, Upos::NOUN));
  const auto s = pos_proportions(corpus);
  EXPECT_EQ(s.total[macro_index(MacroClass::Noun)], 1.0);
  EXPECT_EQ(s.unique[macro_index(MacroClass::Noun)], 1.0);
  EXPECT_EQ(s.total[macro_index(MacroClass::Verb)], 0.0);
  Corpus raw;
  raw.conversations.push_back(conversation_of("c", {"dog"}));
  EXPECT_THROW(pos_proportions(raw), InvalidArgument);
}

TEST(PosProportions, FormCountedOncePerClass) {
  Corpus corpus;
  Conversation c = conversation_of("c", {"run", "run"}, Upos::NOUN);
  c.utterances[0].tokens.push_back(make_token("run", Upos::VERB));
  corpus.conversations.push_back(c);
  const auto s = pos_proportions(corpus);
  EXPECT_DOUBLE_EQ(s.unique[macro_index(MacroClass::Noun)], 0.5);
  EXPECT_DOUBLE_EQ(s.unique[macro_index(MacroClass::Verb)], 0.5);
  EXPECT_NEAR(s.total[macro_index(MacroClass::Noun)], 2.0 / 3.0, 1e-15);
}

TEST(TopInterjections, SharesAndBoundaries) {
  Corpus corpus;
  corpus.conversations.push_back(conversation_of("c", {"yeah", "Yeah", "oh", "yeah", "um"}, Upos::INTJ));
  const auto rows = top_interjections(corpus, 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].form, "yeah");
  EXPECT_EQ(rows[0].count, 3u);
  EXPECT_DOUBLE_EQ(rows[0].share, 0.6);
  EXPECT_EQ(rows[1].form, "oh");
  EXPECT_TRUE(top_interjections(corpus, 0).empty());
  Corpus none;
  none.conversations.push_back(conversation_of("c", {"dog"}, Upos::NOUN));
  EXPECT_TRUE(top_interjections(none, 5).empty());
}

TEST(PauseScore, DefaultSchema) {
  EXPECT_EQ(pause_score(-0.5), -1);
  EXPECT_EQ(pause_score(0.0), 0);
  EXPECT_EQ(pause_score(0.2), 0);
  EXPECT_EQ(pause_score(0.4), 1);
  EXPECT_EQ(pause_score(1.2499), 1);
  EXPECT_EQ(pause_score(1.25), 2);
  EXPECT_EQ(pause_score(2.0), 2);
  EXPECT_THROW(pause_score(std::nan("")), InvalidArgument);
}

TEST(PauseScore, LiteralThresholdsRejected) {
  PauseThresholds literal;
  literal.medium_below = 4.0;
  EXPECT_THROW(literal.validate(), InvalidArgument);
  EXPECT_THROW(pause_score(1.0, literal), InvalidArgument);
  PauseThresholds custom{0.0, 0.5, 2.0, 2.0};
  EXPECT_EQ(pause_score(1.5, custom), 1);
}

TEST(Pauses, OnlyAtSpeakerChanges) {
  Conversation c;
  c.utterances = {timed("A", 0.0, 1.0), timed("A", 1.5, 2.0), timed("B", 1.8, 3.0), timed("A", 4.5, 5.0)};
  const auto p = pauses(c);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], -0.2, 1e-12);
  EXPECT_NEAR(p[1], 1.5, 1e-12);
}
