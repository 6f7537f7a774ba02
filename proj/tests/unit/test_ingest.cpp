#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "convoscale/errors.hpp"
#include "convoscale/ingest.hpp"

using namespace convoscale;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TEST_DATA_DIR;

Corpus read(const std::string& text) {
  std::istringstream in(text);
  return read_tagged_jsonl(in, "inline");
}

std::string error_of(const std::string& text) {
  try {
    read(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("convoscale_ingest_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(TaggedJsonl, IdentityLoad) {
  const auto corpus = read(
      R"({"id":"c1","kind":"candor","meta":{},"utterances":[)"
      R"({"speaker":"A","start_s":0.5,"stop_s":1.0,"tokens":[{"s":"Oh","p":"INTJ"},{"s":",","p":"PUNCT"},{"s":"hi","p":"INTJ"}]},)"
      R"({"speaker":"B","start_s":null,"stop_s":null,"tokens":[{"s":"Hello","p":"INTJ"},{"s":"!","p":"PUNCT"}]}]})"
      "\n");
  ASSERT_EQ(corpus.conversations.size(), 1u);
  EXPECT_EQ(corpus.kind, CorpusKind::Candor);
  EXPECT_EQ(corpus.utterance_count(), 2u);
  EXPECT_EQ(corpus.token_count(), 5u);
  const auto& u = corpus.conversations[0].utterances;
  EXPECT_EQ(u[0].tokens[0].form, "oh");
  EXPECT_EQ(u[0].tokens[0].macro, MacroClass::Intj);
  EXPECT_EQ(u[0].start_s, 0.5);
  EXPECT_FALSE(u[1].start_s.has_value());
}

TEST(TaggedJsonl, MissingTokensIsSchemaErrorAtLine1) {
  const auto what = error_of(R"({"id":"c1","kind":"candor","meta":{},"utterances":[{"speaker":"A"}]})");
  EXPECT_NE(what.find("line 1"), std::string::npos) << what;
  EXPECT_NE(what.find("tokens"), std::string::npos) << what;
}

TEST(TaggedJsonl, ErrorsCarryLineNumbers) {
  const std::string good = R"({"id":"c1","kind":"generic","meta":{},"utterances":[]})";
  EXPECT_NE(error_of(good + "\n\n{not json\n").find("line 3"), std::string::npos);
  const auto bad_tag = error_of(good + "\n" +
                                R"({"id":"c2","kind":"generic","meta":{},"utterances":[{"speaker":"A","tokens":[{"s":"x","p":"ADVERB"}]}]})");
  EXPECT_NE(bad_tag.find("line 2"), std::string::npos) << bad_tag;
  EXPECT_NE(bad_tag.find("ADVERB"), std::string::npos) << bad_tag;
}

TEST(TaggedJsonl, TimingAndKindChecks) {
  EXPECT_NE(error_of(R"({"id":"c","kind":"candor","meta":{},"utterances":[{"speaker":"A","start_s":2,"stop_s":1,"tokens":[]}]})")
                .find("stop_s"),
            std::string::npos);
  EXPECT_FALSE(error_of(R"({"id":"a","kind":"candor","meta":{},"utterances":[]})"
                        "\n"
                        R"({"id":"b","kind":"generic","meta":{},"utterances":[]})")
                   .empty());
  EXPECT_FALSE(error_of(R"({"id":"a","kind":"podcast","meta":{},"utterances":[]})").empty());
}

TEST(TaggedJsonl, MacroFieldIgnored) {
  const auto corpus =
      read(R"({"id":"c","kind":"generic","meta":{},"utterances":[{"speaker":"A","tokens":[{"s":"quickly","p":"ADV","m":"NOUN"}]}]})");
  EXPECT_EQ(corpus.conversations[0].utterances[0].tokens[0].macro, MacroClass::Verb);
}

TEST(TaggedJsonl, UndecodableBytesReplacedAndCounted) {
  const auto corpus =
      read("{\"id\":\"c\",\"kind\":\"generic\",\"meta\":{},\"utterances\":[{\"speaker\":\"A\",\"tokens\":[{\"s\":\"caf\xe9\",\"p\":\"NOUN\"}]}]}");
  EXPECT_EQ(corpus.conversations[0].utterances[0].tokens[0].surface, "caf\xef\xbf\xbd");
  EXPECT_NE(corpus.provenance.find("replaced_bytes=1"), std::string::npos) << corpus.provenance;
}

TEST(TaggedJsonl, FixtureFileRoundTripIsByteStable) {
  const auto corpus = load_tagged_jsonl(kData / "tagged_small.jsonl");
  EXPECT_EQ(corpus.conversations.size(), 2u);
  std::ostringstream first;
  write_tagged_jsonl(corpus, first);
  std::istringstream in(first.str());
  std::ostringstream second;
  write_tagged_jsonl(read_tagged_jsonl(in, "again"), second);
  EXPECT_EQ(first.str(), second.str());
}

TEST(TaggedJsonl, MissingFile) { EXPECT_THROW(load_tagged_jsonl("/nonexistent/x.jsonl"), Error); }

TEST(MovieDialogs, ToyFixtureInFileOrder) {
  const auto corpus = load_movie_dialogs(kData / "movie_dialogs_toy");
  EXPECT_EQ(corpus.kind, CorpusKind::MoviesIndividual);
  ASSERT_EQ(corpus.conversations.size(), 3u);
  EXPECT_EQ(*corpus.conversations[0].meta_text("movie_id"), "m0");
  EXPECT_EQ(*corpus.conversations[1].meta_text("movie_id"), "m1");
  EXPECT_EQ(*corpus.conversations[0].meta_text("title"), "ten things");
  EXPECT_EQ(corpus.conversations[1].meta_list("genres"), (std::vector<std::string>{"Documentary", "history"}));
  const auto& first = corpus.conversations[0];
  ASSERT_EQ(first.utterances.size(), 3u);
  EXPECT_EQ(first.utterances[0].speaker_id, "u0");
  EXPECT_EQ(*first.utterances[2].text, "Oh... yeah!");
  for (const auto& u : first.utterances) {
    for (const auto& t : u.tokens) EXPECT_EQ(t.upos, Upos::X);
  }
  EXPECT_EQ(first.null_utterances(), 0u);
}

TEST(MovieDialogs, MissingLineFlagsConversation) {
  const auto corpus = load_movie_dialogs(kData / "movie_dialogs_toy");
  const auto& third = corpus.conversations[2];
  EXPECT_EQ(third.null_utterances(), 1u);
  EXPECT_EQ(third.utterances.size(), 2u);
}

TEST(MovieDialogs, MissingMetadataFileNamed) {
  const auto dir = scratch("missing");
  for (const char* name : {"movie_titles_metadata.txt", "movie_characters_metadata.txt", "movie_conversations.txt"}) {
    fs::copy_file(kData / "movie_dialogs_toy" / name, dir / name);
  }
  try {
    load_movie_dialogs(dir);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("movie_lines.txt"), std::string::npos) << e.what();
  }
}

TEST(GroupByMovie, TwoAndThreeConversations) {
  Corpus corpus;
  corpus.kind = CorpusKind::MoviesIndividual;
  const std::vector<std::string> movies = {"m1", "m2", "m1", "m2", "m2"};
  for (std::size_t i = 0; i < movies.size(); ++i) {
    Conversation c;
    c.id = "conv" + std::to_string(i);
    c.kind = corpus.kind;
    c.meta["movie_id"] = movies[i];
    c.utterances.push_back({"a", {make_token("w" + std::to_string(i), Upos::X), make_token("x", Upos::X)}, {}, {}, {}});
    corpus.conversations.push_back(c);
  }
  const auto grouped = group_by_movie(corpus);
  ASSERT_EQ(grouped.conversations.size(), 2u);
  EXPECT_EQ(grouped.kind, CorpusKind::MoviesGrouped);
  EXPECT_EQ(grouped.conversations[0].id, "m1");
  EXPECT_EQ(grouped.conversations[0].token_count(), 4u);
  EXPECT_EQ(grouped.conversations[1].token_count(), 6u);
  EXPECT_EQ(*grouped.conversations[1].meta_text("source_conversations"), "3");
  EXPECT_EQ(grouped.conversations[0].utterances[1].tokens[0].surface, "w2");
}

TEST(GroupByMovie, Errors) {
  Corpus corpus;
  corpus.kind = CorpusKind::MoviesIndividual;
  corpus.conversations.push_back({"c0", CorpusKind::MoviesIndividual, {}, {}});
  EXPECT_THROW(group_by_movie(corpus), InvalidArgument);
  corpus.kind = CorpusKind::Candor;
  EXPECT_THROW(group_by_movie(corpus), InvalidArgument);
}

TEST(Filter, NineUtterancesExcludedAtTen) {
  Corpus corpus;
  corpus.kind = CorpusKind::MoviesIndividual;
  for (std::size_t n : {9u, 10u}) {
    Conversation c;
    c.id = "n" + std::to_string(n);
    for (std::size_t k = 0; k < n; ++k) c.utterances.push_back({"a", {make_token("x", Upos::X)}, {}, {}, {}});
    corpus.conversations.push_back(c);
  }
  const auto kept = filter_conversations(corpus, {10, {}, false});
  ASSERT_EQ(kept.conversations.size(), 1u);
  EXPECT_EQ(kept.conversations[0].id, "n10");
}

TEST(Filter, IdentitySettingsReturnInput) {
  const auto corpus = load_movie_dialogs(kData / "movie_dialogs_toy");
  const auto same = filter_conversations(corpus, {});
  EXPECT_EQ(same.conversations, corpus.conversations);
}

TEST(Filter, MovieDefaultsOnToyFixture) {
  const auto corpus = load_movie_dialogs(kData / "movie_dialogs_toy");
  FilterSettings s = FilterSettings::movie_defaults();
  s.min_utterances = 0;
  // conv1 is a documentary (case-insensitive), conv2 has a null utterance.
  const auto kept = filter_conversations(corpus, s);
  ASSERT_EQ(kept.conversations.size(), 1u);
  EXPECT_EQ(kept.conversations[0].id, "conv0");
  EXPECT_NE(kept.provenance.find("drop_null=true"), std::string::npos);
  EXPECT_EQ(filter_conversations(kept, s).provenance, kept.provenance);
}

TEST(PlainText, OneConversationPerFile) {
  const auto dir = scratch("plain");
  std::ofstream(dir / "b.txt") << "second file\n";
  std::ofstream(dir / "a.txt") << "It was a dark night.\n\n  The end.  \n";
  std::ofstream(dir / "skip.md") << "ignored\n";
  const auto corpus = load_plain_text({dir});
  ASSERT_EQ(corpus.conversations.size(), 2u);
  EXPECT_EQ(corpus.conversations[0].id, "a");
  EXPECT_EQ(corpus.conversations[0].utterances.size(), 2u);
  EXPECT_EQ(corpus.conversations[0].token_count(), 9u);
}
