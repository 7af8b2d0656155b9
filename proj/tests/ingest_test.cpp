#include <gtest/gtest.h>

#include <random>

#include "lexmerge/ingest.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace lexmerge {
namespace {

const std::string kHeader =
    "#!domain SOC PSY\n"
    "#!class S4 P2\n"
    "#!relation VARG[DIR]\n"
    "#!suffix ure\n";

std::vector<Diagnostic> errors_of(const std::function<void()>& parse) {
  try {
    parse();
  } catch (const ValidationError& e) {
    return e.diagnostics();
  }
  return {};
}

bool mentions(const std::vector<Diagnostic>& diagnostics, const std::string& needle, std::size_t line) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& d) {
    return d.severity == Severity::error && d.line == line && d.message.find(needle) != std::string::npos;
  });
}

TEST(ParseReference, SampleBundle) {
  const auto lexicon = testing::sample_lexicon();
  EXPECT_EQ(lookup(lexicon, "couper").size(), 3u);
  EXPECT_TRUE(lexicon.inventories().classes.contains("S4"));
}

TEST(ParseReference, UnknownClassNamesCodeAndLine) {
  const std::string text = kHeader +
                           "ravir\tv\t1\tcharmer\tPSY\tP2\t-\t-\t-\t-\n"
                           "ravir\tv\t2\tvoler\tSOC\tZ9\t-\t-\t-\t-\n";
  const auto diagnostics = errors_of([&] { parse_reference(std::string_view(text), "bad.lex"); });
  ASSERT_FALSE(diagnostics.empty());
  EXPECT_TRUE(mentions(diagnostics, "Z9", 6));
  EXPECT_EQ(diagnostics.front().source, "bad.lex");
}

TEST(ParseReference, CollectsEveryError) {
  const std::string text = kHeader +
                           "a\tv\t1\tl\tXXX\tP2\t-\t-\t-\t-\n"
                           "b\tv\tone\tl\tSOC\tS4\t-\t-\t-\t-\n"
                           "c\tv\t1\tl\tSOC\n";
  const auto diagnostics = errors_of([&] { parse_reference(std::string_view(text)); });
  EXPECT_TRUE(mentions(diagnostics, "XXX", 5));
  EXPECT_TRUE(mentions(diagnostics, "", 6));
  EXPECT_TRUE(mentions(diagnostics, "", 7));
}

TEST(ParseReference, DuplicateSenseIsAnError) {
  const std::string text = kHeader +
                           "a\tv\t1\tl\tSOC\tS4\t-\t-\t-\t-\n"
                           "a\tv\t1\tm\tPSY\tP2\t-\t-\t-\t-\n";
  EXPECT_FALSE(errors_of([&] { parse_reference(std::string_view(text)); }).empty());
}

TEST(ParseReference, InvalidUtf8IsReportedWithItsLine) {
  const std::string text = kHeader + "a\xFF\tv\t1\tl\tSOC\tS4\t-\t-\t-\t-\n";
  const auto diagnostics = errors_of([&] { parse_reference(std::string_view(text)); });
  ASSERT_FALSE(diagnostics.empty());
  EXPECT_EQ(diagnostics.front().line, 5u);
}

TEST(ParseReference, DecomposedInputIsNormalized) {
  const std::string text = kHeader + "de\xCC\x81rober\tv\t1\tl\tSOC\tS4\t-\t-\t-\t-\n";
  const auto lexicon = parse_reference(std::string_view(text));
  EXPECT_EQ(lookup(lexicon, "dérober").size(), 1u);
}

TEST(ParseReference, CrlfIsAcceptedWithWarning) {
  const std::string text = "#!domain SOC\r\n#!class S4\r\na\tv\t1\tl\tSOC\tS4\t-\t-\t-\t-\r\n";
  std::vector<Diagnostic> warnings;
  const auto lexicon = parse_reference(std::string_view(text), "<r>", &warnings);
  EXPECT_EQ(lexicon.sense_count(), 1u);
  EXPECT_FALSE(warnings.empty());
}

TEST(ParseSynonyms, MergesRepeatedLinesAndDeduplicates) {
  const std::string text = "ravir\tvoler, voler , dérober\nravir\tcharmer\n";
  const auto resource = parse_synonym_resource(std::string_view(text), "bailly");
  EXPECT_EQ(resource.name, "bailly");
  EXPECT_EQ(resource.proposals.at("ravir"), (std::set<std::string>{"charmer", "dérober", "voler"}));
}

TEST(ParseSynonyms, SelfSynonymIsDroppedWithWarning) {
  std::vector<Diagnostic> warnings;
  const auto resource = parse_synonym_resource(std::string_view("ravir\travir, voler\n"), "x", &warnings);
  EXPECT_EQ(resource.proposals.at("ravir"), (std::set<std::string>{"voler"}));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].line, 1u);
  EXPECT_EQ(warnings[0].severity, Severity::warning);
}

TEST(ParseSynonyms, MultiwordSpacingIsSqueezed) {
  const auto resource = parse_synonym_resource(std::string_view("ravir\tmettre  la main   sur\n"), "x");
  EXPECT_TRUE(resource.proposals.at("ravir").contains("mettre la main sur"));
}

TEST(ParseSynonyms, MissingTabIsAnError) {
  EXPECT_THROW(parse_synonym_resource(std::string_view("ravir voler\n"), "x"), ValidationError);
}

TEST(ParseSynsets, SampleGraph) {
  const auto graph = testing::sample_graph();
  EXPECT_EQ(graph.synsets().size(), 9u);
  EXPECT_EQ(graph.synsets_containing("ravir"), (std::vector<std::string>{"n01", "n02"}));
  EXPECT_EQ(graph.neighbors("n01", TaxonomyRelation::hypernym), std::vector<std::string>{"n03"});
  EXPECT_EQ(graph.neighbors("n03", TaxonomyRelation::hyponym), std::vector<std::string>{"n01"});
}

TEST(ParseSynsets, DanglingEdgeNamesMissingId) {
  const std::string text = "S\tS1\ta, b\nE\tS1\thypernym\tS99\n";
  const auto diagnostics = errors_of([&] { parse_synset_resource(std::string_view(text)); });
  EXPECT_TRUE(mentions(diagnostics, "S99", 2));
}

TEST(ParseSynsets, HypernymCycleNamesBothSynsets) {
  const std::string text = "S\tA\tx\nS\tB\ty\nE\tA\thypernym\tB\nE\tB\thypernym\tA\n";
  const auto diagnostics = errors_of([&] { parse_synset_resource(std::string_view(text)); });
  ASSERT_FALSE(diagnostics.empty());
  const bool named = std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.message.find("cycle") != std::string::npos && d.message.find('A') != std::string::npos &&
           d.message.find('B') != std::string::npos && d.line >= 1;
  });
  EXPECT_TRUE(named);
}

TEST(ParseSynsets, HyponymEdgesFeedTheCycleCheck) {
  const std::string text = "S\tA\tx\nS\tB\ty\nE\tA\thypernym\tB\nE\tA\thyponym\tB\n";
  EXPECT_THROW(parse_synset_resource(std::string_view(text)), ValidationError);
}

TEST(ParseSynsets, DuplicateIdAndEmptySynset) {
  EXPECT_THROW(parse_synset_resource(std::string_view("S\tA\tx\nS\tA\ty\n")), ValidationError);
  EXPECT_THROW(parse_synset_resource(std::string_view("S\tA\t\n")), ValidationError);
}

TEST(ParseWordlist, TrimsAndDeduplicates) {
  const auto words = parse_wordlist(std::string_view("coupure\n  coupure \n\n# note\ncoupant\n"));
  EXPECT_EQ(words, (std::set<std::string>{"coupant", "coupure"}));
}

TEST(ParseWordlist, WordWithInnerSpaceIsAnError) {
  EXPECT_THROW(parse_wordlist(std::string_view("coup ure\n")), ValidationError);
}

// The same bytes always give the same value, and serializing then parsing
// is the identity.
TEST(ParserProperty, DeterministicRoundTrips) {
  std::mt19937 rng(7);
  for (int round = 0; round < 100; ++round) {
    const auto lexicon = testing::random_lexicon(rng);
    const auto graph = testing::random_graph(rng, lexicon);
    const auto resource = testing::random_resource(rng, lexicon, "r");

    const auto graph_text = serialize_synsets(graph);
    ASSERT_EQ(parse_synset_resource(std::string_view(graph_text)), graph) << graph_text;
    ASSERT_EQ(parse_synset_resource(std::string_view(graph_text)), parse_synset_resource(std::string_view(graph_text)));

    auto expected = resource;
    std::erase_if(expected.proposals, [](const auto& kv) { return kv.second.empty(); });
    const auto resource_text = serialize_synonym_resource(resource);
    ASSERT_EQ(parse_synonym_resource(std::string_view(resource_text), "r"), expected) << resource_text;

    const auto lex_text = serialize_reference(lexicon);
    ASSERT_EQ(parse_reference(std::string_view(lex_text)), parse_reference(std::string_view(lex_text)));
  }
}

TEST(SynonymsFromSynsets, EveryMemberProposesTheOthers) {
  const auto resource = synonyms_from_synsets(testing::sample_graph(), "wordnet");
  EXPECT_EQ(resource.proposals.at("couper"), (std::set<std::string>{"interrompre", "trancher"}));
  EXPECT_FALSE(resource.proposals.at("couper").contains("couper"));
}

}  // namespace
}  // namespace lexmerge
