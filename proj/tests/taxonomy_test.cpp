#include <gtest/gtest.h>

#include <random>

#include "lexmerge/synonym_merge.hpp"
#include "lexmerge/taxonomy.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace lexmerge {
namespace {

TEST(AlignSense, SampleMajority) {
  const auto graph = testing::sample_graph();
  const auto r = align_sense("ravir", 2, {"voler", "dérober"}, graph);
  EXPECT_EQ(r.status, AlignmentStatus::matched);
  EXPECT_EQ(r.synset, "n01");
  EXPECT_EQ(r.overlap, 2);
  EXPECT_EQ(r.synonym_count, 2);

  const auto charm = align_sense("ravir", 1, {"charmer"}, graph);
  EXPECT_EQ(charm.synset, "n02");
}

TEST(AlignSense, NoSynsetContainsTheWord) {
  const auto r = align_sense("victoire", 1, {"succès"}, testing::sample_graph());
  EXPECT_EQ(r.status, AlignmentStatus::no_synset);
  EXPECT_FALSE(r.synset.has_value());
}

TEST(AlignSense, HalfIsNotAMajority) {
  const auto r = align_sense("ravir", 2, {"voler", "gagner"}, testing::sample_graph());
  EXPECT_EQ(r.status, AlignmentStatus::no_majority);
  EXPECT_EQ(r.overlap, 1);
  EXPECT_EQ(align_sense("ravir", 2, {}, testing::sample_graph()).status, AlignmentStatus::no_majority);
}

TEST(AlignSense, TieAbstains) {
  const SynsetGraph graph({{"a", {"w", "x"}}, {"b", {"w", "x", "y"}}}, {});
  const auto r = align_sense("w", 1, {"x"}, graph);
  EXPECT_EQ(r.status, AlignmentStatus::ambiguous);
  EXPECT_FALSE(r.synset.has_value());
}

TEST(AlignSense, WordItselfDoesNotCount) {
  const SynsetGraph graph({{"a", {"w", "x"}}, {"b", {"w", "y"}}}, {});
  const auto r = align_sense("w", 1, {"w", "x", "y"}, graph);
  EXPECT_EQ(r.synonym_count, 2);
  EXPECT_EQ(r.status, AlignmentStatus::no_majority);
}

TEST(TaxonomyNeighbors, Chain) {
  const auto graph = testing::sample_graph();
  EXPECT_EQ(taxonomy_neighbors(graph, "n07", TaxonomyRelation::hypernym, 1),
            (std::set<std::string>{"acquérir", "obtenir"}));
  EXPECT_EQ(taxonomy_neighbors(graph, "n08", TaxonomyRelation::hyponym, 1),
            (std::set<std::string>{"gagner", "remporter"}));
  EXPECT_EQ(taxonomy_neighbors(graph, "n09", TaxonomyRelation::hyponym, 2),
            (std::set<std::string>{"gagner", "obtenir", "remporter"}));
  EXPECT_TRUE(taxonomy_neighbors(graph, "n05", TaxonomyRelation::hypernym, 3).empty());
}

TEST(TaxonomyNeighbors, BadArguments) {
  const auto graph = testing::sample_graph();
  EXPECT_THROW(taxonomy_neighbors(graph, "n99", TaxonomyRelation::hypernym, 1), std::out_of_range);
  EXPECT_THROW(taxonomy_neighbors(graph, "n01", TaxonomyRelation::hypernym, 0), std::invalid_argument);
}

TEST(AlignLexicon, OneSynsetPerLemma) {
  Inventories inv{{"D"}, {"C"}, {}, {}};
  const ReferenceLexicon lexicon(inv, {testing::make_sense("w", "v", 1, "D", "C"),
                                       testing::make_sense("w", "v", 2, "D", "C"),
                                       testing::make_sense("x", "v", 1, "D", "C"),
                                       testing::make_sense("y", "v", 1, "D", "C")});
  const SynsetGraph graph({{"a", {"w", "x", "y"}}}, {});
  const std::vector<SynonymResource> resources{synonyms_from_synsets(graph, "wn")};
  const auto merged = merge_synonyms(lexicon, resources);
  const auto alignments = align_lexicon(lexicon, merged.decisions, graph, "wn");
  EXPECT_EQ(alignments.at({"w", "v", 1}).status, AlignmentStatus::ambiguous);
  EXPECT_EQ(alignments.at({"w", "v", 2}).status, AlignmentStatus::ambiguous);
  EXPECT_EQ(alignments.at({"x", "v", 1}).synset, "a");
}

// matched implies a strict majority inside the chosen synset, and no other
// synset containing the word reaches the same overlap.
TEST(AlignmentProperty, MajoritySoundness) {
  std::mt19937 rng(31);
  for (int round = 0; round < 200; ++round) {
    const auto lexicon = testing::random_lexicon(rng);
    const auto graph = testing::random_graph(rng, lexicon);
    const auto& word = testing::pick(rng, lexicon.lemmas());
    std::set<std::string> synonyms;
    for (int k = testing::uniform(rng, 0, 5); k > 0; --k) synonyms.insert(testing::pick(rng, lexicon.lemmas()));
    const auto r = align_sense(word, 1, synonyms, graph);
    synonyms.erase(word);
    if (r.status != AlignmentStatus::matched) continue;
    const auto& chosen = graph.find(*r.synset)->members;
    ASSERT_TRUE(chosen.contains(word));
    int overlap = 0;
    for (const auto& s : synonyms) overlap += chosen.count(s);
    ASSERT_GT(2 * overlap, static_cast<int>(synonyms.size()));
    for (const auto& id : graph.synsets_containing(word)) {
      if (id == *r.synset) continue;
      int other = 0;
      for (const auto& s : synonyms) other += graph.find(id)->members.count(s);
      ASSERT_LT(other, overlap);
    }
  }
}

TEST(AlignmentProperty, UnrelatedSynsetChangesNothing) {
  std::mt19937 rng(32);
  for (int round = 0; round < 200; ++round) {
    const auto lexicon = testing::random_lexicon(rng);
    const auto graph = testing::random_graph(rng, lexicon);
    const auto& word = testing::pick(rng, lexicon.lemmas());
    std::set<std::string> synonyms;
    for (int k = testing::uniform(rng, 0, 5); k > 0; --k) synonyms.insert(testing::pick(rng, lexicon.lemmas()));

    std::vector<Synset> synsets;
    for (const auto& [id, s] : graph.synsets()) synsets.push_back(s);
    Synset extra{"extra", {}};
    for (const auto& s : synonyms) extra.members.insert(s);
    extra.members.insert("outsider");
    extra.members.erase(word);
    synsets.push_back(extra);
    std::vector<SynsetEdge> edges(graph.edges().begin(), graph.edges().end());
    const SynsetGraph grown(synsets, edges);
    ASSERT_EQ(align_sense(word, 1, synonyms, graph), align_sense(word, 1, synonyms, grown));
  }
}

}  // namespace
}  // namespace lexmerge
