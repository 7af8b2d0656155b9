#include <gtest/gtest.h>

#include <random>

#include "lexmerge/derivation_merge.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace lexmerge {
namespace {

const std::set<std::string> kSuffixes{"ure", "eur", "ant", "age", "able"};

TEST(GenerateCandidates, SampleWordlist) {
  const auto candidates = generate_candidates("couper", testing::sample_wordlist(), kSuffixes);
  const std::set<DerivativeCandidate> expected{{"coupable", "coup", "able"},
                                               {"coupage", "coup", "age"},
                                               {"coupant", "coup", "ant"},
                                               {"coupeur", "coup", "eur"},
                                               {"coupure", "coup", "ure"}};
  EXPECT_EQ(candidates, expected);
}

TEST(GenerateCandidates, RadicalMustBeALemmaPrefix) {
  const auto candidates = generate_candidates("couper", {"lame", "voleur", "recoupure"}, kSuffixes);
  EXPECT_TRUE(candidates.empty());
}

TEST(FilterDerivative, SampleVerdicts) {
  const auto lexicon = testing::sample_lexicon();
  const auto siblings = lexicon.senses_of("couper", "v");
  auto verdict = [&](const std::string& surface, const std::string& suffix, int target) {
    return filter_derivative(siblings, {surface, "coup", suffix}, target).verdict;
  };
  EXPECT_EQ(verdict("coupure", "ure", 1), DerivativeVerdict::kept);
  EXPECT_EQ(verdict("coupage", "age", 1), DerivativeVerdict::rejected_other_sense);
  EXPECT_EQ(verdict("coupage", "age", 5), DerivativeVerdict::kept);
  EXPECT_EQ(verdict("coupable", "able", 1), DerivativeVerdict::rejected_no_instruction);
  EXPECT_EQ(filter_derivative(siblings, {"coupure", "coup", "ure"}, 1).assigned_sense, 1);
  EXPECT_THROW(filter_derivative(siblings, {"coupure", "coup", "ure"}, 9), UnknownSenseError);
}

// "lame" = "la" + "me": the radical is under the minimum length, whatever
// the instructions say.
TEST(FilterDerivative, ShortRadicalIsRejected) {
  auto la = testing::make_sense("la", "n", 1, "D", "C");
  la.suffix_instructions.push_back({"me", 1});
  const std::vector<SenseEntry> siblings{la};
  const auto d = filter_derivative(siblings, {"lame", "la", "me"}, 1);
  EXPECT_EQ(d.verdict, DerivativeVerdict::rejected_short_radical);
  EXPECT_FALSE(d.assigned_sense.has_value());
}

TEST(MergeDerivatives, MissingWordlistEntryGivesNoDecision) {
  const auto lexicon = testing::sample_lexicon();
  const auto decisions = merge_derivatives(lexicon, {"coupure"});
  ASSERT_TRUE(decisions.contains({"couper", "v", 1}));
  EXPECT_EQ(decisions.at({"couper", "v", 1}).size(), 1u);
  const auto empty = merge_derivatives(lexicon, {});
  for (const auto& [key, list] : empty) EXPECT_TRUE(list.empty()) << to_string(key);
}

// Kept and rejected partition the candidates of each sense; a kept
// derivative's sense is the target of one of the entry's instructions for
// its suffix.
TEST(DerivativeProperty, PartitionAndSoundness) {
  std::mt19937 rng(21);
  for (int round = 0; round < 80; ++round) {
    const auto lexicon = testing::random_lexicon(rng);
    const auto wordlist = testing::random_wordlist(rng, lexicon);
    const auto decisions = merge_derivatives(lexicon, wordlist);
    for (const auto& [key, list] : decisions) {
      const auto candidates = generate_candidates(key.lemma, wordlist, lexicon.inventories().suffixes);
      std::set<DerivativeCandidate> seen;
      for (const auto& d : list) {
        ASSERT_TRUE(seen.insert(d.candidate).second);
        ASSERT_EQ(d.verdict == DerivativeVerdict::kept, d.assigned_sense.has_value());
        if (d.verdict == DerivativeVerdict::kept) {
          ASSERT_EQ(*d.assigned_sense, key.sense_id);
          bool instructed = false;
          for (const auto& s : lexicon.senses_of(key.lemma, key.pos)) {
            for (const auto& ins : s.suffix_instructions) {
              instructed |= ins.suffix == d.candidate.suffix && ins.target_sense == key.sense_id;
            }
          }
          ASSERT_TRUE(instructed);
        }
      }
      ASSERT_EQ(seen, candidates);
    }
  }
}

TEST(DerivativeProperty, MatchesOracle) {
  std::mt19937 rng(22);
  for (int round = 0; round < 80; ++round) {
    const auto lexicon = testing::random_lexicon(rng);
    const auto wordlist = testing::random_wordlist(rng, lexicon);
    const auto oracle = testing::oracle_merge_derivatives(lexicon.all_senses(), lexicon.inventories().suffixes, wordlist);
    const auto got = merge_derivatives(lexicon, wordlist);
    testing::DerivativeTable table;
    for (const auto& [key, list] : got) {
      for (const auto& d : list) table[key][{d.candidate.surface, d.candidate.suffix}] = std::string(to_string(d.verdict));
    }
    ASSERT_EQ(table, oracle) << "round " << round;
  }
}

}  // namespace
}  // namespace lexmerge
