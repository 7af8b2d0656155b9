#pragma once

// Random inputs for the property and oracle suites. Everything is driven by
// an explicit std::mt19937 so failures reproduce from the printed seed.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "lexmerge/ingest.hpp"
#include "lexmerge/lexicon.hpp"

namespace lexmerge::testing {

struct LexiconShape {
  int max_lemmas = 20;
  int max_senses = 4;
  /// Upper bound on the size of the domain and of the class inventory.
  int max_codes = 6;
  /// Probability that a lemma also gets a second part of speech.
  double homograph_rate = 0.15;
};

ReferenceLexicon random_lexicon(std::mt19937& rng, const LexiconShape& shape = {});

/// Proposals drawn from the lexicon's lemmas, unknown words and multiword
/// expressions, for a random subset of lemmas (plus a few unknown ones).
SynonymResource random_resource(std::mt19937& rng, const ReferenceLexicon& lexicon, const std::string& name);

/// Derivative-shaped words (stem + suffix) of lexicon lemmas plus noise.
std::set<std::string> random_wordlist(std::mt19937& rng, const ReferenceLexicon& lexicon);

/// Synsets over the lexicon's lemmas and some outsiders, with an acyclic
/// hypernym forest and a few meronym edges.
SynsetGraph random_graph(std::mt19937& rng, const ReferenceLexicon& lexicon);

std::string random_word(std::mt19937& rng, int min_len, int max_len);

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

inline bool chance(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace lexmerge::testing
