#include "support/generators.hpp"

#include <algorithm>

namespace lexmerge::testing {

namespace {
const std::vector<std::string> kSuffixes = {"ure", "eur", "ant", "age", "able", "me", "e"};
const std::vector<std::string> kRelations = {"VARG[DIR]", "VARG[INDIR]", "SUBJ"};
const std::vector<std::string> kFrames = {"transitive", "intransitive", "reflexive", "ditransitive"};
}  // namespace

std::string random_word(std::mt19937& rng, int min_len, int max_len) {
  static const std::string letters = "abcdeilmnoprstuv";
  const int n = uniform(rng, min_len, max_len);
  std::string w;
  for (int i = 0; i < n; ++i) w += letters[static_cast<std::size_t>(uniform(rng, 0, int(letters.size()) - 1))];
  return w;
}

ReferenceLexicon random_lexicon(std::mt19937& rng, const LexiconShape& shape) {
  Inventories inv;
  const int n_domains = uniform(rng, 1, shape.max_codes);
  const int n_classes = uniform(rng, 1, shape.max_codes);
  std::vector<std::string> domains;
  std::vector<std::string> classes;
  for (int i = 0; i < n_domains; ++i) domains.push_back("D" + std::to_string(i));
  for (int i = 0; i < n_classes; ++i) classes.push_back("C" + std::to_string(i));
  inv.domains.insert(domains.begin(), domains.end());
  inv.classes.insert(classes.begin(), classes.end());
  inv.relations.insert(kRelations.begin(), kRelations.end());
  inv.suffixes.insert(kSuffixes.begin(), kSuffixes.end());

  std::set<std::string> lemma_set;
  const int n_lemmas = uniform(rng, 1, shape.max_lemmas);
  while (static_cast<int>(lemma_set.size()) < n_lemmas) lemma_set.insert(random_word(rng, 2, 7));
  std::vector<std::string> lemmas(lemma_set.begin(), lemma_set.end());
  std::shuffle(lemmas.begin(), lemmas.end(), rng);

  std::vector<SenseEntry> senses;
  for (const auto& lemma : lemmas) {
    std::vector<std::string> parts{"v"};
    if (chance(rng, shape.homograph_rate)) parts.push_back("n");
    for (const auto& pos : parts) {
      const int n = uniform(rng, 1, shape.max_senses);
      std::vector<int> ids;
      int next = 1;
      for (int i = 0; i < n; ++i) {
        next += chance(rng, 0.2) ? 2 : 1;
        ids.push_back(next - 1);
      }
      for (int id : ids) {
        SenseEntry s;
        s.lemma = lemma;
        s.pos = pos;
        s.sense_id = id;
        s.sense_label = "l" + std::to_string(id);
        s.features = {pick(rng, domains), pick(rng, classes)};
        std::set<std::string> used_suffixes;
        for (int k = uniform(rng, 0, 3); k > 0; --k) {
          const auto& suffix = pick(rng, kSuffixes);
          if (used_suffixes.insert(suffix).second) s.suffix_instructions.push_back({suffix, pick(rng, ids)});
        }
        for (int k = uniform(rng, 0, 2); k > 0; --k) {
          const auto& frame = pick(rng, kFrames);
          if (std::find(s.subcat_frames.begin(), s.subcat_frames.end(), frame) == s.subcat_frames.end()) {
            s.subcat_frames.push_back(frame);
          }
        }
        for (int k = uniform(rng, 0, 2); k > 0; --k) {
          const std::string other = chance(rng, 0.7) ? pick(rng, lemmas) : random_word(rng, 3, 6);
          DependencyTriple dep{pick(rng, kRelations), lemma, other};
          if (chance(rng, 0.4)) std::swap(dep.head, dep.dependent);
          if (std::find(s.example_deps.begin(), s.example_deps.end(), dep) == s.example_deps.end()) {
            s.example_deps.push_back(dep);
          }
        }
        for (int k = uniform(rng, 0, 2); k > 0; --k) {
          const std::string syn = chance(rng, 0.5) ? pick(rng, lemmas) : random_word(rng, 3, 6);
          if (syn != lemma &&
              std::find(s.base_synonyms.begin(), s.base_synonyms.end(), syn) == s.base_synonyms.end()) {
            s.base_synonyms.push_back(syn);
          }
        }
        senses.push_back(std::move(s));
      }
    }
  }
  return ReferenceLexicon(std::move(inv), std::move(senses));
}

SynonymResource random_resource(std::mt19937& rng, const ReferenceLexicon& lexicon, const std::string& name) {
  SynonymResource resource{name, {}};
  const auto& lemmas = lexicon.lemmas();
  std::vector<std::string> targets;
  for (const auto& l : lemmas) {
    if (chance(rng, 0.6)) targets.push_back(l);
  }
  for (int k = uniform(rng, 0, 2); k > 0; --k) targets.push_back("zz" + random_word(rng, 2, 4));
  for (const auto& target : targets) {
    auto& proposals = resource.proposals[target];
    for (int k = uniform(rng, 1, 6); k > 0; --k) {
      std::string p;
      const int roll = uniform(rng, 0, 9);
      if (roll < 6) p = pick(rng, lemmas);
      else if (roll < 8) p = random_word(rng, 3, 7);
      else p = random_word(rng, 2, 5) + " " + random_word(rng, 2, 5);
      if (p != target) proposals.insert(p);
    }
  }
  return resource;
}

std::set<std::string> random_wordlist(std::mt19937& rng, const ReferenceLexicon& lexicon) {
  std::set<std::string> words;
  for (const auto& lemma : lexicon.lemmas()) {
    for (int k = uniform(rng, 0, 4); k > 0; --k) {
      const std::size_t strip = static_cast<std::size_t>(uniform(rng, 0, 3));
      const std::string stem = lemma.substr(0, lemma.size() > strip ? lemma.size() - strip : 0);
      words.insert(stem + pick(rng, kSuffixes));
    }
  }
  for (int k = uniform(rng, 0, 10); k > 0; --k) words.insert(random_word(rng, 2, 9));
  words.erase("");
  return words;
}

SynsetGraph random_graph(std::mt19937& rng, const ReferenceLexicon& lexicon) {
  const auto& lemmas = lexicon.lemmas();
  std::vector<Synset> synsets;
  const int n = uniform(rng, 0, 2 * static_cast<int>(lemmas.size()) + 2);
  for (int i = 0; i < n; ++i) {
    Synset s{"s" + std::to_string(i), {}};
    for (int k = uniform(rng, 1, 5); k > 0; --k) {
      s.members.insert(chance(rng, 0.8) ? pick(rng, lemmas) : random_word(rng, 3, 6));
    }
    synsets.push_back(std::move(s));
  }
  // Hypernym edges only point to lower indices: acyclic by construction.
  std::vector<SynsetEdge> edges;
  for (int i = 1; i < n; ++i) {
    if (chance(rng, 0.5)) edges.push_back({synsets[i].id, TaxonomyRelation::hypernym, synsets[uniform(rng, 0, i - 1)].id});
    if (chance(rng, 0.15)) edges.push_back({synsets[i].id, TaxonomyRelation::meronym, synsets[uniform(rng, 0, n - 1)].id});
  }
  return SynsetGraph(std::move(synsets), std::move(edges));
}

}  // namespace lexmerge::testing
