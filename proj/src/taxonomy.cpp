#include "lexmerge/taxonomy.hpp"

#include <algorithm>
#include <stdexcept>

namespace lexmerge {

std::string_view to_string(AlignmentStatus status) {
  switch (status) {
    case AlignmentStatus::matched: return "matched";
    case AlignmentStatus::no_synset: return "no-synset";
    case AlignmentStatus::no_majority: return "no-majority";
    case AlignmentStatus::ambiguous: return "ambiguous";
  }
  return "?";
}

std::optional<AlignmentStatus> parse_alignment_status(std::string_view text) {
  for (auto s : {AlignmentStatus::matched, AlignmentStatus::no_synset, AlignmentStatus::no_majority,
                 AlignmentStatus::ambiguous}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

AlignmentResult align_sense(const SenseKey& key, const std::set<std::string>& sense_synonyms,
                            const SynsetGraph& graph) {
  AlignmentResult result;
  result.key = key;
  result.synonym_count = static_cast<int>(sense_synonyms.size() - sense_synonyms.count(key.lemma));

  const auto candidates = graph.synsets_containing(key.lemma);
  if (candidates.empty()) {
    result.status = AlignmentStatus::no_synset;
    return result;
  }

  int best = 0;
  std::vector<std::string> best_ids;
  for (const auto& id : candidates) {
    const Synset& synset = *graph.find(id);
    int overlap = 0;
    for (const auto& syn : sense_synonyms) {
      if (syn != key.lemma && synset.members.count(syn)) ++overlap;
    }
    if (overlap > best) {
      best = overlap;
      best_ids = {id};
    } else if (overlap == best) {
      best_ids.push_back(id);
    }
  }
  result.overlap = best;

  if (result.synonym_count == 0 || 2 * best <= result.synonym_count) {
    result.status = AlignmentStatus::no_majority;
  } else if (best_ids.size() > 1) {
    result.status = AlignmentStatus::ambiguous;
  } else {
    result.status = AlignmentStatus::matched;
    result.synset = best_ids.front();
  }
  return result;
}

AlignmentResult align_sense(const std::string& word, int sense_id, const std::set<std::string>& sense_synonyms,
                            const SynsetGraph& graph) {
  return align_sense(SenseKey{word, {}, sense_id}, sense_synonyms, graph);
}

std::set<std::string> taxonomy_neighbors(const SynsetGraph& graph, const std::string& synset_id,
                                         TaxonomyRelation relation, int depth) {
  const Synset* start = graph.find(synset_id);
  if (!start) throw std::out_of_range("unknown synset id '" + synset_id + "'");
  if (depth <= 0) throw std::invalid_argument("taxonomy depth must be positive");

  std::set<std::string> visited{synset_id};
  std::vector<std::string> frontier{synset_id};
  std::set<std::string> words;
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<std::string> next;
    for (const auto& id : frontier) {
      for (const auto& n : graph.neighbors(id, relation)) {
        if (!visited.insert(n).second) continue;
        next.push_back(n);
        const auto& members = graph.find(n)->members;
        words.insert(members.begin(), members.end());
      }
    }
    frontier = std::move(next);
  }
  for (const auto& m : start->members) words.erase(m);
  return words;
}

std::set<std::string> synonyms_from_source(const SynonymDecisions& decisions, const SenseKey& key,
                                           const std::string& source) {
  std::set<std::string> out;
  const auto it = decisions.find(key);
  if (it == decisions.end()) return out;
  for (const auto& d : it->second) {
    if (d.verdict == SynonymVerdict::accepted && d.sources.count(source)) out.insert(d.proposal);
  }
  return out;
}

Alignments align_lexicon(const ReferenceLexicon& lexicon, const SynonymDecisions& merged_synonyms,
                         const SynsetGraph& graph, const std::string& alignment_source) {
  Alignments out;
  for (const auto& lemma : lexicon.lemmas()) {
    std::vector<SenseKey> keys;
    for (const auto& sense : lexicon.lookup(lemma)) {
      keys.push_back(sense.key());
      out[sense.key()] = align_sense(sense.key(), synonyms_from_source(merged_synonyms, sense.key(), alignment_source),
                                     graph);
    }

    // A synset encodes one meaning: at most one sense of a lemma keeps it.
    std::map<std::string, std::vector<SenseKey>> claims;
    for (const auto& k : keys) {
      const auto& r = out[k];
      if (r.status == AlignmentStatus::matched) claims[*r.synset].push_back(k);
    }
    for (const auto& [synset, claimants] : claims) {
      if (claimants.size() < 2) continue;
      int best = 0;
      for (const auto& k : claimants) best = std::max(best, out[k].overlap);
      const auto winners = std::count_if(claimants.begin(), claimants.end(),
                                         [&](const SenseKey& k) { return out[k].overlap == best; });
      for (const auto& k : claimants) {
        auto& r = out[k];
        if (winners == 1 && r.overlap == best) continue;
        r.status = AlignmentStatus::ambiguous;
        r.synset.reset();
      }
    }
  }
  return out;
}

}  // namespace lexmerge
