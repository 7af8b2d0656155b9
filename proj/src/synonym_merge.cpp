#include "lexmerge/synonym_merge.hpp"

#include <algorithm>

#include "lexmerge/text.hpp"

namespace lexmerge {

std::string_view to_string(SynonymVerdict verdict) {
  switch (verdict) {
    case SynonymVerdict::accepted: return "accepted";
    case SynonymVerdict::accepted_multiword: return "accepted-multiword";
    case SynonymVerdict::rejected: return "rejected";
    case SynonymVerdict::base: return "base";
  }
  return "?";
}

std::optional<SynonymVerdict> parse_synonym_verdict(std::string_view text) {
  for (auto v : {SynonymVerdict::accepted, SynonymVerdict::accepted_multiword, SynonymVerdict::rejected,
                 SynonymVerdict::base}) {
    if (text == to_string(v)) return v;
  }
  return std::nullopt;
}

SynonymDecision filter_synonym(const ReferenceLexicon& lexicon, const SenseKey& target, const std::string& proposal) {
  const SemanticFeatures& wanted = lexicon.at(target).features;
  SynonymDecision decision{target, proposal, SynonymVerdict::rejected, {}, {}};

  const auto proposal_senses = lexicon.lookup(proposal);
  if (text::has_whitespace(proposal) || proposal_senses.empty()) {
    decision.verdict = SynonymVerdict::accepted_multiword;
    return decision;
  }
  for (const auto& s : proposal_senses) {
    if (s.features == wanted) decision.matching_proposal_senses.push_back(s.key());
  }
  std::sort(decision.matching_proposal_senses.begin(), decision.matching_proposal_senses.end());
  if (!decision.matching_proposal_senses.empty()) decision.verdict = SynonymVerdict::accepted;
  return decision;
}

SynonymDecision filter_synonym(const ReferenceLexicon& lexicon, const std::string& target_lemma, int target_sense,
                               const std::string& proposal) {
  return filter_synonym(lexicon, lexicon.resolve(target_lemma, target_sense), proposal);
}

SynonymMergeResult merge_synonyms(const ReferenceLexicon& lexicon, std::span<const SynonymResource> resources) {
  // lemma -> proposal -> resources proposing it
  std::map<std::string, std::map<std::string, std::set<std::string>>> pooled;
  std::set<SkippedLemma> skipped;
  for (const auto& resource : resources) {
    for (const auto& [lemma, proposals] : resource.proposals) {
      if (proposals.empty()) continue;
      if (!lexicon.contains(lemma)) {
        skipped.insert({resource.name, lemma});
        continue;
      }
      for (const auto& p : proposals) pooled[lemma][p].insert(resource.name);
    }
  }

  SynonymMergeResult result;
  for (const auto& [lemma, proposals] : pooled) {
    for (const auto& sense : lexicon.lookup(lemma)) {
      auto& bucket = result.decisions[sense.key()];
      for (const auto& [proposal, sources] : proposals) {
        SynonymDecision d = filter_synonym(lexicon, sense.key(), proposal);
        d.sources = sources;
        bucket.push_back(std::move(d));
      }
    }
  }
  result.skipped.assign(skipped.begin(), skipped.end());
  return result;
}

std::string format_sense_list(const std::vector<SenseKey>& senses) {
  if (senses.empty()) return "-";
  std::vector<std::string> items;
  for (const auto& s : senses) items.push_back(s.pos + ":" + std::to_string(s.sense_id));
  return text::join(items, ",");
}

}  // namespace lexmerge
