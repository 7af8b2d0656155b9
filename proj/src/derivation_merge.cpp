#include "lexmerge/derivation_merge.hpp"

#include <algorithm>

#include "lexmerge/text.hpp"

namespace lexmerge {

std::string_view to_string(DerivativeVerdict verdict) {
  switch (verdict) {
    case DerivativeVerdict::kept: return "kept";
    case DerivativeVerdict::rejected_no_instruction: return "rejected-no-instruction";
    case DerivativeVerdict::rejected_other_sense: return "rejected-other-sense";
    case DerivativeVerdict::rejected_short_radical: return "rejected-short-radical";
  }
  return "?";
}

std::optional<DerivativeVerdict> parse_derivative_verdict(std::string_view text) {
  for (auto v : {DerivativeVerdict::kept, DerivativeVerdict::rejected_no_instruction,
                 DerivativeVerdict::rejected_other_sense, DerivativeVerdict::rejected_short_radical}) {
    if (text == to_string(v)) return v;
  }
  return std::nullopt;
}

std::set<DerivativeCandidate> generate_candidates(const std::string& lemma, const std::set<std::string>& wordlist,
                                                  const std::set<std::string>& suffixes, std::size_t max_stem_strip) {
  std::set<std::string> stems;
  for (std::size_t k = 0; k <= max_stem_strip; ++k) {
    std::string stem = text::drop_last_codepoints(lemma, k);
    if (stem.empty()) break;
    stems.insert(std::move(stem));
  }

  std::set<DerivativeCandidate> out;
  for (const auto& word : wordlist) {
    for (const auto& suffix : suffixes) {
      if (suffix.empty() || word.size() <= suffix.size() || !word.ends_with(suffix)) continue;
      std::string radical = word.substr(0, word.size() - suffix.size());
      if (stems.count(radical)) out.insert({word, std::move(radical), suffix});
    }
  }
  return out;
}

DerivativeDecision filter_derivative(std::span<const SenseEntry> entry_senses, const DerivativeCandidate& candidate,
                                     int target_sense, std::size_t radical_min) {
  const auto target = std::find_if(entry_senses.begin(), entry_senses.end(),
                                   [&](const SenseEntry& s) { return s.sense_id == target_sense; });
  if (target == entry_senses.end()) {
    throw UnknownSenseError("unknown target sense " + std::to_string(target_sense) + " for derivative '" +
                            candidate.surface + "'");
  }
  DerivativeDecision decision{target->key(), candidate, DerivativeVerdict::rejected_no_instruction, std::nullopt};

  if (text::grapheme_count(candidate.radical) < radical_min) {
    decision.verdict = DerivativeVerdict::rejected_short_radical;
    return decision;
  }

  // An instruction may be listed under any sense of the entry but names the
  // sense whose derivative it forms.
  bool for_target = false;
  bool for_other = false;
  for (const auto& sense : entry_senses) {
    for (const auto& ins : sense.suffix_instructions) {
      if (ins.suffix != candidate.suffix) continue;
      (ins.target_sense == target_sense ? for_target : for_other) = true;
    }
  }
  if (for_target) {
    decision.verdict = DerivativeVerdict::kept;
    decision.assigned_sense = target_sense;
  } else if (for_other) {
    decision.verdict = DerivativeVerdict::rejected_other_sense;
  }
  return decision;
}

DerivativeDecisions merge_derivatives(const ReferenceLexicon& lexicon, const std::set<std::string>& wordlist,
                                      const DerivationOptions& options) {
  DerivativeDecisions out;
  if (wordlist.empty()) return out;
  for (const auto& lemma : lexicon.lemmas()) {
    const auto candidates =
        generate_candidates(lemma, wordlist, lexicon.inventories().suffixes, options.max_stem_strip);
    if (candidates.empty()) continue;

    std::set<std::string> parts_of_speech;
    for (const auto& s : lexicon.lookup(lemma)) parts_of_speech.insert(s.pos);
    for (const auto& pos : parts_of_speech) {
      const auto siblings = lexicon.senses_of(lemma, pos);
      for (const auto& sense : siblings) {
        auto& bucket = out[sense.key()];
        for (const auto& candidate : candidates) {
          bucket.push_back(filter_derivative(siblings, candidate, sense.sense_id, options.radical_min));
        }
      }
    }
  }
  return out;
}

}  // namespace lexmerge
