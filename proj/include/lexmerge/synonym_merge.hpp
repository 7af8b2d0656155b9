#pragma once

// Distributes synonym proposals of auxiliary resources onto the senses of
// the reference lexicon. A single-word proposal known to the lexicon is kept
// for a sense only if one of its own senses carries exactly the same
// (domain, class) features. Multiword proposals, and single words the
// lexicon does not know, cannot be filtered and are kept for every sense
// under a distinct verdict.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexmerge/ingest.hpp"
#include "lexmerge/lexicon.hpp"

namespace lexmerge {

enum class SynonymVerdict {
  accepted,
  accepted_multiword,
  rejected,
  /// Synonym listed by the reference entry itself; never filtered.
  base,
};

std::string_view to_string(SynonymVerdict verdict);
std::optional<SynonymVerdict> parse_synonym_verdict(std::string_view text);

/// Source name used for base synonyms of the reference lexicon.
inline constexpr std::string_view kReferenceSource = "reference";

struct SynonymDecision {
  SenseKey target;
  std::string proposal;
  SynonymVerdict verdict = SynonymVerdict::rejected;
  /// Senses of the proposal's own entry whose features equal the target's.
  std::vector<SenseKey> matching_proposal_senses;
  /// Resources that proposed this synonym for the target lemma.
  std::set<std::string> sources;

  bool admitted() const { return verdict != SynonymVerdict::rejected; }

  friend bool operator==(const SynonymDecision&, const SynonymDecision&) = default;
};

/// Decisions per target sense, one per distinct proposal, sorted by proposal.
using SynonymDecisions = std::map<SenseKey, std::vector<SynonymDecision>>;

struct SkippedLemma {
  std::string resource;
  std::string lemma;

  friend auto operator<=>(const SkippedLemma&, const SkippedLemma&) = default;
  friend bool operator==(const SkippedLemma&, const SkippedLemma&) = default;
};

struct SynonymMergeResult {
  SynonymDecisions decisions;
  /// Lemmas with proposals but no entry in the reference lexicon.
  std::vector<SkippedLemma> skipped;
};

/// Throws UnknownSenseError if `target` does not exist. `sources` is left
/// empty.
SynonymDecision filter_synonym(const ReferenceLexicon& lexicon, const SenseKey& target, const std::string& proposal);
SynonymDecision filter_synonym(const ReferenceLexicon& lexicon, const std::string& target_lemma, int target_sense,
                               const std::string& proposal);

/// Runs filter_synonym for every (sense, proposal) pair of every lemma that
/// has proposals in any resource. The result does not depend on the order
/// of `resources`.
SynonymMergeResult merge_synonyms(const ReferenceLexicon& lexicon, std::span<const SynonymResource> resources);

/// `pos:id,pos:id` or `-`.
std::string format_sense_list(const std::vector<SenseKey>& senses);

}  // namespace lexmerge
