#pragma once

// Alignment of reference senses with synsets. A sense is linked to the
// synset containing a strict majority of its synset-derived synonyms; ties
// at the best overlap abstain.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexmerge/ingest.hpp"
#include "lexmerge/lexicon.hpp"
#include "lexmerge/synonym_merge.hpp"

namespace lexmerge {

enum class AlignmentStatus { matched, no_synset, no_majority, ambiguous };

std::string_view to_string(AlignmentStatus status);
std::optional<AlignmentStatus> parse_alignment_status(std::string_view text);

struct AlignmentResult {
  SenseKey key;
  /// Present iff status == matched.
  std::optional<std::string> synset;
  /// Best overlap seen among candidate synsets.
  int overlap = 0;
  int synonym_count = 0;
  AlignmentStatus status = AlignmentStatus::no_synset;

  friend bool operator==(const AlignmentResult&, const AlignmentResult&) = default;
};

using Alignments = std::map<SenseKey, AlignmentResult>;

/// Aligns one sense given the synonyms accepted for it from the
/// synset-bearing resource. `word` itself never counts toward the overlap.
AlignmentResult align_sense(const SenseKey& key, const std::set<std::string>& sense_synonyms,
                            const SynsetGraph& graph);
AlignmentResult align_sense(const std::string& word, int sense_id, const std::set<std::string>& sense_synonyms,
                            const SynsetGraph& graph);

/// Members of every synset reachable from `synset_id` in at most `depth`
/// steps along `relation`, minus the members of the start synset. Throws
/// std::out_of_range for an unknown id and std::invalid_argument for depth 0.
std::set<std::string> taxonomy_neighbors(const SynsetGraph& graph, const std::string& synset_id,
                                         TaxonomyRelation relation, int depth);

/// Synonyms accepted (feature-filtered, not multiword) for `key` whose
/// sources include `source`.
std::set<std::string> synonyms_from_source(const SynonymDecisions& decisions, const SenseKey& key,
                                           const std::string& source);

/// One result per sense of the lexicon. Two senses of the same lemma never
/// keep the same synset: the weaker claimant(s) are demoted to ambiguous.
Alignments align_lexicon(const ReferenceLexicon& lexicon, const SynonymDecisions& merged_synonyms,
                         const SynsetGraph& graph, const std::string& alignment_source);

}  // namespace lexmerge
