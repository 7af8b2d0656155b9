#pragma once

// The merged lexicon: every sense of the reference lexicon with the
// synonyms, derivatives, synset and rules attached to it, plus the file
// format that persists it.
//
// The merged file is a sequence of sections, each introduced by a marker
// line and holding TAB separated records:
//
//   @reference    the reference lexicon, in .lex syntax
//   @synsets      the synset graph, in .wn syntax
//   @synonyms     lemma pos sense_id proposal verdict matched_senses sources
//   @derivatives  lemma pos sense_id surface suffix verdict
//   @alignments   lemma pos sense_id status synset_id|- overlap/synonym_count
//   @rules        lemma pos kind pattern sense_id derived_from|-
//   @skipped      resource lemma
//   @diagnostics  severity source line message
//
// Records are sorted by lemma, then part of speech and sense_id, then
// payload, so the bytes depend only on the inputs.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexmerge/derivation_merge.hpp"
#include "lexmerge/diagnostics.hpp"
#include "lexmerge/ingest.hpp"
#include "lexmerge/lexicon.hpp"
#include "lexmerge/rules.hpp"
#include "lexmerge/synonym_merge.hpp"
#include "lexmerge/taxonomy.hpp"

namespace lexmerge {

struct MergedSenseRecord {
  SenseKey key;
  /// Every decision taken for this sense, rejected ones included.
  std::vector<SynonymDecision> synonyms;
  std::vector<DerivativeDecision> derivatives;
  AlignmentResult alignment;
  std::vector<DisambiguationRule> rules;

  friend bool operator==(const MergedSenseRecord&, const MergedSenseRecord&) = default;
};

struct MergedLexicon {
  ReferenceLexicon reference;
  SynsetGraph graph;
  std::map<SenseKey, MergedSenseRecord> records;
  std::vector<SkippedLemma> skipped;
  std::vector<Diagnostic> diagnostics;

  const MergedSenseRecord& at(const SenseKey& key) const;
  std::vector<DisambiguationRule> rules() const;

  friend bool operator==(const MergedLexicon&, const MergedLexicon&) = default;
};

struct MergeInputs {
  ReferenceLexicon reference;
  std::vector<SynonymResource> synonym_resources;
  /// Absent: every alignment is no-synset.
  std::optional<SynsetGraph> synsets;
  /// Resource name given to the synonyms implied by the synset file.
  std::string synset_source = "synsets";
  /// Resource whose accepted synonyms drive alignment. Defaults to
  /// `synset_source`, in which case the synset file is also merged as a
  /// synonym resource.
  std::optional<std::string> alignment_source;
  /// Absent: no derivative is generated.
  std::optional<std::set<std::string>> wordlist;
  DerivationOptions derivation;
  /// Diagnostics collected while reading the inputs; carried into the output.
  std::vector<Diagnostic> input_diagnostics;
};

/// Runs the synonym, derivative, taxonomy and rule passes.
MergedLexicon build_merged(const MergeInputs& inputs);

std::string serialize_merged(const MergedLexicon& merged);
/// Throws ValidationError on malformed content.
MergedLexicon parse_merged(std::string_view content, const std::string& source = "<merged>");
MergedLexicon parse_merged(std::istream& in, const std::string& source = "<merged>");

// Decision logs: the bodies of the corresponding sections.
std::string synonym_log(const MergedLexicon& merged);
std::string derivative_log(const MergedLexicon& merged);
std::string alignment_log(const MergedLexicon& merged);
std::string rule_file(const MergedLexicon& merged);

struct MergeReport {
  std::size_t synonyms_seen = 0;
  std::map<std::string, std::size_t> synonym_verdicts;
  std::size_t derivatives_seen = 0;
  std::map<std::string, std::size_t> derivative_verdicts;
  /// rejected-no-instruction decisions per part of speech.
  std::map<std::string, std::size_t> no_instruction_by_pos;
  std::map<std::string, std::size_t> rules_by_kind;
  std::map<std::string, std::size_t> alignment_statuses;
  std::size_t senses = 0;
  std::vector<SkippedLemma> skipped;
  std::vector<Diagnostic> diagnostics;

  /// Share of derivative decisions that are rejections.
  double derivative_rejection_rate() const;

  friend bool operator==(const MergeReport&, const MergeReport&) = default;
};

MergeReport compute_report(const MergedLexicon& merged);

/// Human-readable, deterministic summary.
std::string format_report(const MergeReport& report);

}  // namespace lexmerge
