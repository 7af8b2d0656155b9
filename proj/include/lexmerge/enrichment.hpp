#pragma once

// Sense selection for the words of an utterance, and enrichment restricted
// to the selected sense. When the rules cannot single out one sense the
// word gets no enrichment at all.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexmerge/diagnostics.hpp"
#include "lexmerge/ingest.hpp"
#include "lexmerge/lexicon.hpp"
#include "lexmerge/merged.hpp"
#include "lexmerge/rules.hpp"

namespace lexmerge {

/// A pre-parsed utterance.
///
/// Text form, one utterance per block of lines, blocks separated by a
/// blank line:
///   T <TAB> lemma lemma ...
///   D <TAB> REL(head,dependent)
///   F <TAB> lemma <TAB> frame
struct Utterance {
  std::vector<std::string> tokens;
  std::vector<DependencyTriple> deps;
  std::map<std::string, std::set<std::string>> frames;

  bool has_token(const std::string& lemma) const;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

std::vector<Utterance> parse_utterances(std::istream& in, const std::string& source = "<utterances>",
                                        std::vector<Diagnostic>* warnings = nullptr);
std::vector<Utterance> parse_utterances(std::string_view content, const std::string& source = "<utterances>",
                                        std::vector<Diagnostic>* warnings = nullptr);

/// True if `rule` applies to `lemma` in `utterance`. Class slots are
/// satisfied by any sense of the utterance argument carrying that class.
bool rule_matches(const DisambiguationRule& rule, const Utterance& utterance, const ReferenceLexicon& lexicon);

/// Sense of `lemma` selected by the most specific matching tier of rules
/// (lexical, then generalized, then syntactic); nullopt when no rule
/// matches or the winning tier disagrees. Throws std::invalid_argument if
/// `lemma` is not a token of the utterance.
std::optional<SenseKey> disambiguate(std::span<const DisambiguationRule> rules, const Utterance& utterance,
                                     const std::string& lemma, const ReferenceLexicon& lexicon);

/// Where an enrichment item comes from: the sense whose decision admitted
/// it, the resource, and the decision.
struct Provenance {
  SenseKey sense;
  std::string source;
  std::string decision;

  friend auto operator<=>(const Provenance&, const Provenance&) = default;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct EnrichmentItem {
  std::string value;
  std::vector<Provenance> provenance;

  friend bool operator==(const EnrichmentItem&, const EnrichmentItem&) = default;
};

struct EnrichmentSet {
  std::string lemma;
  /// nullopt: unresolved, and every list is empty.
  std::optional<SenseKey> sense;
  std::vector<EnrichmentItem> synonyms;
  std::vector<EnrichmentItem> derivatives;
  std::vector<EnrichmentItem> taxonomy_words;

  friend bool operator==(const EnrichmentSet&, const EnrichmentSet&) = default;
};

struct EnrichmentOptions {
  bool include_multiword = true;
  std::set<TaxonomyRelation> taxonomy_relations{TaxonomyRelation::hypernym, TaxonomyRelation::hyponym};
  int depth = 1;
};

/// Enrichments attached to exactly `sense`. Throws UnknownSenseError if the
/// sense is not in `merged`.
EnrichmentSet enrich(const MergedLexicon& merged, const SenseKey& sense, const EnrichmentOptions& options = {});

/// One set per distinct token known to the reference lexicon, in order of
/// first appearance.
std::vector<EnrichmentSet> enrich_utterance(const MergedLexicon& merged, const Utterance& utterance,
                                            const EnrichmentOptions& options = {});

/// `index <TAB> lemma <TAB> pos:sense|unresolved <TAB> synonyms <TAB>
/// derivatives <TAB> taxonomy`, items as `value[source/decision,...]`
/// joined by ';', `-` for an empty list.
std::string format_enrichment(std::size_t utterance_index, const EnrichmentSet& set);

}  // namespace lexmerge
