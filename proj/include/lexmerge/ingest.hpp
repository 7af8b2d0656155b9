#pragma once

// Readers and writers for the line-oriented resource formats.
//
// Reference lexicon (.lex)
//   #!domain SOC PSY ...
//   #!class S4 P2 ...
//   #!relation VARG[DIR] ...
//   #!suffix ure eur ant age able ...
//   lemma  pos  sense_id  label  domain  class  suffixes  subcat  examples  base_synonyms
//     suffixes  ure:1,age:5 | -
//     subcat    transitive|reflexive | -
//     examples  VARG[DIR](remporter,victoire);... | -
//     synonyms  comma separated | -
//
// Synonym resource (.syn)
//   lemma <TAB> proposal, proposal, ...
//
// Synset resource (.wn)
//   S <TAB> id <TAB> member, member, ...
//   E <TAB> from_id <TAB> hypernym|hyponym|meronym|holonym <TAB> to_id
//
// Wordlist: one word per line.
//
// All formats are UTF-8 with '\n' line endings; fields are TAB separated and
// lines starting with '#' (but not "#!") are comments. Every reader collects
// all diagnostics of a file, then throws ValidationError if any is an error.
// Warnings are appended to the optional `warnings` sink.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexmerge/diagnostics.hpp"
#include "lexmerge/lexicon.hpp"

namespace lexmerge {

/// Synonym proposals of one auxiliary resource, per lemma.
struct SynonymResource {
  std::string name;
  std::map<std::string, std::set<std::string>> proposals;

  friend bool operator==(const SynonymResource&, const SynonymResource&) = default;
};

enum class TaxonomyRelation { hypernym, hyponym, meronym, holonym };

std::string_view to_string(TaxonomyRelation relation);
std::optional<TaxonomyRelation> parse_taxonomy_relation(std::string_view text);
TaxonomyRelation inverse(TaxonomyRelation relation);

struct Synset {
  std::string id;
  std::set<std::string> members;

  friend bool operator==(const Synset&, const Synset&) = default;
};

/// `to` is the `relation` of `from`: (B, hypernym, A) reads "A is a
/// hypernym of B".
struct SynsetEdge {
  std::string from;
  TaxonomyRelation relation = TaxonomyRelation::hypernym;
  std::string to;

  friend auto operator<=>(const SynsetEdge&, const SynsetEdge&) = default;
  friend bool operator==(const SynsetEdge&, const SynsetEdge&) = default;
};

/// Synsets plus taxonomy edges. Every edge is stored together with its
/// inverse (hypernym/hyponym, meronym/holonym).
class SynsetGraph {
 public:
  SynsetGraph() = default;

  /// Throws ValidationError on duplicate ids, empty synsets, dangling edge
  /// endpoints or hypernym cycles.
  SynsetGraph(std::vector<Synset> synsets, std::vector<SynsetEdge> edges);

  const std::map<std::string, Synset>& synsets() const { return synsets_; }
  const std::set<SynsetEdge>& edges() const { return edges_; }
  const Synset* find(const std::string& id) const;

  /// Ids of the synsets having `lemma` as a member, sorted.
  std::vector<std::string> synsets_containing(const std::string& lemma) const;

  /// Ids directly reachable from `id` through one `relation` edge, sorted.
  std::vector<std::string> neighbors(const std::string& id, TaxonomyRelation relation) const;

  bool empty() const { return synsets_.empty(); }

  friend bool operator==(const SynsetGraph& a, const SynsetGraph& b) {
    return a.synsets_ == b.synsets_ && a.edges_ == b.edges_;
  }

 private:
  std::map<std::string, Synset> synsets_;
  std::set<SynsetEdge> edges_;
  std::map<std::string, std::vector<std::string>> membership_;
};

/// Checks graph invariants; `edge_lines[i]` is the file line of `edges[i]`
/// and `synset_lines[i]` that of `synsets[i]` when available.
void validate_graph(const std::vector<Synset>& synsets, const std::vector<SynsetEdge>& edges,
                    Diagnostics& diagnostics, const std::vector<std::size_t>& synset_lines = {},
                    const std::vector<std::size_t>& edge_lines = {});

ReferenceLexicon parse_reference(std::istream& in, const std::string& source = "<reference>",
                                 std::vector<Diagnostic>* warnings = nullptr);
ReferenceLexicon parse_reference(std::string_view content, const std::string& source = "<reference>",
                                 std::vector<Diagnostic>* warnings = nullptr);

SynonymResource parse_synonym_resource(std::istream& in, const std::string& name,
                                       std::vector<Diagnostic>* warnings = nullptr);
SynonymResource parse_synonym_resource(std::string_view content, const std::string& name,
                                       std::vector<Diagnostic>* warnings = nullptr);

SynsetGraph parse_synset_resource(std::istream& in, const std::string& source = "<synsets>",
                                  std::vector<Diagnostic>* warnings = nullptr);
SynsetGraph parse_synset_resource(std::string_view content, const std::string& source = "<synsets>",
                                  std::vector<Diagnostic>* warnings = nullptr);

std::set<std::string> parse_wordlist(std::istream& in, const std::string& source = "<wordlist>",
                                     std::vector<Diagnostic>* warnings = nullptr);
std::set<std::string> parse_wordlist(std::string_view content, const std::string& source = "<wordlist>",
                                     std::vector<Diagnostic>* warnings = nullptr);

/// Canonical text of the lexicon; parse_reference() reads it back to an
/// equal lexicon.
std::string serialize_reference(const ReferenceLexicon& lexicon);
std::string serialize_synsets(const SynsetGraph& graph);
std::string serialize_synonym_resource(const SynonymResource& resource);

/// Synonym proposals implied by a synset file: each member of a synset
/// proposes every other member of the same synset.
SynonymResource synonyms_from_synsets(const SynsetGraph& graph, const std::string& name);

namespace detail {

/// Line reader shared by the parsers: yields (line number, content) with
/// the trailing '\r' removed, skipping comments and blank lines, and
/// reporting invalid UTF-8.
class LineReader {
 public:
  LineReader(std::istream& in, Diagnostics& diagnostics) : in_(in), diagnostics_(diagnostics) {}
  /// Returns false at end of input. Header lines ("#!") are returned as-is.
  bool next(std::size_t& line_no, std::string& line);

 private:
  std::istream& in_;
  Diagnostics& diagnostics_;
  std::size_t line_no_ = 0;
};

}  // namespace detail

}  // namespace lexmerge
