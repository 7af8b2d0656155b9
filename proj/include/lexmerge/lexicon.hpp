#pragma once

// Domain types of the reference lexicon: one SenseEntry per numbered sense
// of a lemma, plus the code inventories declared by the lexicon file.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexmerge/diagnostics.hpp"

namespace lexmerge {

/// Identity of one sense: homographs of different parts of speech keep
/// separate numbering.
struct SenseKey {
  std::string lemma;
  std::string pos;
  int sense_id = 0;

  friend auto operator<=>(const SenseKey&, const SenseKey&) = default;
  friend bool operator==(const SenseKey&, const SenseKey&) = default;
};

/// `lemma/pos/sense_id`, for messages.
std::string to_string(const SenseKey& key);

struct SemanticFeatures {
  std::string domain_code;
  std::string class_code;

  friend auto operator<=>(const SemanticFeatures&, const SemanticFeatures&) = default;
  friend bool operator==(const SemanticFeatures&, const SemanticFeatures&) = default;
};

/// "derivatives in `suffix` belong to sense `target_sense`"
struct SuffixInstruction {
  std::string suffix;
  int target_sense = 0;

  friend auto operator<=>(const SuffixInstruction&, const SuffixInstruction&) = default;
  friend bool operator==(const SuffixInstruction&, const SuffixInstruction&) = default;
};

struct DependencyTriple {
  std::string relation;
  std::string head;
  std::string dependent;

  friend auto operator<=>(const DependencyTriple&, const DependencyTriple&) = default;
  friend bool operator==(const DependencyTriple&, const DependencyTriple&) = default;
};

/// `REL(head,dependent)`
std::string to_string(const DependencyTriple& dep);

/// Parses `REL(head,dependent)`; nullopt on malformed text.
std::optional<DependencyTriple> parse_dependency(std::string_view text);

struct SenseEntry {
  std::string lemma;
  std::string pos;
  int sense_id = 0;
  std::string sense_label;
  SemanticFeatures features;
  std::vector<SuffixInstruction> suffix_instructions;
  std::vector<DependencyTriple> example_deps;
  std::vector<std::string> subcat_frames;
  std::vector<std::string> base_synonyms;

  SenseKey key() const { return {lemma, pos, sense_id}; }

  friend bool operator==(const SenseEntry&, const SenseEntry&) = default;
};

struct Inventories {
  std::set<std::string> domains;
  std::set<std::string> classes;
  std::set<std::string> relations;
  std::set<std::string> suffixes;

  friend bool operator==(const Inventories&, const Inventories&) = default;
};

/// Immutable, validated reference lexicon.
class ReferenceLexicon {
 public:
  ReferenceLexicon() = default;

  /// Groups `senses` by lemma, keeping their relative order. Throws
  /// ValidationError if an invariant of the model is violated (duplicate
  /// sense key, undeclared code, dangling suffix instruction, self synonym).
  ReferenceLexicon(Inventories inventories, std::vector<SenseEntry> senses);

  const Inventories& inventories() const { return inventories_; }

  /// All senses of `lemma` across parts of speech, in file order.
  std::span<const SenseEntry> lookup(const std::string& lemma) const;

  /// Senses of `lemma` with part of speech `pos`, in file order.
  std::vector<SenseEntry> senses_of(const std::string& lemma, const std::string& pos) const;

  const SenseEntry* find(const SenseKey& key) const;
  const SenseEntry& at(const SenseKey& key) const;

  /// Resolves (lemma, sense_id) when exactly one part of speech carries that
  /// sense number. Throws UnknownSenseError when none or several do.
  SenseKey resolve(const std::string& lemma, int sense_id) const;

  bool contains(const std::string& lemma) const { return by_lemma_.count(lemma) != 0; }

  /// Lemmas in first-appearance order.
  const std::vector<std::string>& lemmas() const { return lemma_order_; }

  /// Every sense, lemma by lemma in first-appearance order.
  std::vector<SenseEntry> all_senses() const;

  std::size_t sense_count() const;
  bool empty() const { return by_lemma_.empty(); }

  friend bool operator==(const ReferenceLexicon&, const ReferenceLexicon&) = default;

 private:
  Inventories inventories_;
  std::vector<std::string> lemma_order_;
  std::map<std::string, std::vector<SenseEntry>> by_lemma_;
};

/// Checks the model invariants of `senses` against `inventories`. Each
/// problem is reported against the index of the offending sense (1-based)
/// unless `line_of` maps it to a file line.
void validate_senses(const Inventories& inventories, const std::vector<SenseEntry>& senses,
                     Diagnostics& diagnostics, const std::vector<std::size_t>& line_of = {});

std::span<const SenseEntry> lookup(const ReferenceLexicon& lexicon, const std::string& lemma);

/// Throws UnknownSenseError if the sense does not exist.
SemanticFeatures features_of(const ReferenceLexicon& lexicon, const std::string& lemma, int sense_id);
SemanticFeatures features_of(const ReferenceLexicon& lexicon, const SenseKey& key);

}  // namespace lexmerge
