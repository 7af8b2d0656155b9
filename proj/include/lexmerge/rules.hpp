#pragma once

// Disambiguation rules derived from the reference entries:
//   lexical      a dependency of a dictionary example, verbatim
//   generalized  the same dependency with the other argument replaced by
//                one of its semantic classes
//   syntactic    a subcategorization frame that only one sense carries

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexmerge/diagnostics.hpp"
#include "lexmerge/lexicon.hpp"

namespace lexmerge {

enum class RuleKind { lexical, generalized, syntactic };

std::string_view to_string(RuleKind kind);
std::optional<RuleKind> parse_rule_kind(std::string_view text);

/// A lemma, or a class slot (`class:S4`) in generalized rules.
struct RuleArgument {
  std::string value;
  bool is_class = false;

  std::string str() const { return is_class ? "class:" + value : value; }

  friend auto operator<=>(const RuleArgument&, const RuleArgument&) = default;
  friend bool operator==(const RuleArgument&, const RuleArgument&) = default;
};

struct DisambiguationRule {
  /// Lemma the rule disambiguates and the sense it assigns.
  SenseKey target;
  RuleKind kind = RuleKind::lexical;
  std::string relation;
  RuleArgument head;
  RuleArgument dependent;
  /// Syntactic rules only.
  std::string frame;
  /// Generalized rules only: pattern of the lexical rule they come from.
  std::string derived_from;

  /// `REL(head,dep)`, `REL(head,class:C)` or `subcat:frame`.
  std::string pattern() const;

  friend auto operator<=>(const DisambiguationRule&, const DisambiguationRule&) = default;
  friend bool operator==(const DisambiguationRule&, const DisambiguationRule&) = default;
};

/// Rebuilds a rule from its rendered pattern; nullopt if malformed.
std::optional<DisambiguationRule> make_rule(const SenseKey& target, RuleKind kind, std::string_view pattern,
                                            std::string derived_from = {});

/// One rule per example dependency mentioning the entry's lemma exactly once.
/// Other dependencies are skipped with a warning in `diagnostics`.
std::vector<DisambiguationRule> extract_lexical_rules(const SenseEntry& entry, Diagnostics* diagnostics = nullptr);

/// For each lexical rule whose other argument is in the lexicon: one
/// generalized rule per distinct class among that argument's senses.
std::vector<DisambiguationRule> generalize_rules(std::span<const DisambiguationRule> rules,
                                                 const ReferenceLexicon& lexicon);

/// One rule per frame of `entry` that no other sense in `siblings` carries.
std::vector<DisambiguationRule> extract_syntactic_rules(const SenseEntry& entry,
                                                        std::span<const SenseEntry> siblings);

/// All rules of the lexicon, sorted. Lexical patterns that map one lemma to
/// different senses are dropped (with a warning) before generalization.
std::vector<DisambiguationRule> extract_rules(const ReferenceLexicon& lexicon, Diagnostics* diagnostics = nullptr);

}  // namespace lexmerge
