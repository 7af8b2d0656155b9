#include "lexmerge/rules.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lexmerge/text.hpp"

namespace lexmerge {

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::lexical: return "lexical";
    case RuleKind::generalized: return "generalized";
    case RuleKind::syntactic: return "syntactic";
  }
  return "?";
}

std::optional<RuleKind> parse_rule_kind(std::string_view text) {
  for (auto k : {RuleKind::lexical, RuleKind::generalized, RuleKind::syntactic}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

std::string DisambiguationRule::pattern() const {
  if (kind == RuleKind::syntactic) return "subcat:" + frame;
  return relation + "(" + head.str() + "," + dependent.str() + ")";
}

namespace {
RuleArgument argument(std::string_view text) {
  if (text.starts_with("class:")) return {std::string(text.substr(6)), true};
  return {std::string(text), false};
}
}  // namespace

std::optional<DisambiguationRule> make_rule(const SenseKey& target, RuleKind kind, std::string_view pattern,
                                            std::string derived_from) {
  DisambiguationRule rule;
  rule.target = target;
  rule.kind = kind;
  if (kind == RuleKind::syntactic) {
    if (!pattern.starts_with("subcat:") || pattern.size() == 7) return std::nullopt;
    rule.frame = std::string(pattern.substr(7));
    return rule;
  }
  const auto dep = parse_dependency(pattern);
  if (!dep) return std::nullopt;
  rule.relation = dep->relation;
  rule.head = argument(dep->head);
  rule.dependent = argument(dep->dependent);
  if (rule.head.value.empty() || rule.dependent.value.empty()) return std::nullopt;

  const bool head_is_target = !rule.head.is_class && rule.head.value == target.lemma;
  const bool dep_is_target = !rule.dependent.is_class && rule.dependent.value == target.lemma;
  if (head_is_target == dep_is_target) return std::nullopt;
  const int slots = int(rule.head.is_class) + int(rule.dependent.is_class);
  if (kind == RuleKind::lexical && slots != 0) return std::nullopt;
  if (kind == RuleKind::generalized) {
    if (slots != 1) return std::nullopt;
    rule.derived_from = std::move(derived_from);
  }
  return rule;
}

std::vector<DisambiguationRule> extract_lexical_rules(const SenseEntry& entry, Diagnostics* diagnostics) {
  std::vector<DisambiguationRule> out;
  for (const auto& dep : entry.example_deps) {
    const bool head = dep.head == entry.lemma;
    const bool dependent = dep.dependent == entry.lemma;
    if (head == dependent) {
      if (diagnostics) {
        diagnostics->warning(0, "example " + to_string(dep) + " of " + to_string(entry.key()) +
                                    (head ? " mentions the lemma twice" : " does not mention the lemma") +
                                    "; skipped");
      }
      continue;
    }
    DisambiguationRule rule;
    rule.target = entry.key();
    rule.kind = RuleKind::lexical;
    rule.relation = dep.relation;
    rule.head = {dep.head, false};
    rule.dependent = {dep.dependent, false};
    out.push_back(std::move(rule));
  }
  return out;
}

std::vector<DisambiguationRule> generalize_rules(std::span<const DisambiguationRule> rules,
                                                 const ReferenceLexicon& lexicon) {
  std::vector<DisambiguationRule> out;
  for (const auto& rule : rules) {
    if (rule.kind != RuleKind::lexical) continue;
    const bool target_is_head = rule.head.value == rule.target.lemma;
    const std::string& other = target_is_head ? rule.dependent.value : rule.head.value;

    std::set<std::string> classes;
    for (const auto& s : lexicon.lookup(other)) classes.insert(s.features.class_code);
    for (const auto& cls : classes) {
      DisambiguationRule g = rule;
      g.kind = RuleKind::generalized;
      (target_is_head ? g.dependent : g.head) = RuleArgument{cls, true};
      g.derived_from = rule.pattern();
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<DisambiguationRule> extract_syntactic_rules(const SenseEntry& entry,
                                                        std::span<const SenseEntry> siblings) {
  std::vector<DisambiguationRule> out;
  for (const auto& frame : entry.subcat_frames) {
    const bool shared = std::any_of(siblings.begin(), siblings.end(), [&](const SenseEntry& s) {
      return s.key() != entry.key() &&
             std::find(s.subcat_frames.begin(), s.subcat_frames.end(), frame) != s.subcat_frames.end();
    });
    if (shared) continue;
    DisambiguationRule rule;
    rule.target = entry.key();
    rule.kind = RuleKind::syntactic;
    rule.frame = frame;
    out.push_back(std::move(rule));
  }
  return out;
}

std::vector<DisambiguationRule> extract_rules(const ReferenceLexicon& lexicon, Diagnostics* diagnostics) {
  std::vector<DisambiguationRule> lexical;
  std::vector<DisambiguationRule> out;
  for (const auto& lemma : lexicon.lemmas()) {
    const auto senses = lexicon.lookup(lemma);

    std::vector<DisambiguationRule> mine;
    for (const auto& s : senses) {
      auto rules = extract_lexical_rules(s, diagnostics);
      mine.insert(mine.end(), rules.begin(), rules.end());
    }
    std::map<std::string, std::set<SenseKey>> senses_by_pattern;
    for (const auto& r : mine) senses_by_pattern[r.pattern()].insert(r.target);
    for (auto& r : mine) {
      const auto& targets = senses_by_pattern[r.pattern()];
      if (targets.size() > 1) {
        if (diagnostics && r.target == *targets.begin()) {
          std::vector<std::string> names;
          for (const auto& t : targets) names.push_back(to_string(t));
          diagnostics->warning(0, "contradictory lexical rule " + lemma + ": " + r.pattern() + " maps to " +
                                      text::join(names, ", ") + "; dropped");
        }
        continue;
      }
      lexical.push_back(std::move(r));
    }

    for (const auto& s : senses) {
      auto rules = extract_syntactic_rules(s, senses);
      out.insert(out.end(), rules.begin(), rules.end());
    }
  }

  auto generalized = generalize_rules(lexical, lexicon);
  out.insert(out.end(), lexical.begin(), lexical.end());
  out.insert(out.end(), generalized.begin(), generalized.end());

  std::sort(out.begin(), out.end());
  // Same generalized pattern for the same sense from several lexical rules:
  // keep the first provenance.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const DisambiguationRule& a, const DisambiguationRule& b) {
                          return a.target == b.target && a.kind == b.kind && a.pattern() == b.pattern();
                        }),
            out.end());
  return out;
}

}  // namespace lexmerge
