#include "lexmerge/lexicon.hpp"

#include <algorithm>
#include <sstream>

#include "lexmerge/text.hpp"

namespace lexmerge {

std::string to_string(const SenseKey& key) {
  std::ostringstream os;
  os << key.lemma << '/' << key.pos << '/' << key.sense_id;
  return os.str();
}

std::string to_string(const DependencyTriple& dep) {
  return dep.relation + "(" + dep.head + "," + dep.dependent + ")";
}

std::optional<DependencyTriple> parse_dependency(std::string_view raw) {
  const std::string_view s = text::trim(raw);
  const auto open = s.find('(');
  if (open == std::string_view::npos || open == 0 || s.back() != ')') return std::nullopt;
  const std::string_view inner = s.substr(open + 1, s.size() - open - 2);
  const auto parts = text::split(inner, ',');
  if (parts.size() != 2) return std::nullopt;
  DependencyTriple dep{std::string(text::trim(s.substr(0, open))), std::string(text::trim(parts[0])),
                       std::string(text::trim(parts[1]))};
  if (dep.relation.empty() || dep.head.empty() || dep.dependent.empty()) return std::nullopt;
  for (const std::string* field : {&dep.head, &dep.dependent}) {
    if (field->find_first_of("()") != std::string::npos) return std::nullopt;
  }
  return dep;
}

void validate_senses(const Inventories& inventories, const std::vector<SenseEntry>& senses,
                     Diagnostics& diagnostics, const std::vector<std::size_t>& line_of) {
  auto line = [&](std::size_t i) { return i < line_of.size() ? line_of[i] : i + 1; };

  std::map<SenseKey, std::size_t> first_seen;
  for (std::size_t i = 0; i < senses.size(); ++i) {
    const SenseEntry& s = senses[i];
    if (s.lemma.empty()) diagnostics.error(line(i), "empty lemma");
    if (s.pos.empty()) diagnostics.error(line(i), "empty part of speech");
    if (s.sense_id <= 0) diagnostics.error(line(i), "sense_id must be a positive integer");
    auto [it, inserted] = first_seen.emplace(s.key(), line(i));
    if (!inserted) {
      diagnostics.error(line(i), "duplicate sense " + to_string(s.key()) + " (first defined on line " +
                                     std::to_string(it->second) + ")");
    }
    if (!inventories.domains.count(s.features.domain_code)) {
      diagnostics.error(line(i), "unknown domain code '" + s.features.domain_code + "'");
    }
    if (!inventories.classes.count(s.features.class_code)) {
      diagnostics.error(line(i), "unknown class code '" + s.features.class_code + "'");
    }
    for (const auto& ins : s.suffix_instructions) {
      if (ins.suffix.empty()) diagnostics.error(line(i), "empty suffix in instruction");
      else if (!inventories.suffixes.count(ins.suffix)) {
        diagnostics.error(line(i), "unknown suffix '" + ins.suffix + "'");
      }
    }
    for (const auto& dep : s.example_deps) {
      if (!inventories.relations.count(dep.relation)) {
        diagnostics.error(line(i), "unknown relation '" + dep.relation + "'");
      }
      if (dep.head.empty() || dep.dependent.empty()) {
        diagnostics.error(line(i), "dependency with empty argument");
      }
    }
    for (const auto& frame : s.subcat_frames) {
      if (frame.empty()) diagnostics.error(line(i), "empty subcategorization frame");
    }
    for (const auto& syn : s.base_synonyms) {
      if (syn == s.lemma) diagnostics.error(line(i), "lemma '" + s.lemma + "' listed as its own synonym");
      if (syn.empty()) diagnostics.error(line(i), "empty base synonym");
    }
  }

  // Instruction targets resolve within the same (lemma, pos).
  for (std::size_t i = 0; i < senses.size(); ++i) {
    const SenseEntry& s = senses[i];
    for (const auto& ins : s.suffix_instructions) {
      if (!first_seen.count(SenseKey{s.lemma, s.pos, ins.target_sense})) {
        diagnostics.error(line(i), "suffix instruction '" + ins.suffix + ":" + std::to_string(ins.target_sense) +
                                       "' points at nonexistent sense " +
                                       to_string(SenseKey{s.lemma, s.pos, ins.target_sense}));
      }
    }
  }
}

ReferenceLexicon::ReferenceLexicon(Inventories inventories, std::vector<SenseEntry> senses)
    : inventories_(std::move(inventories)) {
  Diagnostics diagnostics("lexicon");
  validate_senses(inventories_, senses, diagnostics);
  if (diagnostics.has_errors()) throw ValidationError(diagnostics.all());

  for (auto& s : senses) {
    auto [it, inserted] = by_lemma_.try_emplace(s.lemma);
    if (inserted) lemma_order_.push_back(s.lemma);
    it->second.push_back(std::move(s));
  }
}

std::span<const SenseEntry> ReferenceLexicon::lookup(const std::string& lemma) const {
  const auto it = by_lemma_.find(lemma);
  if (it == by_lemma_.end()) return {};
  return it->second;
}

std::vector<SenseEntry> ReferenceLexicon::senses_of(const std::string& lemma, const std::string& pos) const {
  std::vector<SenseEntry> out;
  for (const auto& s : lookup(lemma)) {
    if (s.pos == pos) out.push_back(s);
  }
  return out;
}

const SenseEntry* ReferenceLexicon::find(const SenseKey& key) const {
  for (const auto& s : lookup(key.lemma)) {
    if (s.pos == key.pos && s.sense_id == key.sense_id) return &s;
  }
  return nullptr;
}

const SenseEntry& ReferenceLexicon::at(const SenseKey& key) const {
  if (const SenseEntry* s = find(key)) return *s;
  throw UnknownSenseError("unknown sense " + to_string(key));
}

SenseKey ReferenceLexicon::resolve(const std::string& lemma, int sense_id) const {
  std::vector<SenseKey> matches;
  for (const auto& s : lookup(lemma)) {
    if (s.sense_id == sense_id) matches.push_back(s.key());
  }
  if (matches.empty()) {
    throw UnknownSenseError("unknown sense " + lemma + " " + std::to_string(sense_id));
  }
  if (matches.size() > 1) {
    throw UnknownSenseError("ambiguous sense " + lemma + " " + std::to_string(sense_id) +
                            ": several parts of speech carry this number");
  }
  return matches.front();
}

std::vector<SenseEntry> ReferenceLexicon::all_senses() const {
  std::vector<SenseEntry> out;
  for (const auto& lemma : lemma_order_) {
    const auto& senses = by_lemma_.at(lemma);
    out.insert(out.end(), senses.begin(), senses.end());
  }
  return out;
}

std::size_t ReferenceLexicon::sense_count() const {
  std::size_t n = 0;
  for (const auto& [lemma, senses] : by_lemma_) n += senses.size();
  return n;
}

std::span<const SenseEntry> lookup(const ReferenceLexicon& lexicon, const std::string& lemma) {
  return lexicon.lookup(lemma);
}

SemanticFeatures features_of(const ReferenceLexicon& lexicon, const std::string& lemma, int sense_id) {
  return lexicon.at(lexicon.resolve(lemma, sense_id)).features;
}

SemanticFeatures features_of(const ReferenceLexicon& lexicon, const SenseKey& key) {
  return lexicon.at(key).features;
}

}  // namespace lexmerge
