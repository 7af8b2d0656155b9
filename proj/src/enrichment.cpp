#include "lexmerge/enrichment.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "lexmerge/taxonomy.hpp"
#include "lexmerge/text.hpp"

namespace lexmerge {

bool Utterance::has_token(const std::string& lemma) const {
  return std::find(tokens.begin(), tokens.end(), lemma) != tokens.end();
}

// ---------------------------------------------------------------------------
// Utterance files

std::vector<Utterance> parse_utterances(std::istream& in, const std::string& source,
                                        std::vector<Diagnostic>* warnings) {
  Diagnostics diagnostics(source);
  std::vector<Utterance> out;
  Utterance current;
  std::vector<std::pair<std::size_t, std::string>> need_tokens;  // (line, lemma)
  bool open = false;

  auto close = [&] {
    if (!open) return;
    for (const auto& [line, lemma] : need_tokens) {
      if (!current.has_token(lemma)) diagnostics.error(line, "'" + lemma + "' is not a token of the utterance");
    }
    if (current.tokens.empty()) diagnostics.warning(0, "utterance " + std::to_string(out.size() + 1) + " has no tokens");
    out.push_back(std::move(current));
    current = Utterance{};
    need_tokens.clear();
    open = false;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!text::is_valid_utf8(line)) {
      diagnostics.error(line_no, "invalid UTF-8");
      continue;
    }
    if (text::trim(line).empty()) {
      close();
      continue;
    }
    if (line[0] == '#') continue;
    open = true;
    const auto fields = text::split(line, '\t');
    const std::string kind(text::trim(fields[0]));
    if (kind == "T" && fields.size() >= 2) {
      for (std::size_t i = 1; i < fields.size(); ++i) {
        std::istringstream words{std::string(fields[i])};
        std::string w;
        while (words >> w) current.tokens.push_back(text::nfc(w));
      }
    } else if (kind == "D" && fields.size() == 2) {
      auto dep = parse_dependency(text::nfc(fields[1]));
      if (!dep) {
        diagnostics.error(line_no, "malformed dependency '" + std::string(text::trim(fields[1])) + "'");
        continue;
      }
      dep->relation = text::ascii_upper(dep->relation);
      need_tokens.emplace_back(line_no, dep->head);
      need_tokens.emplace_back(line_no, dep->dependent);
      current.deps.push_back(std::move(*dep));
    } else if (kind == "F" && fields.size() == 3) {
      const std::string lemma = text::nfc(text::trim(fields[1]));
      const std::string frame = text::nfc(text::trim(fields[2]));
      if (lemma.empty() || frame.empty()) {
        diagnostics.error(line_no, "frame record with empty field");
        continue;
      }
      need_tokens.emplace_back(line_no, lemma);
      current.frames[lemma].insert(frame);
    } else {
      diagnostics.error(line_no, "unrecognized utterance record (expected T, D or F)");
    }
  }
  close();

  if (diagnostics.has_errors()) throw ValidationError(diagnostics.all());
  if (warnings) {
    const auto w = diagnostics.warnings();
    warnings->insert(warnings->end(), w.begin(), w.end());
  }
  return out;
}

std::vector<Utterance> parse_utterances(std::string_view content, const std::string& source,
                                        std::vector<Diagnostic>* warnings) {
  std::istringstream in{std::string(content)};
  return parse_utterances(in, source, warnings);
}

// ---------------------------------------------------------------------------
// Disambiguation

namespace {

bool argument_matches(const RuleArgument& arg, const std::string& word, const ReferenceLexicon& lexicon) {
  if (!arg.is_class) return arg.value == word;
  const auto senses = lexicon.lookup(word);
  return std::any_of(senses.begin(), senses.end(),
                     [&](const SenseEntry& s) { return s.features.class_code == arg.value; });
}

}  // namespace

bool rule_matches(const DisambiguationRule& rule, const Utterance& utterance, const ReferenceLexicon& lexicon) {
  if (rule.kind == RuleKind::syntactic) {
    const auto it = utterance.frames.find(rule.target.lemma);
    return it != utterance.frames.end() && it->second.count(rule.frame);
  }
  return std::any_of(utterance.deps.begin(), utterance.deps.end(), [&](const DependencyTriple& dep) {
    return dep.relation == rule.relation && argument_matches(rule.head, dep.head, lexicon) &&
           argument_matches(rule.dependent, dep.dependent, lexicon);
  });
}

std::optional<SenseKey> disambiguate(std::span<const DisambiguationRule> rules, const Utterance& utterance,
                                     const std::string& lemma, const ReferenceLexicon& lexicon) {
  if (!utterance.has_token(lemma)) {
    throw std::invalid_argument("'" + lemma + "' is not a token of the utterance");
  }
  for (auto tier : {RuleKind::lexical, RuleKind::generalized, RuleKind::syntactic}) {
    std::set<SenseKey> senses;
    for (const auto& rule : rules) {
      if (rule.kind == tier && rule.target.lemma == lemma && rule_matches(rule, utterance, lexicon)) {
        senses.insert(rule.target);
      }
    }
    if (senses.empty()) continue;
    if (senses.size() == 1) return *senses.begin();
    return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enrichment

namespace {

void add_item(std::vector<EnrichmentItem>& items, const std::string& value, Provenance provenance) {
  auto it = std::find_if(items.begin(), items.end(), [&](const EnrichmentItem& i) { return i.value == value; });
  if (it == items.end()) {
    items.push_back({value, {std::move(provenance)}});
    return;
  }
  if (std::find(it->provenance.begin(), it->provenance.end(), provenance) == it->provenance.end()) {
    it->provenance.push_back(std::move(provenance));
  }
}

void canonicalize(std::vector<EnrichmentItem>& items) {
  for (auto& item : items) std::sort(item.provenance.begin(), item.provenance.end());
  std::sort(items.begin(), items.end(),
            [](const EnrichmentItem& a, const EnrichmentItem& b) { return a.value < b.value; });
}

}  // namespace

EnrichmentSet enrich(const MergedLexicon& merged, const SenseKey& sense, const EnrichmentOptions& options) {
  const MergedSenseRecord& record = merged.at(sense);
  EnrichmentSet out;
  out.lemma = sense.lemma;
  out.sense = sense;

  for (const auto& d : record.synonyms) {
    if (d.proposal == sense.lemma) continue;
    const bool admit = d.verdict == SynonymVerdict::accepted || d.verdict == SynonymVerdict::base ||
                       (d.verdict == SynonymVerdict::accepted_multiword && options.include_multiword);
    if (!admit) continue;
    for (const auto& source : d.sources) {
      add_item(out.synonyms, d.proposal, {d.target, source, std::string(to_string(d.verdict))});
    }
  }

  for (const auto& d : record.derivatives) {
    if (d.verdict != DerivativeVerdict::kept || d.candidate.surface == sense.lemma) continue;
    add_item(out.derivatives, d.candidate.surface,
             {d.target, "derivation", std::string(to_string(d.verdict)) + ":" + d.candidate.suffix});
  }

  const AlignmentResult& alignment = record.alignment;
  if (alignment.status == AlignmentStatus::matched && alignment.synset && merged.graph.find(*alignment.synset)) {
    for (auto relation : options.taxonomy_relations) {
      for (const auto& word : taxonomy_neighbors(merged.graph, *alignment.synset, relation, options.depth)) {
        if (word == sense.lemma) continue;
        add_item(out.taxonomy_words, word,
                 {alignment.key, "alignment:" + *alignment.synset, std::string(to_string(relation))});
      }
    }
  }

  canonicalize(out.synonyms);
  canonicalize(out.derivatives);
  canonicalize(out.taxonomy_words);
  return out;
}

std::vector<EnrichmentSet> enrich_utterance(const MergedLexicon& merged, const Utterance& utterance,
                                            const EnrichmentOptions& options) {
  const auto rules = merged.rules();
  std::vector<EnrichmentSet> out;
  std::set<std::string> seen;
  for (const auto& token : utterance.tokens) {
    if (!seen.insert(token).second || !merged.reference.contains(token)) continue;
    if (const auto sense = disambiguate(rules, utterance, token, merged.reference)) {
      out.push_back(enrich(merged, *sense, options));
    } else {
      EnrichmentSet unresolved;
      unresolved.lemma = token;
      out.push_back(std::move(unresolved));
    }
  }
  return out;
}

namespace {

std::string format_items(const std::vector<EnrichmentItem>& items) {
  if (items.empty()) return "-";
  std::vector<std::string> parts;
  for (const auto& item : items) {
    std::vector<std::string> tags;
    for (const auto& p : item.provenance) tags.push_back(p.source + "/" + p.decision);
    parts.push_back(item.value + "[" + text::join(tags, ",") + "]");
  }
  return text::join(parts, ";");
}

}  // namespace

std::string format_enrichment(std::size_t utterance_index, const EnrichmentSet& set) {
  std::ostringstream os;
  os << utterance_index << '\t' << set.lemma << '\t';
  if (set.sense) {
    os << set.sense->pos << ':' << set.sense->sense_id;
  } else {
    os << "unresolved";
  }
  os << '\t' << format_items(set.synonyms) << '\t' << format_items(set.derivatives) << '\t'
     << format_items(set.taxonomy_words);
  return os.str();
}

}  // namespace lexmerge
