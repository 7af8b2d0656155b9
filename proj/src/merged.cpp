#include "lexmerge/merged.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <istream>
#include <sstream>

#include "lexmerge/text.hpp"

namespace lexmerge {

const MergedSenseRecord& MergedLexicon::at(const SenseKey& key) const {
  const auto it = records.find(key);
  if (it == records.end()) throw UnknownSenseError("unknown sense " + to_string(key) + " in merged lexicon");
  return it->second;
}

std::vector<DisambiguationRule> MergedLexicon::rules() const {
  std::vector<DisambiguationRule> out;
  for (const auto& [key, record] : records) out.insert(out.end(), record.rules.begin(), record.rules.end());
  return out;
}

// ---------------------------------------------------------------------------
// Building

namespace {

bool synonym_order(const SynonymDecision& a, const SynonymDecision& b) {
  return std::tie(a.proposal, a.verdict) < std::tie(b.proposal, b.verdict);
}

bool derivative_order(const DerivativeDecision& a, const DerivativeDecision& b) {
  return a.candidate < b.candidate;
}

}  // namespace

MergedLexicon build_merged(const MergeInputs& inputs) {
  MergedLexicon merged;
  merged.reference = inputs.reference;
  merged.diagnostics = inputs.input_diagnostics;
  Diagnostics notes("merge");

  std::vector<SynonymResource> resources = inputs.synonym_resources;
  std::string alignment_source = inputs.alignment_source.value_or(inputs.synset_source);
  if (inputs.synsets) {
    merged.graph = *inputs.synsets;
    if (!inputs.alignment_source) {
      for (const auto& r : resources) {
        if (r.name == inputs.synset_source) {
          throw std::invalid_argument("synonym resource name '" + r.name + "' collides with the synset source");
        }
      }
      resources.push_back(synonyms_from_synsets(merged.graph, inputs.synset_source));
    }
  } else {
    notes.warning(0, "no synset resource given; every alignment is no-synset");
  }
  if (!inputs.wordlist) notes.warning(0, "no wordlist given; no derivative was generated");

  const SynonymMergeResult synonyms = merge_synonyms(merged.reference, resources);
  const DerivativeDecisions derivatives =
      inputs.wordlist ? merge_derivatives(merged.reference, *inputs.wordlist, inputs.derivation) : DerivativeDecisions{};
  const Alignments alignments = align_lexicon(merged.reference, synonyms.decisions, merged.graph, alignment_source);
  const auto rules = extract_rules(merged.reference, &notes);

  for (const auto& sense : merged.reference.all_senses()) {
    MergedSenseRecord record;
    record.key = sense.key();
    if (const auto it = synonyms.decisions.find(record.key); it != synonyms.decisions.end()) {
      record.synonyms = it->second;
    }
    for (const auto& syn : sense.base_synonyms) {
      record.synonyms.push_back({record.key, syn, SynonymVerdict::base, {}, {std::string(kReferenceSource)}});
    }
    std::sort(record.synonyms.begin(), record.synonyms.end(), synonym_order);
    if (const auto it = derivatives.find(record.key); it != derivatives.end()) {
      record.derivatives = it->second;
      std::sort(record.derivatives.begin(), record.derivatives.end(), derivative_order);
    }
    record.alignment = alignments.at(record.key);
    merged.records.emplace(record.key, std::move(record));
  }
  for (const auto& rule : rules) merged.records.at(rule.target).rules.push_back(rule);

  merged.skipped = synonyms.skipped;
  merged.diagnostics.insert(merged.diagnostics.end(), notes.all().begin(), notes.all().end());
  return merged;
}

// ---------------------------------------------------------------------------
// Writing

namespace {

std::string clean(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

void key_columns(std::ostream& os, const SenseKey& key) {
  os << key.lemma << '\t' << key.pos << '\t' << key.sense_id;
}

}  // namespace

std::string synonym_log(const MergedLexicon& merged) {
  std::ostringstream os;
  for (const auto& [key, record] : merged.records) {
    for (const auto& d : record.synonyms) {
      key_columns(os, key);
      os << '\t' << d.proposal << '\t' << to_string(d.verdict) << '\t'
         << format_sense_list(d.matching_proposal_senses) << '\t' << text::join(d.sources, ",") << '\n';
    }
  }
  return os.str();
}

std::string derivative_log(const MergedLexicon& merged) {
  std::ostringstream os;
  for (const auto& [key, record] : merged.records) {
    for (const auto& d : record.derivatives) {
      key_columns(os, key);
      os << '\t' << d.candidate.surface << '\t' << d.candidate.suffix << '\t' << to_string(d.verdict) << '\n';
    }
  }
  return os.str();
}

std::string alignment_log(const MergedLexicon& merged) {
  std::ostringstream os;
  for (const auto& [key, record] : merged.records) {
    const auto& a = record.alignment;
    key_columns(os, key);
    os << '\t' << to_string(a.status) << '\t' << a.synset.value_or("-") << '\t' << a.overlap << '/'
       << a.synonym_count << '\n';
  }
  return os.str();
}

std::string rule_file(const MergedLexicon& merged) {
  std::ostringstream os;
  for (const auto& [key, record] : merged.records) {
    for (const auto& r : record.rules) {
      os << key.lemma << '\t' << key.pos << '\t' << to_string(r.kind) << '\t' << r.pattern() << '\t' << key.sense_id
         << '\t' << (r.derived_from.empty() ? std::string("-") : r.derived_from) << '\n';
    }
  }
  return os.str();
}

std::string serialize_merged(const MergedLexicon& merged) {
  std::ostringstream os;
  os << "@reference\n" << serialize_reference(merged.reference);
  os << "@synsets\n" << serialize_synsets(merged.graph);
  os << "@synonyms\n" << synonym_log(merged);
  os << "@derivatives\n" << derivative_log(merged);
  os << "@alignments\n" << alignment_log(merged);
  os << "@rules\n" << rule_file(merged);
  os << "@skipped\n";
  for (const auto& s : merged.skipped) os << s.resource << '\t' << s.lemma << '\n';
  os << "@diagnostics\n";
  for (const auto& d : merged.diagnostics) {
    os << (d.severity == Severity::error ? "error" : "warning") << '\t' << clean(d.source) << '\t' << d.line << '\t'
       << clean(d.message) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Reading

namespace {

const std::vector<std::string> kSections = {"@reference", "@synonyms", "@derivatives", "@alignments",
                                            "@rules",     "@synsets",  "@skipped",     "@diagnostics"};

template <typename Int>
std::optional<Int> to_number(std::string_view s) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct Line {
  std::size_t number;
  std::string text;
};

}  // namespace

MergedLexicon parse_merged(std::istream& in, const std::string& source) {
  Diagnostics diagnostics(source);
  std::map<std::string, std::vector<Line>> sections;
  std::string current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!text::is_valid_utf8(line)) {
      diagnostics.error(line_no, "invalid UTF-8");
      continue;
    }
    if (std::find(kSections.begin(), kSections.end(), line) != kSections.end()) {
      if (sections.count(line)) diagnostics.error(line_no, "repeated section " + line);
      current = line;
      sections[current];
      continue;
    }
    if (line.empty()) continue;
    if (current.empty()) {
      diagnostics.error(line_no, "content before the first section marker");
      continue;
    }
    sections[current].push_back({line_no, line});
  }
  for (const auto& name : kSections) {
    if (!sections.count(name)) diagnostics.error(0, "missing section " + name);
  }
  if (diagnostics.has_errors()) throw ValidationError(diagnostics.all());

  auto body = [&](const std::string& name) {
    std::string out;
    for (const auto& l : sections[name]) out += l.text + '\n';
    return out;
  };

  MergedLexicon merged;
  // Nested resources report lines relative to their section.
  merged.reference = parse_reference(std::string_view(body("@reference")), source + "@reference");
  merged.graph = parse_synset_resource(std::string_view(body("@synsets")), source + "@synsets");
  for (const auto& sense : merged.reference.all_senses()) {
    MergedSenseRecord record;
    record.key = sense.key();
    record.alignment.key = sense.key();
    merged.records.emplace(sense.key(), std::move(record));
  }

  auto record_for = [&](const Line& l, const std::vector<std::string_view>& f) -> MergedSenseRecord* {
    const auto id = to_number<int>(f[2]);
    if (!id) {
      diagnostics.error(l.number, "bad sense_id '" + std::string(f[2]) + "'");
      return nullptr;
    }
    const auto it = merged.records.find(SenseKey{std::string(f[0]), std::string(f[1]), *id});
    if (it == merged.records.end()) {
      diagnostics.error(l.number, "record for unknown sense " + std::string(f[0]) + "/" + std::string(f[1]) + "/" +
                                      std::string(f[2]));
      return nullptr;
    }
    return &it->second;
  };
  auto fields = [&](const Line& l, std::size_t n) -> std::optional<std::vector<std::string_view>> {
    auto f = text::split(l.text, '\t');
    if (f.size() != n) {
      diagnostics.error(l.number, "expected " + std::to_string(n) + " fields, found " + std::to_string(f.size()));
      return std::nullopt;
    }
    return f;
  };

  for (const auto& l : sections["@synonyms"]) {
    const auto f = fields(l, 7);
    if (!f) continue;
    MergedSenseRecord* record = record_for(l, *f);
    if (!record) continue;
    SynonymDecision d;
    d.target = record->key;
    d.proposal = std::string((*f)[3]);
    const auto verdict = parse_synonym_verdict((*f)[4]);
    if (!verdict) {
      diagnostics.error(l.number, "unknown synonym verdict '" + std::string((*f)[4]) + "'");
      continue;
    }
    d.verdict = *verdict;
    bool ok = true;
    if ((*f)[5] != "-") {
      for (auto item : text::split((*f)[5], ',')) {
        const auto colon = item.rfind(':');
        const auto id = colon == std::string_view::npos ? std::nullopt : to_number<int>(item.substr(colon + 1));
        if (!id) {
          ok = false;
          break;
        }
        d.matching_proposal_senses.push_back({d.proposal, std::string(item.substr(0, colon)), *id});
      }
    }
    if (!ok) {
      diagnostics.error(l.number, "malformed matched-sense list '" + std::string((*f)[5]) + "'");
      continue;
    }
    for (auto s : text::split((*f)[6], ',')) {
      if (!s.empty()) d.sources.insert(std::string(s));
    }
    record->synonyms.push_back(std::move(d));
  }

  for (const auto& l : sections["@derivatives"]) {
    const auto f = fields(l, 6);
    if (!f) continue;
    MergedSenseRecord* record = record_for(l, *f);
    if (!record) continue;
    const std::string surface((*f)[3]);
    const std::string suffix((*f)[4]);
    const auto verdict = parse_derivative_verdict((*f)[5]);
    if (!verdict || suffix.empty() || !surface.ends_with(suffix) || surface.size() == suffix.size()) {
      diagnostics.error(l.number, "malformed derivative record");
      continue;
    }
    DerivativeDecision d{record->key, {surface, surface.substr(0, surface.size() - suffix.size()), suffix}, *verdict,
                         std::nullopt};
    if (*verdict == DerivativeVerdict::kept) d.assigned_sense = record->key.sense_id;
    record->derivatives.push_back(std::move(d));
  }

  for (const auto& l : sections["@alignments"]) {
    const auto f = fields(l, 6);
    if (!f) continue;
    MergedSenseRecord* record = record_for(l, *f);
    if (!record) continue;
    const auto status = parse_alignment_status((*f)[3]);
    const auto ratio = text::split((*f)[5], '/');
    std::optional<int> overlap;
    std::optional<int> count;
    if (ratio.size() == 2) {
      overlap = to_number<int>(ratio[0]);
      count = to_number<int>(ratio[1]);
    }
    if (!status || !overlap || !count) {
      diagnostics.error(l.number, "malformed alignment record");
      continue;
    }
    AlignmentResult& a = record->alignment;
    a.status = *status;
    a.overlap = *overlap;
    a.synonym_count = *count;
    if ((*f)[4] != "-") a.synset = std::string((*f)[4]);
    if ((a.status == AlignmentStatus::matched) != a.synset.has_value() ||
        (a.synset && !merged.graph.find(*a.synset))) {
      diagnostics.error(l.number, "alignment synset inconsistent with status or graph");
    }
  }

  for (const auto& l : sections["@rules"]) {
    const auto f = fields(l, 6);
    if (!f) continue;
    const std::vector<std::string_view> key_fields{(*f)[0], (*f)[1], (*f)[4]};
    MergedSenseRecord* record = record_for(l, key_fields);
    if (!record) continue;
    const auto kind = parse_rule_kind((*f)[2]);
    std::optional<DisambiguationRule> rule;
    if (kind) rule = make_rule(record->key, *kind, (*f)[3], (*f)[5] == "-" ? std::string{} : std::string((*f)[5]));
    if (!rule) {
      diagnostics.error(l.number, "malformed rule '" + std::string((*f)[3]) + "'");
      continue;
    }
    record->rules.push_back(std::move(*rule));
  }

  for (const auto& l : sections["@skipped"]) {
    const auto f = fields(l, 2);
    if (!f) continue;
    merged.skipped.push_back({std::string((*f)[0]), std::string((*f)[1])});
  }

  for (const auto& l : sections["@diagnostics"]) {
    const auto f = fields(l, 4);
    if (!f) continue;
    const auto n = to_number<std::size_t>((*f)[2]);
    if (((*f)[0] != "error" && (*f)[0] != "warning") || !n) {
      diagnostics.error(l.number, "malformed diagnostic record");
      continue;
    }
    merged.diagnostics.push_back({(*f)[0] == "error" ? Severity::error : Severity::warning, std::string((*f)[1]), *n,
                                  std::string((*f)[3])});
  }

  if (diagnostics.has_errors()) throw ValidationError(diagnostics.all());
  return merged;
}

MergedLexicon parse_merged(std::string_view content, const std::string& source) {
  std::istringstream in{std::string(content)};
  return parse_merged(in, source);
}

// ---------------------------------------------------------------------------
// Report

double MergeReport::derivative_rejection_rate() const {
  if (derivatives_seen == 0) return 0.0;
  const auto kept = derivative_verdicts.count("kept") ? derivative_verdicts.at("kept") : 0;
  return static_cast<double>(derivatives_seen - kept) / static_cast<double>(derivatives_seen);
}

MergeReport compute_report(const MergedLexicon& merged) {
  MergeReport report;
  for (auto v : {SynonymVerdict::accepted, SynonymVerdict::accepted_multiword, SynonymVerdict::rejected,
                 SynonymVerdict::base}) {
    report.synonym_verdicts[std::string(to_string(v))] = 0;
  }
  for (auto v : {DerivativeVerdict::kept, DerivativeVerdict::rejected_no_instruction,
                 DerivativeVerdict::rejected_other_sense, DerivativeVerdict::rejected_short_radical}) {
    report.derivative_verdicts[std::string(to_string(v))] = 0;
  }
  for (auto k : {RuleKind::lexical, RuleKind::generalized, RuleKind::syntactic}) {
    report.rules_by_kind[std::string(to_string(k))] = 0;
  }
  for (auto s : {AlignmentStatus::matched, AlignmentStatus::no_synset, AlignmentStatus::no_majority,
                 AlignmentStatus::ambiguous}) {
    report.alignment_statuses[std::string(to_string(s))] = 0;
  }

  for (const auto& [key, record] : merged.records) {
    ++report.senses;
    for (const auto& d : record.synonyms) {
      ++report.synonyms_seen;
      ++report.synonym_verdicts[std::string(to_string(d.verdict))];
    }
    for (const auto& d : record.derivatives) {
      ++report.derivatives_seen;
      ++report.derivative_verdicts[std::string(to_string(d.verdict))];
      if (d.verdict == DerivativeVerdict::rejected_no_instruction) ++report.no_instruction_by_pos[key.pos];
    }
    for (const auto& r : record.rules) ++report.rules_by_kind[std::string(to_string(r.kind))];
    ++report.alignment_statuses[std::string(to_string(record.alignment.status))];
  }
  report.skipped = merged.skipped;
  report.diagnostics = merged.diagnostics;
  return report;
}

std::string format_report(const MergeReport& report) {
  std::ostringstream os;
  os << "senses\t" << report.senses << '\n';
  os << "synonyms.seen\t" << report.synonyms_seen << '\n';
  for (const auto& [verdict, n] : report.synonym_verdicts) os << "synonyms." << verdict << '\t' << n << '\n';
  os << "derivatives.seen\t" << report.derivatives_seen << '\n';
  for (const auto& [verdict, n] : report.derivative_verdicts) os << "derivatives." << verdict << '\t' << n << '\n';
  for (const auto& [pos, n] : report.no_instruction_by_pos) {
    os << "derivatives.rejected-no-instruction.pos." << pos << '\t' << n << '\n';
  }
  os << "derivatives.rejection-rate\t" << std::fixed << std::setprecision(4) << report.derivative_rejection_rate()
     << '\n';
  for (const auto& [kind, n] : report.rules_by_kind) os << "rules." << kind << '\t' << n << '\n';
  for (const auto& [status, n] : report.alignment_statuses) os << "alignments." << status << '\t' << n << '\n';
  os << "skipped\t" << report.skipped.size() << '\n';
  for (const auto& s : report.skipped) os << "  " << s.resource << '\t' << s.lemma << '\n';
  os << "diagnostics\t" << report.diagnostics.size() << '\n';
  for (const auto& d : report.diagnostics) os << "  " << format(d) << '\n';
  return os.str();
}

}  // namespace lexmerge
