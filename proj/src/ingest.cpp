#include "lexmerge/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ranges>
#include <sstream>

#include "lexmerge/text.hpp"

namespace lexmerge {

// ---------------------------------------------------------------------------
// Taxonomy relations

std::string_view to_string(TaxonomyRelation relation) {
  switch (relation) {
    case TaxonomyRelation::hypernym: return "hypernym";
    case TaxonomyRelation::hyponym: return "hyponym";
    case TaxonomyRelation::meronym: return "meronym";
    case TaxonomyRelation::holonym: return "holonym";
  }
  return "?";
}

std::optional<TaxonomyRelation> parse_taxonomy_relation(std::string_view text) {
  const std::string lower = text::ascii_lower(text::trim(text));
  if (lower == "hypernym") return TaxonomyRelation::hypernym;
  if (lower == "hyponym") return TaxonomyRelation::hyponym;
  if (lower == "meronym") return TaxonomyRelation::meronym;
  if (lower == "holonym") return TaxonomyRelation::holonym;
  return std::nullopt;
}

TaxonomyRelation inverse(TaxonomyRelation relation) {
  switch (relation) {
    case TaxonomyRelation::hypernym: return TaxonomyRelation::hyponym;
    case TaxonomyRelation::hyponym: return TaxonomyRelation::hypernym;
    case TaxonomyRelation::meronym: return TaxonomyRelation::holonym;
    case TaxonomyRelation::holonym: return TaxonomyRelation::meronym;
  }
  return relation;
}

// ---------------------------------------------------------------------------
// Line reading

namespace detail {

bool LineReader::next(std::size_t& line_no, std::string& line) {
  while (std::getline(in_, line)) {
    ++line_no_;
    line_no = line_no_;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
      diagnostics_.warning(line_no, "CRLF line ending");
    }
    if (!text::is_valid_utf8(line)) {
      diagnostics_.error(line_no, "invalid UTF-8");
      continue;
    }
    if (text::trim(line).empty()) continue;
    if (line[0] == '#' && (line.size() < 2 || line[1] != '!')) continue;
    return true;
  }
  return false;
}

}  // namespace detail

namespace {

std::string field(std::string_view raw) { return text::nfc(text::trim(raw)); }

bool is_dash(std::string_view raw) { return text::trim(raw) == "-"; }

std::optional<int> parse_positive_int(std::string_view raw) {
  const std::string_view s = text::trim(raw);
  if (s.empty() || s.size() > 9) return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value <= 0) return std::nullopt;
  return value;
}

std::vector<std::string> header_tokens(std::string_view rest) {
  std::vector<std::string> tokens;
  std::istringstream is{std::string(rest)};
  std::string token;
  while (is >> token) tokens.push_back(token);
  return tokens;
}

void sink(const Diagnostics& diagnostics, std::vector<Diagnostic>* warnings) {
  if (diagnostics.has_errors()) throw ValidationError(diagnostics.all());
  if (warnings) {
    const auto w = diagnostics.warnings();
    warnings->insert(warnings->end(), w.begin(), w.end());
  }
}

template <typename Parse>
auto parse_string(std::string_view content, Parse parse) {
  std::istringstream in{std::string(content)};
  return parse(in);
}

}  // namespace

// ---------------------------------------------------------------------------
// Reference lexicon

ReferenceLexicon parse_reference(std::istream& in, const std::string& source, std::vector<Diagnostic>* warnings) {
  Diagnostics diagnostics(source);
  detail::LineReader reader(in, diagnostics);
  Inventories inventories;
  std::vector<SenseEntry> senses;
  std::vector<std::size_t> lines;

  std::size_t line_no = 0;
  std::string line;
  while (reader.next(line_no, line)) {
    if (line.starts_with("#!")) {
      if (!senses.empty()) {
        diagnostics.error(line_no, "header line after the first record");
        continue;
      }
      auto tokens = header_tokens(std::string_view(line).substr(2));
      if (tokens.empty()) {
        diagnostics.error(line_no, "empty header line");
        continue;
      }
      const std::string key = text::ascii_lower(tokens.front());
      std::set<std::string>* target = nullptr;
      if (key == "domain") target = &inventories.domains;
      else if (key == "class") target = &inventories.classes;
      else if (key == "relation") target = &inventories.relations;
      else if (key == "suffix") target = &inventories.suffixes;
      if (!target) {
        diagnostics.error(line_no, "unknown header '" + tokens.front() + "'");
        continue;
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::string token = text::nfc(tokens[i]);
        if (key == "suffix") {
          token = text::ascii_lower(token);
          if (token.starts_with('-')) {
            diagnostics.error(line_no, "suffix '" + token + "' must not start with a hyphen");
            continue;
          }
        } else {
          token = text::ascii_upper(token);
        }
        target->insert(token);
      }
      continue;
    }

    const auto fields = text::split(line, '\t');
    if (fields.size() != 10) {
      diagnostics.error(line_no, "expected 10 tab-separated fields, found " + std::to_string(fields.size()));
      continue;
    }
    const std::size_t errors_before = diagnostics.errors().size();
    SenseEntry s;
    s.lemma = field(fields[0]);
    s.pos = field(fields[1]);
    if (s.lemma.empty()) diagnostics.error(line_no, "empty lemma");
    if (s.pos.empty()) diagnostics.error(line_no, "empty part of speech");
    if (auto id = parse_positive_int(fields[2])) {
      s.sense_id = *id;
    } else {
      diagnostics.error(line_no, "sense_id '" + std::string(text::trim(fields[2])) + "' is not a positive integer");
    }
    s.sense_label = field(fields[3]);
    if (s.sense_label.empty()) diagnostics.error(line_no, "empty sense label");
    s.features.domain_code = text::ascii_upper(field(fields[4]));
    s.features.class_code = text::ascii_upper(field(fields[5]));

    if (!is_dash(fields[6])) {
      for (auto item : text::split(fields[6], ',')) {
        const auto parts = text::split(item, ':');
        std::optional<int> target;
        if (parts.size() == 2) target = parse_positive_int(parts[1]);
        std::string suffix = parts.empty() ? std::string{} : text::ascii_lower(field(parts[0]));
        if (parts.size() != 2 || suffix.empty() || !target) {
          diagnostics.error(line_no, "malformed suffix instruction '" + std::string(text::trim(item)) +
                                         "' (expected suffix:sense)");
          continue;
        }
        if (suffix.starts_with('-')) {
          diagnostics.error(line_no, "suffix '" + suffix + "' must not start with a hyphen");
          continue;
        }
        s.suffix_instructions.push_back({std::move(suffix), *target});
      }
    }
    if (!is_dash(fields[7])) {
      for (auto item : text::split(fields[7], '|')) {
        std::string frame = field(item);
        if (frame.empty() || frame == "-") {
          diagnostics.error(line_no, "empty subcategorization frame");
          continue;
        }
        if (std::find(s.subcat_frames.begin(), s.subcat_frames.end(), frame) == s.subcat_frames.end()) {
          s.subcat_frames.push_back(std::move(frame));
        }
      }
    }
    if (!is_dash(fields[8])) {
      for (auto item : text::split(fields[8], ';')) {
        auto dep = parse_dependency(text::nfc(item));
        if (!dep) {
          diagnostics.error(line_no, "malformed example dependency '" + std::string(text::trim(item)) +
                                         "' (expected REL(head,dependent))");
          continue;
        }
        dep->relation = text::ascii_upper(dep->relation);
        if (std::find(s.example_deps.begin(), s.example_deps.end(), *dep) == s.example_deps.end()) {
          s.example_deps.push_back(std::move(*dep));
        }
      }
    }
    if (!is_dash(fields[9])) {
      for (auto item : text::split(fields[9], ',')) {
        std::string syn = text::nfc(text::squeeze_spaces(item));
        if (syn.empty() || syn == "-") {
          diagnostics.error(line_no, "empty base synonym");
          continue;
        }
        if (syn == s.lemma) {
          diagnostics.warning(line_no, "dropped self synonym '" + syn + "'");
          continue;
        }
        if (std::find(s.base_synonyms.begin(), s.base_synonyms.end(), syn) == s.base_synonyms.end()) {
          s.base_synonyms.push_back(std::move(syn));
        }
      }
    }
    // Structurally broken records are not cross-validated.
    if (diagnostics.errors().size() == errors_before) {
      senses.push_back(std::move(s));
      lines.push_back(line_no);
    }
  }

  validate_senses(inventories, senses, diagnostics, lines);
  sink(diagnostics, warnings);
  return ReferenceLexicon(std::move(inventories), std::move(senses));
}

ReferenceLexicon parse_reference(std::string_view content, const std::string& source,
                                 std::vector<Diagnostic>* warnings) {
  return parse_string(content, [&](std::istream& in) { return parse_reference(in, source, warnings); });
}

std::string serialize_reference(const ReferenceLexicon& lexicon) {
  std::ostringstream os;
  const Inventories& inv = lexicon.inventories();
  auto header = [&](const char* key, const std::set<std::string>& tokens) {
    os << "#!" << key;
    for (const auto& t : tokens) os << ' ' << t;
    os << '\n';
  };
  header("domain", inv.domains);
  header("class", inv.classes);
  header("relation", inv.relations);
  header("suffix", inv.suffixes);

  for (const auto& s : lexicon.all_senses()) {
    os << s.lemma << '\t' << s.pos << '\t' << s.sense_id << '\t' << s.sense_label << '\t'
       << s.features.domain_code << '\t' << s.features.class_code << '\t';
    if (s.suffix_instructions.empty()) {
      os << '-';
    } else {
      std::vector<std::string> items;
      for (const auto& ins : s.suffix_instructions) items.push_back(ins.suffix + ":" + std::to_string(ins.target_sense));
      os << text::join(items, ",");
    }
    os << '\t' << (s.subcat_frames.empty() ? std::string("-") : text::join(s.subcat_frames, "|")) << '\t';
    if (s.example_deps.empty()) {
      os << '-';
    } else {
      std::vector<std::string> items;
      for (const auto& d : s.example_deps) items.push_back(to_string(d));
      os << text::join(items, ";");
    }
    os << '\t' << (s.base_synonyms.empty() ? std::string("-") : text::join(s.base_synonyms, ",")) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Synonym resources

SynonymResource parse_synonym_resource(std::istream& in, const std::string& name,
                                       std::vector<Diagnostic>* warnings) {
  Diagnostics diagnostics(name);
  detail::LineReader reader(in, diagnostics);
  SynonymResource resource{name, {}};

  std::size_t line_no = 0;
  std::string line;
  while (reader.next(line_no, line)) {
    if (line.starts_with("#!")) {
      diagnostics.error(line_no, "synonym resources take no header lines");
      continue;
    }
    const auto fields = text::split(line, '\t');
    if (fields.size() != 2) {
      diagnostics.error(line_no, "expected 2 tab-separated fields, found " + std::to_string(fields.size()));
      continue;
    }
    const std::string lemma = field(fields[0]);
    if (lemma.empty()) {
      diagnostics.error(line_no, "empty lemma");
      continue;
    }
    if (text::trim(fields[1]).empty()) {
      diagnostics.error(line_no, "no proposals for '" + lemma + "'");
      continue;
    }
    auto& proposals = resource.proposals[lemma];
    for (auto item : text::split(fields[1], ',')) {
      std::string proposal = text::nfc(text::squeeze_spaces(item));
      if (proposal.empty()) {
        diagnostics.error(line_no, "empty proposal for '" + lemma + "'");
        continue;
      }
      if (proposal == lemma) {
        diagnostics.warning(line_no, "dropped self proposal '" + proposal + "'");
        continue;
      }
      proposals.insert(std::move(proposal));
    }
  }
  sink(diagnostics, warnings);
  return resource;
}

SynonymResource parse_synonym_resource(std::string_view content, const std::string& name,
                                       std::vector<Diagnostic>* warnings) {
  return parse_string(content, [&](std::istream& in) { return parse_synonym_resource(in, name, warnings); });
}

std::string serialize_synonym_resource(const SynonymResource& resource) {
  std::ostringstream os;
  for (const auto& [lemma, proposals] : resource.proposals) {
    if (proposals.empty()) continue;
    os << lemma << '\t' << text::join(proposals, ", ") << '\n';
  }
  return os.str();
}

SynonymResource synonyms_from_synsets(const SynsetGraph& graph, const std::string& name) {
  SynonymResource resource{name, {}};
  for (const auto& [id, synset] : graph.synsets()) {
    for (const auto& member : synset.members) {
      for (const auto& other : synset.members) {
        if (other != member) resource.proposals[member].insert(other);
      }
    }
  }
  return resource;
}

// ---------------------------------------------------------------------------
// Synset graph

void validate_graph(const std::vector<Synset>& synsets, const std::vector<SynsetEdge>& edges,
                    Diagnostics& diagnostics, const std::vector<std::size_t>& synset_lines,
                    const std::vector<std::size_t>& edge_lines) {
  auto synset_line = [&](std::size_t i) { return i < synset_lines.size() ? synset_lines[i] : 0; };
  auto edge_line = [&](std::size_t i) { return i < edge_lines.size() ? edge_lines[i] : 0; };

  std::map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < synsets.size(); ++i) {
    const Synset& s = synsets[i];
    if (s.id.empty()) diagnostics.error(synset_line(i), "empty synset id");
    if (s.members.empty()) diagnostics.error(synset_line(i), "synset '" + s.id + "' has no members");
    for (const auto& m : s.members) {
      if (m.empty()) diagnostics.error(synset_line(i), "empty member in synset '" + s.id + "'");
    }
    auto [it, inserted] = ids.emplace(s.id, synset_line(i));
    if (!inserted) {
      diagnostics.error(synset_line(i), "duplicate synset id '" + s.id + "' (first defined on line " +
                                            std::to_string(it->second) + ")");
    }
  }

  // Child -> parents along hypernymy, whichever direction the edge was written in.
  std::map<std::string, std::set<std::string>> parents;
  std::map<std::pair<std::string, std::string>, std::size_t> hyper_line;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const SynsetEdge& e = edges[i];
    bool dangling = false;
    for (const std::string* end : {&e.from, &e.to}) {
      if (!ids.count(*end)) {
        diagnostics.error(edge_line(i), "edge endpoint '" + *end + "' is not a defined synset");
        dangling = true;
      }
    }
    if (dangling) continue;
    if (e.relation == TaxonomyRelation::hypernym) {
      parents[e.from].insert(e.to);
      hyper_line.emplace(std::make_pair(e.from, e.to), edge_line(i));
    } else if (e.relation == TaxonomyRelation::hyponym) {
      parents[e.to].insert(e.from);
      hyper_line.emplace(std::make_pair(e.to, e.from), edge_line(i));
    }
  }

  // Iterative DFS; every back edge closes a cycle.
  enum class Mark { unseen, active, done };
  std::map<std::string, Mark> mark;
  std::set<std::vector<std::string>> reported;
  for (const auto& [root, unused] : parents) {
    if (mark[root] != Mark::unseen) continue;
    struct Frame {
      std::string node;
      std::vector<std::string> next;
      std::size_t index = 0;
    };
    std::vector<Frame> stack;
    auto push = [&](const std::string& node) {
      mark[node] = Mark::active;
      const auto it = parents.find(node);
      std::vector<std::string> next;
      if (it != parents.end()) next.assign(it->second.begin(), it->second.end());
      stack.push_back({node, std::move(next), 0});
    };
    push(root);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.index == top.next.size()) {
        mark[top.node] = Mark::done;
        stack.pop_back();
        continue;
      }
      const std::string child = top.next[top.index++];
      const Mark m = mark[child];
      if (m == Mark::unseen) {
        push(child);
      } else if (m == Mark::active) {
        std::vector<std::string> cycle;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.node == child; });
        for (; it != stack.end(); ++it) cycle.push_back(it->node);
        std::vector<std::string> key = cycle;
        std::sort(key.begin(), key.end());
        if (reported.insert(key).second) {
          std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
          const std::size_t line = hyper_line[{stack.back().node, child}];
          diagnostics.error(line, "hypernym cycle among {" + text::join(key, ",") + "}: " +
                                      text::join(cycle, " -> ") + " -> " + cycle.front());
        }
      }
    }
  }
}

SynsetGraph::SynsetGraph(std::vector<Synset> synsets, std::vector<SynsetEdge> edges) {
  Diagnostics diagnostics("synsets");
  validate_graph(synsets, edges, diagnostics);
  if (diagnostics.has_errors()) throw ValidationError(diagnostics.all());
  for (auto& s : synsets) {
    for (const auto& m : s.members) membership_[m].push_back(s.id);
    synsets_.emplace(s.id, std::move(s));
  }
  for (auto& ids : membership_ | std::views::values) std::sort(ids.begin(), ids.end());
  for (const auto& e : edges) {
    edges_.insert(e);
    edges_.insert({e.to, inverse(e.relation), e.from});
  }
}

const Synset* SynsetGraph::find(const std::string& id) const {
  const auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

std::vector<std::string> SynsetGraph::synsets_containing(const std::string& lemma) const {
  const auto it = membership_.find(lemma);
  if (it == membership_.end()) return {};
  return it->second;
}

std::vector<std::string> SynsetGraph::neighbors(const std::string& id, TaxonomyRelation relation) const {
  std::vector<std::string> out;
  for (auto it = edges_.lower_bound({id, relation, std::string{}});
       it != edges_.end() && it->from == id && it->relation == relation; ++it) {
    out.push_back(it->to);
  }
  return out;
}

SynsetGraph parse_synset_resource(std::istream& in, const std::string& source, std::vector<Diagnostic>* warnings) {
  Diagnostics diagnostics(source);
  detail::LineReader reader(in, diagnostics);
  std::vector<Synset> synsets;
  std::vector<std::size_t> synset_lines;
  std::vector<SynsetEdge> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t line_no = 0;
  std::string line;
  while (reader.next(line_no, line)) {
    if (line.starts_with("#!")) {
      diagnostics.error(line_no, "synset resources take no header lines");
      continue;
    }
    const auto fields = text::split(line, '\t');
    const std::string kind(text::trim(fields[0]));
    if (kind == "S") {
      if (fields.size() != 3) {
        diagnostics.error(line_no, "synset record needs 3 tab-separated fields, found " + std::to_string(fields.size()));
        continue;
      }
      Synset s{field(fields[1]), {}};
      if (s.id.empty() || text::has_whitespace(s.id)) {
        diagnostics.error(line_no, "synset id must be a non-empty token");
        continue;
      }
      bool ok = true;
      for (auto item : text::split(fields[2], ',')) {
        std::string member = text::nfc(text::squeeze_spaces(item));
        if (member.empty()) {
          diagnostics.error(line_no, "empty member in synset '" + s.id + "'");
          ok = false;
          continue;
        }
        s.members.insert(std::move(member));
      }
      if (!ok) continue;
      synsets.push_back(std::move(s));
      synset_lines.push_back(line_no);
    } else if (kind == "E") {
      if (fields.size() != 4) {
        diagnostics.error(line_no, "edge record needs 4 tab-separated fields, found " + std::to_string(fields.size()));
        continue;
      }
      const auto relation = parse_taxonomy_relation(fields[2]);
      if (!relation) {
        diagnostics.error(line_no, "unknown taxonomy relation '" + std::string(text::trim(fields[2])) + "'");
        continue;
      }
      SynsetEdge e{field(fields[1]), *relation, field(fields[3])};
      if (e.from.empty() || e.to.empty()) {
        diagnostics.error(line_no, "edge with empty endpoint");
        continue;
      }
      edges.push_back(std::move(e));
      edge_lines.push_back(line_no);
    } else {
      diagnostics.error(line_no, "unknown record type '" + kind + "' (expected S or E)");
    }
  }

  validate_graph(synsets, edges, diagnostics, synset_lines, edge_lines);
  sink(diagnostics, warnings);
  return SynsetGraph(std::move(synsets), std::move(edges));
}

SynsetGraph parse_synset_resource(std::string_view content, const std::string& source,
                                  std::vector<Diagnostic>* warnings) {
  return parse_string(content, [&](std::istream& in) { return parse_synset_resource(in, source, warnings); });
}

std::string serialize_synsets(const SynsetGraph& graph) {
  std::ostringstream os;
  for (const auto& [id, synset] : graph.synsets()) {
    os << "S\t" << id << '\t' << text::join(synset.members, ", ") << '\n';
  }
  // Only one direction per pair; the reader restores inverses.
  for (const auto& e : graph.edges()) {
    if (e.relation == TaxonomyRelation::hypernym || e.relation == TaxonomyRelation::meronym) {
      os << "E\t" << e.from << '\t' << to_string(e.relation) << '\t' << e.to << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Wordlist

std::set<std::string> parse_wordlist(std::istream& in, const std::string& source, std::vector<Diagnostic>* warnings) {
  Diagnostics diagnostics(source);
  detail::LineReader reader(in, diagnostics);
  std::set<std::string> words;
  std::size_t line_no = 0;
  std::string line;
  while (reader.next(line_no, line)) {
    if (line.starts_with("#!")) {
      diagnostics.error(line_no, "wordlists take no header lines");
      continue;
    }
    std::string word = field(line);
    if (text::has_whitespace(word)) {
      diagnostics.error(line_no, "wordlist entries must be single words");
      continue;
    }
    if (!words.insert(std::move(word)).second) diagnostics.warning(line_no, "duplicate word");
  }
  sink(diagnostics, warnings);
  return words;
}

std::set<std::string> parse_wordlist(std::string_view content, const std::string& source,
                                     std::vector<Diagnostic>* warnings) {
  return parse_string(content, [&](std::istream& in) { return parse_wordlist(in, source, warnings); });
}

}  // namespace lexmerge
