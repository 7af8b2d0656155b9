#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lexmerge/text.hpp"

namespace lexmerge::testing {

std::string fixture_path(const std::string& relative) { return std::string(LEXMERGE_FIXTURES) + "/" + relative; }

std::string read_fixture(const std::string& relative) {
  std::ifstream in(fixture_path(relative), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + relative);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ReferenceLexicon sample_lexicon() { return parse_reference(std::string_view(read_fixture("bundle/reference.lex"))); }

std::vector<SynonymResource> sample_resources() {
  return {parse_synonym_resource(std::string_view(read_fixture("bundle/bailly.syn")), "bailly"),
          parse_synonym_resource(std::string_view(read_fixture("bundle/memodata.syn")), "memodata")};
}

SynsetGraph sample_graph() { return parse_synset_resource(std::string_view(read_fixture("bundle/wordnet.wn"))); }

std::set<std::string> sample_wordlist() { return parse_wordlist(std::string_view(read_fixture("bundle/words.txt"))); }

MergeInputs sample_inputs() {
  MergeInputs inputs;
  inputs.reference = sample_lexicon();
  inputs.synonym_resources = sample_resources();
  inputs.synsets = sample_graph();
  inputs.synset_source = "wordnet";
  inputs.wordlist = sample_wordlist();
  return inputs;
}

SenseEntry make_sense(std::string lemma, std::string pos, int id, std::string domain, std::string cls) {
  SenseEntry s;
  s.lemma = std::move(lemma);
  s.pos = std::move(pos);
  s.sense_id = id;
  s.sense_label = "sense" + std::to_string(id);
  s.features = {std::move(domain), std::move(cls)};
  return s;
}

std::string select_records(const std::string& merged_text, const std::vector<std::string>& sections,
                           const std::vector<SenseKey>& keys) {
  std::map<std::string, std::vector<std::string>> picked;
  std::string current;
  std::istringstream in(merged_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("@")) {
      current = line;
      continue;
    }
    if (std::find(sections.begin(), sections.end(), current) == sections.end()) continue;
    const auto f = text::split(line, '\t');
    if (f.size() < 3) continue;
    // Rules carry the sense id in the fifth column.
    const std::string_view id = current == "@rules" && f.size() > 4 ? f[4] : f[2];
    for (const auto& k : keys) {
      if (f[0] == k.lemma && f[1] == k.pos && id == std::to_string(k.sense_id)) {
        picked[current].push_back(line);
        break;
      }
    }
  }
  std::string out;
  for (const auto& section : sections) {
    out += section + "\n";
    for (const auto& l : picked[section]) out += l + "\n";
  }
  return out;
}

}  // namespace lexmerge::testing
