#pragma once

#include <string>
#include <vector>

#include "lexmerge/ingest.hpp"
#include "lexmerge/lexicon.hpp"
#include "lexmerge/merged.hpp"

namespace lexmerge::testing {

std::string fixture_path(const std::string& relative);
std::string read_fixture(const std::string& relative);

/// bundle/reference.lex
ReferenceLexicon sample_lexicon();
/// bailly.syn, memodata.syn
std::vector<SynonymResource> sample_resources();
/// bundle/wordnet.wn
SynsetGraph sample_graph();
std::set<std::string> sample_wordlist();
/// Inputs of the sample bundle as the CLI assembles them.
MergeInputs sample_inputs();

SenseEntry make_sense(std::string lemma, std::string pos, int id, std::string domain, std::string cls);

/// Lines of the sections in `merged_text` whose records belong to one of
/// `keys` (`lemma<TAB>pos<TAB>sense_id`), each section introduced by its
/// marker.
std::string select_records(const std::string& merged_text, const std::vector<std::string>& sections,
                           const std::vector<SenseKey>& keys);

}  // namespace lexmerge::testing
