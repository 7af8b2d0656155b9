#include "lexmerge/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lexmerge/enrichment.hpp"
#include "lexmerge/ingest.hpp"
#include "lexmerge/merged.hpp"
#include "lexmerge/text.hpp"

namespace lexmerge::cli {

namespace fs = std::filesystem;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

void print(std::ostream& os, const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) os << format(d) << '\n';
}

std::string resource_name(const std::string& path) { return fs::path(path).stem().string(); }

bool valid_resource_name(const std::string& name) {
  return !name.empty() && name.find_first_of(",\t\n /") == std::string::npos;
}

std::optional<std::set<TaxonomyRelation>> parse_relations(const std::string& list) {
  std::set<TaxonomyRelation> out;
  for (auto item : text::split(list, ',')) {
    const auto r = parse_taxonomy_relation(item);
    if (!r) return std::nullopt;
    out.insert(*r);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct MergeArgs {
  std::string reference;
  std::vector<std::string> synonyms;
  std::string synsets;
  std::string wordlist;
  std::string output;
  std::string alignment_source;
  std::string majority = "strict";
  std::size_t radical_min = 3;
  std::size_t stem_strip = 2;
};

int cmd_merge(const MergeArgs& args, std::ostream& out, std::ostream& err) {
  const std::string diagnostics_path = args.output + ".diagnostics.txt";
  std::vector<Diagnostic> all;
  std::vector<Diagnostic> warnings;

  auto fail = [&](const std::vector<Diagnostic>& diagnostics) {
    all.insert(all.end(), diagnostics.begin(), diagnostics.end());
    print(err, all);
    std::ostringstream os;
    print(os, all);
    try {
      write_file(diagnostics_path, os.str());
    } catch (const IoError& e) {
      err << "lexmerge: " << e.what() << '\n';
    }
    return kValidationFailure;
  };

  if (args.majority != "strict") {
    err << "lexmerge: --majority supports only 'strict'\n";
    return kValidationFailure;
  }

  MergeInputs inputs;
  inputs.derivation.radical_min = args.radical_min;
  inputs.derivation.max_stem_strip = args.stem_strip;
  std::set<std::string> names;
  bool invalid = false;

  auto guarded = [&](auto&& parse) {
    try {
      parse();
    } catch (const ValidationError& e) {
      all.insert(all.end(), e.diagnostics().begin(), e.diagnostics().end());
      invalid = true;
    }
  };

  guarded([&] { inputs.reference = parse_reference(std::string_view(read_file(args.reference)), args.reference, &warnings); });
  for (const auto& path : args.synonyms) {
    const std::string name = resource_name(path);
    if (!valid_resource_name(name) || !names.insert(name).second) {
      all.push_back({Severity::error, path, 0, "resource name '" + name + "' is invalid or already used"});
      invalid = true;
      continue;
    }
    guarded([&] {
      inputs.synonym_resources.push_back(parse_synonym_resource(std::string_view(read_file(path)), name, &warnings));
    });
  }
  if (!args.synsets.empty()) {
    inputs.synset_source = resource_name(args.synsets);
    if (!valid_resource_name(inputs.synset_source) ||
        (args.alignment_source.empty() && names.count(inputs.synset_source))) {
      all.push_back({Severity::error, args.synsets, 0,
                     "resource name '" + inputs.synset_source + "' is invalid or already used"});
      invalid = true;
    }
    guarded([&] { inputs.synsets = parse_synset_resource(std::string_view(read_file(args.synsets)), args.synsets, &warnings); });
  }
  if (!args.alignment_source.empty()) {
    if (!names.count(args.alignment_source)) {
      all.push_back({Severity::error, "", 0, "--alignment-source '" + args.alignment_source +
                                                 "' does not name a synonym resource"});
      invalid = true;
    }
    inputs.alignment_source = args.alignment_source;
  }
  if (!args.wordlist.empty()) {
    guarded([&] { inputs.wordlist = parse_wordlist(std::string_view(read_file(args.wordlist)), args.wordlist, &warnings); });
  }
  if (invalid) return fail(warnings);

  inputs.input_diagnostics = warnings;
  const MergedLexicon merged = build_merged(inputs);

  write_file(args.output, serialize_merged(merged));
  write_file(args.output + ".synonyms.tsv", synonym_log(merged));
  write_file(args.output + ".derivatives.tsv", derivative_log(merged));
  write_file(args.output + ".alignments.tsv", alignment_log(merged));
  write_file(args.output + ".rules.tsv", rule_file(merged));
  const std::string report = format_report(compute_report(merged));
  write_file(args.output + ".report.txt", report);
  print(err, merged.diagnostics);
  out << report;
  return kOk;
}

// ---------------------------------------------------------------------------

struct EnrichArgs {
  std::string merged;
  std::string utterances;
  bool include_multiword = true;
  int depth = 1;
  std::string relations = "hypernym,hyponym";
};

int cmd_enrich(const EnrichArgs& args, std::ostream& out, std::ostream& err) {
  EnrichmentOptions options;
  options.include_multiword = args.include_multiword;
  options.depth = args.depth;
  const auto relations = parse_relations(args.relations);
  if (!relations || args.depth <= 0) {
    err << "lexmerge: --relations takes hypernym,hyponym,meronym,holonym and --taxonomy-depth must be positive\n";
    return kValidationFailure;
  }
  options.taxonomy_relations = *relations;

  const MergedLexicon merged = parse_merged(std::string_view(read_file(args.merged)), args.merged);
  std::vector<Diagnostic> warnings;
  const auto utterances = parse_utterances(std::string_view(read_file(args.utterances)), args.utterances, &warnings);
  print(err, warnings);
  for (std::size_t i = 0; i < utterances.size(); ++i) {
    for (const auto& set : enrich_utterance(merged, utterances[i], options)) {
      out << format_enrichment(i + 1, set) << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

std::string detect_format(const std::string& path) {
  const std::string ext = text::ascii_lower(fs::path(path).extension().string());
  if (ext == ".lex") return "lex";
  if (ext == ".syn") return "syn";
  if (ext == ".wn") return "wn";
  if (ext == ".utt") return "utt";
  if (ext == ".lexm" || ext == ".merged") return "merged";
  return "words";
}

int cmd_validate(const std::string& path, std::string format, std::ostream& out) {
  if (format == "auto") format = detect_format(path);
  const std::string content = read_file(path);
  std::vector<Diagnostic> warnings;
  try {
    if (format == "lex") parse_reference(std::string_view(content), path, &warnings);
    else if (format == "syn") parse_synonym_resource(std::string_view(content), resource_name(path), &warnings);
    else if (format == "wn") parse_synset_resource(std::string_view(content), path, &warnings);
    else if (format == "utt") parse_utterances(std::string_view(content), path, &warnings);
    else if (format == "merged") parse_merged(std::string_view(content), path);
    else parse_wordlist(std::string_view(content), path, &warnings);
  } catch (const ValidationError& e) {
    print(out, e.diagnostics());
    return kValidationFailure;
  }
  print(out, warnings);
  return kOk;
}

int cmd_report(const std::string& path, std::ostream& out) {
  const MergedLexicon merged = parse_merged(std::string_view(read_file(path)), path);
  out << format_report(compute_report(merged));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Merge lexical resources onto the senses of a reference lexicon", "lexmerge"};
  app.require_subcommand(1);

  MergeArgs merge;
  auto* merge_cmd = app.add_subcommand("merge", "Merge resources into a sense-indexed lexicon");
  merge_cmd->add_option("--reference", merge.reference, "Reference lexicon (.lex)")->required();
  merge_cmd->add_option("--synonyms", merge.synonyms, "Synonym resource (.syn); repeatable");
  merge_cmd->add_option("--synsets", merge.synsets, "Synset resource (.wn)");
  merge_cmd->add_option("--wordlist", merge.wordlist, "Wordlist for derivative candidates");
  merge_cmd->add_option("--output", merge.output, "Merged lexicon to write")->required();
  merge_cmd->add_option("--radical-min", merge.radical_min, "Minimum radical length in characters")
      ->capture_default_str();
  merge_cmd->add_option("--stem-strip", merge.stem_strip, "Trailing characters a radical may drop from the lemma")
      ->capture_default_str();
  merge_cmd->add_option("--majority", merge.majority, "Majority rule for synset alignment")->capture_default_str();
  merge_cmd->add_option("--alignment-source", merge.alignment_source,
                        "Synonym resource whose accepted synonyms drive alignment (default: the synset file)");

  EnrichArgs enrich_args;
  auto* enrich_cmd = app.add_subcommand("enrich", "Disambiguate utterances and print sense-restricted enrichments");
  enrich_cmd->add_option("--merged", enrich_args.merged, "Merged lexicon")->required();
  enrich_cmd->add_option("--utterances", enrich_args.utterances, "Utterance file")->required();
  enrich_cmd->add_flag("--include-multiword,!--no-include-multiword", enrich_args.include_multiword,
                       "Include unfiltered multiword synonyms (default on)");
  enrich_cmd->add_option("--taxonomy-depth", enrich_args.depth, "Taxonomy walk depth")->capture_default_str();
  enrich_cmd->add_option("--relations", enrich_args.relations, "Taxonomy relations to follow")->capture_default_str();

  std::string validate_path;
  std::string validate_format = "auto";
  auto* validate_cmd = app.add_subcommand("validate", "Check a resource file and list its diagnostics");
  validate_cmd->add_option("path", validate_path, "File to check")->required();
  validate_cmd->add_option("--format", validate_format, "lex, syn, wn, words, utt, merged or auto")
      ->check(CLI::IsMember({"auto", "lex", "syn", "wn", "words", "utt", "merged"}))
      ->capture_default_str();

  std::string report_path;
  auto* report_cmd = app.add_subcommand("report", "Summarize a merged lexicon");
  report_cmd->add_option("path", report_path, "Merged lexicon")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationFailure;
  }

  try {
    if (*merge_cmd) return cmd_merge(merge, out, err);
    if (*enrich_cmd) return cmd_enrich(enrich_args, out, err);
    if (*validate_cmd) return cmd_validate(validate_path, validate_format, out);
    if (*report_cmd) return cmd_report(report_path, out);
  } catch (const IoError& e) {
    err << "lexmerge: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ValidationError& e) {
    print(err, e.diagnostics());
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "lexmerge: " << e.what() << '\n';
    return kValidationFailure;
  }
  return kValidationFailure;
}

}  // namespace lexmerge::cli
