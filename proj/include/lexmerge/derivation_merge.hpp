#pragma once

// Suffixal derivatives. Candidates are over-generated from a wordlist and
// the suffix inventory, then each one is kept for a sense only when the
// reference entry has an instruction mapping its suffix to that sense.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexmerge/lexicon.hpp"

namespace lexmerge {

/// surface == radical + suffix
struct DerivativeCandidate {
  std::string surface;
  std::string radical;
  std::string suffix;

  friend auto operator<=>(const DerivativeCandidate&, const DerivativeCandidate&) = default;
  friend bool operator==(const DerivativeCandidate&, const DerivativeCandidate&) = default;
};

enum class DerivativeVerdict {
  kept,
  rejected_no_instruction,
  rejected_other_sense,
  rejected_short_radical,
};

std::string_view to_string(DerivativeVerdict verdict);
std::optional<DerivativeVerdict> parse_derivative_verdict(std::string_view text);

struct DerivativeDecision {
  SenseKey target;
  DerivativeCandidate candidate;
  DerivativeVerdict verdict = DerivativeVerdict::rejected_no_instruction;
  /// Present iff verdict == kept.
  std::optional<int> assigned_sense;

  friend bool operator==(const DerivativeDecision&, const DerivativeDecision&) = default;
};

/// Per target sense, sorted by candidate.
using DerivativeDecisions = std::map<SenseKey, std::vector<DerivativeDecision>>;

struct DerivationOptions {
  /// Radicals shorter than this many grapheme clusters are rejected.
  std::size_t radical_min = 3;
  /// A radical may be the lemma minus up to this many trailing characters.
  std::size_t max_stem_strip = 2;
};

/// Every (w, r, f) with w in `wordlist`, f in `suffixes`, w == r + f and r
/// equal to `lemma` with 0..max_stem_strip trailing code points removed.
std::set<DerivativeCandidate> generate_candidates(const std::string& lemma, const std::set<std::string>& wordlist,
                                                  const std::set<std::string>& suffixes,
                                                  std::size_t max_stem_strip = 2);

/// `entry_senses` are the senses of one (lemma, pos). Throws
/// UnknownSenseError if `target_sense` is not among them.
DerivativeDecision filter_derivative(std::span<const SenseEntry> entry_senses, const DerivativeCandidate& candidate,
                                     int target_sense, std::size_t radical_min = 3);

DerivativeDecisions merge_derivatives(const ReferenceLexicon& lexicon, const std::set<std::string>& wordlist,
                                      const DerivationOptions& options = {});

}  // namespace lexmerge
