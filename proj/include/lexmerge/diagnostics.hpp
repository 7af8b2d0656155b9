#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexmerge {

enum class Severity { warning, error };

/// One problem found while reading a resource. `line` is 1-based; 0 means
/// the problem concerns the file as a whole.
struct Diagnostic {
  Severity severity = Severity::error;
  std::string source;
  std::size_t line = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// `source:line: severity: message`
std::string format(const Diagnostic& d);

class Diagnostics {
 public:
  explicit Diagnostics(std::string source = {}) : source_(std::move(source)) {}

  void error(std::size_t line, std::string message);
  void warning(std::size_t line, std::string message);

  bool has_errors() const;
  const std::vector<Diagnostic>& all() const { return items_; }
  std::vector<Diagnostic> errors() const;
  std::vector<Diagnostic> warnings() const;
  const std::string& source() const { return source_; }

  void append(const std::vector<Diagnostic>& more);

 private:
  std::string source_;
  std::vector<Diagnostic> items_;
};

/// Raised when a resource fails validation. Carries every diagnostic found
/// in the file, warnings included.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Lookup of a (lemma, sense) that does not exist.
class UnknownSenseError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace lexmerge
