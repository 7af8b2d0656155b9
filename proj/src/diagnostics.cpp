#include "lexmerge/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace lexmerge {

std::string format(const Diagnostic& d) {
  std::ostringstream os;
  os << (d.source.empty() ? "<input>" : d.source) << ':' << d.line << ": "
     << (d.severity == Severity::error ? "error" : "warning") << ": " << d.message;
  return os.str();
}

void Diagnostics::error(std::size_t line, std::string message) {
  items_.push_back({Severity::error, source_, line, std::move(message)});
}

void Diagnostics::warning(std::size_t line, std::string message) {
  items_.push_back({Severity::warning, source_, line, std::move(message)});
}

bool Diagnostics::has_errors() const {
  return std::any_of(items_.begin(), items_.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::vector<Diagnostic> Diagnostics::errors() const {
  std::vector<Diagnostic> out;
  std::copy_if(items_.begin(), items_.end(), std::back_inserter(out),
               [](const Diagnostic& d) { return d.severity == Severity::error; });
  return out;
}

std::vector<Diagnostic> Diagnostics::warnings() const {
  std::vector<Diagnostic> out;
  std::copy_if(items_.begin(), items_.end(), std::back_inserter(out),
               [](const Diagnostic& d) { return d.severity == Severity::warning; });
  return out;
}

void Diagnostics::append(const std::vector<Diagnostic>& more) {
  items_.insert(items_.end(), more.begin(), more.end());
}

namespace {
std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  const auto n = std::count_if(diagnostics.begin(), diagnostics.end(),
                               [](const Diagnostic& d) { return d.severity == Severity::error; });
  std::ostringstream os;
  os << "validation failed with " << n << " error(s)";
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::error) {
      os << "\n  " << format(d);
    }
  }
  return os.str();
}
}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace lexmerge
