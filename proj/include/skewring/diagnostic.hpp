#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skewring {

/// What a verifier found wrong: the axiom that failed, a sentence, and the
/// elements/points that witness the failure.
struct Diagnostic {
  std::string axiom;
  std::string message;
  std::vector<std::string> witness;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Diagnostic d) : std::runtime_error(d.axiom + ": " + d.message), diag_(std::move(d)) {}
  Diagnostic const& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

/// Input could not be read at all (bad JSON, missing fields, unknown labels).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size cap was hit where the caller asked for an exhaustive answer.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skewring
