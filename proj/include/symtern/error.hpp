#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtern {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown taxon identifier.
class LookupError : public Error {
 public:
  explicit LookupError(const std::string& taxon)
      : Error("unknown taxon '" + taxon + "'"), taxon_(taxon) {}
  const std::string& taxon() const noexcept { return taxon_; }

 private:
  std::string taxon_;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the domain of an operation (repeated taxa, the empty
// symbol where a member of the alphabet is required, mismatched taxa sets).
class DomainError : public Error {
 public:
  using Error::Error;
};

class CompletenessError : public Error {
 public:
  CompletenessError(const std::string& what, std::vector<std::vector<std::string>> missing)
      : Error(what), missing_(std::move(missing)) {}
  const std::vector<std::vector<std::string>>& missing() const noexcept { return missing_; }

 private:
  std::vector<std::vector<std::string>> missing_;
};

class ConflictError : public Error {
 public:
  using Error::Error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `position` is a byte offset for Newick and a line
// number for the triple table.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Structurally invalid phylogenetic tree (cycle, disconnected, degree 2, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Interior vertex without a color.
class ColorError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A ternary map that does not come from any discriminating dated tree.
// `witness` names the taxa that exhibit the failure.
class NotAMetricError : public Error {
 public:
  NotAMetricError(const std::string& what, std::vector<std::string> witness)
      : Error(what + describe(witness)), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const std::vector<std::string>& w) {
    if (w.empty()) return {};
    std::string s = " [witness:";
    for (const auto& t : w) s += " " + t;
    return s + "]";
  }
  std::vector<std::string> witness_;
};

}  // namespace symtern
