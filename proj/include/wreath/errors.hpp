#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreath {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands belong to wreath products over different lamp groups.
class SpecMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: group spec strings, table files, element words.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A multiplication table failed one of the group laws.
class TableAxiomError : public InputError {
 public:
  TableAxiomError(std::string law, const std::string& detail)
      : InputError(law + " law violated: " + detail), law_(std::move(law)) {}
  const std::string& law() const { return law_; }

 private:
  std::string law_;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity contradicts a statement that must hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An element or work budget was exhausted. `last_complete_radius` is the
/// largest radius whose computation finished inside the budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t last_complete_radius)
      : Error(what), last_complete_radius_(last_complete_radius) {}
  std::size_t last_complete_radius() const { return last_complete_radius_; }

 private:
  std::size_t last_complete_radius_;
};

}  // namespace wreath
