#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace upb {

// Malformed matrix text or an inconsistent in-memory grid.
class ParseError : public std::runtime_error {
public:
  enum class Kind { MalformedEntry, RaggedRow, FamilyLeak, NotOrthogonal };

  ParseError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An analysis operation was called on a matrix whose row-pair orthogonality
// has not been established.
class UnvalidatedMatrix : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class ShapeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class TooLarge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace upb
