#pragma once

#include <stdexcept>
#include <string>

namespace sagbi_forge {

/// Exponent vectors, weights or tables of mismatched length.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs a nonzero polynomial received zero.
class EmptyInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside the documented domain (e.g. a < 2 for K_{a,b}).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnitIdealError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class StrategyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A time or degree budget ran out before the computation finished. The
/// partial state is discarded; no incorrect answer is ever returned.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sagbi_forge
