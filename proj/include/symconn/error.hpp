#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symconn {

/// Malformed textual input (scalar literals, model files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Dimension, rank or variance mismatch between operands.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation needs parameter-free (rational) data, or two different
/// formal parameters met in one expression.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input data violates a mathematical precondition (torsion, ∇Ω, Jacobi,
/// degenerate Ω, ...). The message names the violated identity.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent routes to the same quantity disagreed. Signals a bug in
/// the sign or index conventions; must never fire.
class ConventionFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symconn
