#pragma once

#include <stdexcept>
#include <string>

namespace modlab {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A table failed one of the algebraic axioms; the message names the axiom
/// and carries a witness tuple.
class AxiomViolation : public Error {
public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error("axiom violated: " + axiom + " (witness " + witness + ")"),
        axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

private:
  std::string axiom_;
  std::string witness_;
};

class CapExceeded : public Error {
public:
  using Error::Error;
};

/// Bad input to an operation: ring mismatch, improper ideal, x = 0 where a
/// nonzero element is required, and so on.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Two routes that must agree did not. Always indicates a bug.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

} // namespace modlab
