#pragma once

#include <stdexcept>
#include <string>

namespace sbsim {

// Base class for every error thrown by this library.
class SbsimError : public std::runtime_error {
public:
  explicit SbsimError(const std::string& what) : std::runtime_error(what) {}
};

// Text could not be parsed as an instance or digraph file.
// line() is 1-based; 0 means the error is not tied to a single line.
class ParseError : public SbsimError {
public:
  ParseError(int line, const std::string& reason)
      : SbsimError("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Graph construction violated an invariant (ids, simplicity, connectivity).
class InvalidGraphError : public SbsimError {
public:
  using SbsimError::SbsimError;
};

// An instance request cannot be satisfied (missing components, infeasible flags).
class InvalidInstanceError : public SbsimError {
public:
  using SbsimError::SbsimError;
};

// runExecution input assignment does not cover the node set.
class InputMismatchError : public SbsimError {
public:
  using SbsimError::SbsimError;
};

// The round cap was reached with unhalted nodes.
class NonHaltingError : public SbsimError {
public:
  NonHaltingError(long rounds, int unhalted)
      : SbsimError("execution did not halt within " + std::to_string(rounds) + " rounds (" +
                   std::to_string(unhalted) + " nodes still running)"),
        rounds_(rounds), unhalted_(unhalted) {}
  long rounds() const { return rounds_; }
  int unhalted() const { return unhalted_; }

private:
  long rounds_;
  int unhalted_;
};

// A consistent cycle orientation was requested for a length not divisible by 3.
class LengthNotOrientableError : public SbsimError {
public:
  using SbsimError::SbsimError;
};

// A pseudotree shape is incompatible with the requested node count.
class ShapeInfeasibleError : public SbsimError {
public:
  using SbsimError::SbsimError;
};

// The gadget transform was applied to a digraph with total degree above 3.
class DegreeViolationError : public SbsimError {
public:
  using SbsimError::SbsimError;
};

// bfsLeafParity was applied to a graph without degree-1 nodes.
class NoLeafError : public SbsimError {
public:
  using SbsimError::SbsimError;
};

// rewritePhase was applied to a configuration that is not locally valid.
class MalformedConfigurationError : public SbsimError {
public:
  using SbsimError::SbsimError;
};

}  // namespace sbsim
