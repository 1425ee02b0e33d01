#pragma once

#include <stdexcept>
#include <string>

namespace pgw {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file syntax, structurally invalid presentation, bad
/// arguments. Maps to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(int line, const std::string& reason)
      : InputError("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InvalidPresentation : public InputError {
 public:
  using InputError::InputError;
};

class BadWeight : public InputError {
 public:
  using InputError::InputError;
};

class BadDefinition : public InputError {
 public:
  using InputError::InputError;
};

class ConsistencyViolation : public InputError {
 public:
  ConsistencyViolation(int i, int j, int k, const std::string& what)
      : InputError("consistency check failed for (" + std::to_string(i) + ", " +
                   std::to_string(j) + ", " + std::to_string(k) + "): " + what),
        i_(i), j_(j), k_(k) {}
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int i_, j_, k_;
};

class MissingDefinitions : public InputError {
 public:
  using InputError::InputError;
};

class SizeCap : public Error {
 public:
  using Error::Error;
};

class NotAbelian : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class RelationViolated : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NoEligibleU : public Error {
 public:
  using Error::Error;
};

class CentralizerNotMaximal : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  using Error::Error;
};

/// Outcomes that contradict a proved statement given correct arithmetic.
/// Never swallowed; the CLI maps them to exit code 3.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

class CertificationFailed : public InternalContradiction {
 public:
  using InternalContradiction::InternalContradiction;
};

class InnerWitnessFound : public InternalContradiction {
 public:
  using InternalContradiction::InternalContradiction;
};

class Mismatch : public InternalContradiction {
 public:
  using InternalContradiction::InternalContradiction;
};

}  // namespace pgw
