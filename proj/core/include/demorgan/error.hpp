#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace demorgan {

enum class ErrorKind {
  // categories
  DuplicateName,
  DanglingReference,
  NotComposable,
  IllTypedComposite,
  ConflictingComposite,
  MissingComposite,
  BrokenIdentity,
  BrokenAssociativity,
  UnknownObject,
  UnknownArrow,
  // sieves and topologies
  WrongCodomain,
  BaseMismatch,
  NotASieve,
  CategoryMismatch,
  NotMaximalClosed,
  NotStable,
  NotTransitive,
  NotSupersetClosed,
  EmptyReduction,
  // lattices and frames
  NotAPartialOrder,
  NotALattice,
  NotResiduated,
  UnknownElement,
  NotInflationary,
  NotIdempotent,
  NotMeetPreserving,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a structural law. The message names the offending
/// objects, arrows, sieves or elements.
class ValidationError : public Error {
 public:
  ValidationError(ErrorKind kind, const std::string& detail)
      : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// An enumeration would exceed a configured size limit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace demorgan
