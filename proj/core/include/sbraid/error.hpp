#pragma once

#include <stdexcept>
#include <string>

namespace sbraid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Preset parameters or suite bounds outside their admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed word or script text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A letter that is not in the alphabet an operation was asked to use.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Index assignment that violates a relation family's side condition.
class SideConditionError : public Error {
 public:
  using Error::Error;
};

// A rewrite step whose pattern is not found at the stated position.
class MatchError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbraid
