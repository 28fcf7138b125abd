#pragma once

#include <stdexcept>
#include <string>

namespace twoseg {

/// Malformed input text: bad JSON, wrong field types, unknown kinds.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input whose tables violate the declared structure.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. truncation too small).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class CompositionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace twoseg
