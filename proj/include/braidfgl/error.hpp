#pragma once

#include <stdexcept>
#include <string>

namespace braidfgl {

// Malformed textual or JSON input. The CLI maps this to a usage error.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition of a library operation does not hold for otherwise
// well-formed input (destabilize on a non-stabilized word, non-flat system
// passed to holonomy, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Resource guard tripped (tensor dimension, Lazard stage ceiling, ...).
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Something that the underlying mathematics says cannot happen did happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace braidfgl
