#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

/// Malformed rational or polynomial text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed certificate disagrees with the values it is meant to reproduce,
/// or a search for a counterexample came back empty.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hlab
