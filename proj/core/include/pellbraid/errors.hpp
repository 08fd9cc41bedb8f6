#pragma once

#include <stdexcept>
#include <string>

namespace pellbraid {

/// An exact division inside a closed form came out inexact, or two routes to
/// the same value disagreed. Signals a broken generator, not a bad query.
class InternalInconsistencyError : public std::logic_error {
 public:
  explicit InternalInconsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

/// The (kind, m) pair has no closed form in the theory; the caller should
/// fall back to the brute-force oracle.
class UnsupportedQueryError : public std::invalid_argument {
 public:
  explicit UnsupportedQueryError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace pellbraid
