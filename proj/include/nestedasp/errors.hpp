#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nasp {

// Location of a token in parser input. Lines and columns are 1-based.
struct SourceSpan {
  std::size_t byteStart = 0;
  std::size_t byteEnd = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourceSpan span);
  const SourceSpan& span() const noexcept { return span_; }
  // Message without the location prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourceSpan span_;
  std::string detail_;
};

// A caller violated an operation's precondition (wrong program class,
// atom outside the signature, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Enumeration cap, prover budget or transformation size guard exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed, or a synthesized certificate failed
// verification. Never expected; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nasp
