#include "nestedasp/errors.hpp"

namespace nasp {

SyntaxError::SyntaxError(const std::string& message, SourceSpan span)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span),
      detail_(message) {}

}  // namespace nasp
