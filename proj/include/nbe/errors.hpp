#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace nbe {

/// Byte offsets [start, end) into a source string.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::optional<SourceSpan> span = std::nullopt)
      : std::runtime_error(what), span_(span) {}

  const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  std::optional<SourceSpan> span_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class ScopeError : public Error {
 public:
  using Error::Error;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class UnboundName : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotBaseType : public Error {
 public:
  using Error::Error;
};

// A semantic value of the wrong shape reached an operation. Unreachable on
// well-typed input.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotNeutral : public Error {
 public:
  using Error::Error;
};

class DepthLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace nbe
