#ifndef HHV_ERRORS_HPP
#define HHV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhv {

/// Invalid argument to a library operation (bad interval, out-of-range
/// parameter, unknown identifier).
class InvalidArgument : public std::invalid_argument {
public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Syntax error while parsing an expression.  `offset` is the byte offset of
/// the offending token in the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Domain error raised while evaluating an expression (ln of a nonpositive
/// value, division by zero, fractional power of a negative base).  The
/// message names the offending subexpression.
class EvalError : public std::runtime_error {
public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed (e.g. a coefficient integral evaluated to a
/// nonpositive value).  Indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace hhv

#endif
