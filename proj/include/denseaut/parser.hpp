#pragma once

#include <string_view>

#include "denseaut/group.hpp"
#include "denseaut/matrix.hpp"

namespace denseaut {

/// Syntax error; position is a 0-based byte offset into the input.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Integers, p/q, sqrt(N), t, t^k, combined with + - * / and parentheses.
ExactScalar parse_scalar(std::string_view text);
/// "[a, b; c, d]".
ExactMatrix parse_matrix(std::string_view text);
/// "(a, b, ...)" or a bare scalar for dimension one.
Vector parse_vector(std::string_view text);
/// Descriptor DSL, e.g. "Z*1 + Q*sqrt(2)", "Q x R", "image(Q^2, [1, sqrt(2); 0, 1])".
Group parse_group(std::string_view text);

}  // namespace denseaut
