#pragma once

#include <string>

#include "taut/weyl.hpp"

namespace taut {

/// Syntax/um-resolved-name error with 1-based position info.
struct ParseError : error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line, column;
};

/// Parses the shared expression grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := atom ('*' atom)*
///   atom   := coeff | factor
///   factor := (var | dvar) ('^' nat)?
///   coeff  := int ('/' posint)?
/// Variable names come from the context; partials are written d<suffix>
/// (e.g. d11 for x11) or d<name>.
WeylElement parse_operator(const std::string& text, const WeylContextPtr& ctx);

/// Same grammar restricted to commutative polynomials (no partials).
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx);

}  // namespace taut
