#ifndef BIDYN_PARSE_HPP
#define BIDYN_PARSE_HPP

#include <string>

#include "bidyn/poly.hpp"

namespace bidyn {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
          line(l), column(c) {}
};

/// Parse a polynomial expression over the named variables.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := int | var | '(' expr ')'
///
/// Implicit multiplication is rejected. Integers are arbitrary size.
PolyQ parse_poly(const std::string& text, VarList vars);

/// render with the same surface syntax parse_poly accepts
std::string render_poly(const PolyQ& f);

} // namespace bidyn

#endif
