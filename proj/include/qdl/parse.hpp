#pragma once

#include <string>
#include <vector>

#include "qdl/poly.hpp"

namespace qdl {

// Syntax failure with position info; carried inside Error messages for the
// CLI and exposed structurally for the JSON error record.
struct ParseError {
    int line = 1;
    int column = 1;
    std::string message;
    std::vector<std::string> expected;
};

class parse_error : public Error {
public:
    parse_error(ParseError info)
        : Error(ErrorKind::Usage,
                "syntax error at " + std::to_string(info.line) + ":" +
                    std::to_string(info.column) + ": " + info.message),
          info_(std::move(info)) {}
    const ParseError& info() const { return info_; }

private:
    ParseError info_;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := base ('^' uint)?
//   base   := rational | 'i' | 'x' | 'y' | 't' | '(' expr ')' | '-' factor
// Rational literals are "p" or "p/q"; juxtaposition multiplies; exponents
// are capped at 64. The result is expanded to a canonical MPoly.
MPoly parse_poly(const std::string& text);

// Canonical rendering lives on MPoly::to_string(); parse(to_string(p)) == p.

}  // namespace qdl
