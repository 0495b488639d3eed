// Text form of polynomials.
//
// Grammar:   expr   := sign? term (('+'|'-') term)*
//            term   := (coeff | factor) ('*'? factor)*
//            factor := ident ('^' uint)?
//            coeff  := uint ('/' uint)?        e.g. 3, 2/5
//            ident  := letter (letter|digit)*
// Whitespace is insignificant. Multiplication may be implicit between the
// coefficient and a factor and between factors ("2z1^3", "z1 z2"); note that
// "z1z2" lexes as a single identifier. The default variable order is first
// appearance; pass an explicit order to pin it (unlisted identifiers are
// rejected).
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irredpoly/poly.hpp"

namespace irredpoly {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position + 1)),
          position_(position) {}
    size_t position() const { return position_; }  // 0-based offset into the input

private:
    size_t position_;
};

struct ParsedPolynomial {
    Polynomial poly;
    std::vector<std::string> variables;  // index i names variable i
};

ParsedPolynomial parse_polynomial(const std::string& text,
                                  const std::optional<std::vector<std::string>>& variable_order =
                                      std::nullopt);

}  // namespace irredpoly
