#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lefschetz/polynomial.hpp"

namespace lefschetz::poly {

// Syntax or range error in polynomial text, with the 0-based offset of the
// offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar (whitespace insignificant):
//   poly    := [sign] term { sign term }        sign := '+' | '-'
//   term    := coeff [ '*' factors ] | factors
//   coeff   := integer [ '/' positive-integer ]
//   factors := factor { '*' factor }            factor := var [ '^' positive-integer ]
//   var     := 'x' index | 'x_' index           (index in 0 .. nvars-1)
// parse_operator reads the same grammar with capital 'X'.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);
DiffOperator parse_operator(std::string_view text, std::size_t nvars);

}  // namespace lefschetz::poly
