#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quatype/multivector.hpp"

namespace quatype {

// Text form of a multivector:
//
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coef | coef? blade
//   coef  := decimal | decimal 'i' | '(' ['-'] decimal ('+'|'-') decimal 'i' ')'
//   blade := 'e' digit+ | 'e{' idx (',' idx)* '}'
//
// Indices are 1-based and strictly increasing; 'e' digit+ reads one index
// per digit. Decimals have no exponent part ("1e2" is 1 times e2).
// Whitespace between tokens is ignored.
//
// With no explicit field the result is Complex iff some coefficient has a
// nonzero imaginary part. Throws ParseError with the offending offset.
Multivector parse_expression(std::string_view text, const Signature& sig,
                             std::optional<Field> field = std::nullopt);

// Terms ordered by grade, then lexicographically by indices. Real
// coefficients print as shortest round-trip fixed-point decimals with unit
// coefficients omitted; complex ones as "(re+imi)". Zero prints as "0".
std::string format_expression(const Multivector& u);

// Terms sorted by grade, then lexicographically by generator indices.
std::vector<Term> display_order(const Multivector& u);

// Shortest round-trip fixed-point rendering of a finite double.
std::string format_decimal(double value);

}  // namespace quatype
