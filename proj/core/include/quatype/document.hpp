#pragma once

#include <string>
#include <string_view>

#include "quatype/multivector.hpp"

namespace quatype {

// JSON interchange form of a multivector:
//
//   { "p": 3, "q": 0, "field": "R",
//     "terms": [ { "blade": [1, 2], "re": -2.0, "im": 0.0 }, ... ] }
//
// Blades are strictly increasing 1-based index lists ([] is the scalar
// blade). Numbers are written in shortest round-trip form, so
// parse_document(to_document(M)) == M bit for bit.
std::string to_document(const Multivector& u, int indent = -1);

// Throws ParseError on malformed JSON or schema violations.
Multivector parse_document(std::string_view json);

}  // namespace quatype
