#pragma once

// Text and JSON encodings of QPoly / BiPoly.
//
// Text: ascending exponents, terms "c*q^e" joined by " + " / " - ".
// Unit coefficients are omitted in front of a power of q, "q^0" is the bare
// integer and "q^1" is "q". BiPoly terms append "*t^e" and are ordered by
// (t, q). The parser accepts the same grammar with arbitrary whitespace.
//
// JSON: {"terms": [[e, "c"], ...]} for QPoly and
//       {"terms": [[[qe, te], "c"], ...]} for BiPoly,
// coefficients as decimal strings.

#include <string>
#include <string_view>

#include <json.hpp>

#include "qrr/bipoly.hpp"
#include "qrr/qpoly.hpp"

namespace qrr {

/// Object keys keep insertion order so emitted documents are stable.
using Json = nlohmann::ordered_json;

std::string to_string(const QPoly& p);
std::string to_string(const BiPoly& p);

/// Throws std::invalid_argument on malformed input.
QPoly parse_qpoly(std::string_view text);
BiPoly parse_bipoly(std::string_view text);

Json to_json(const QPoly& p);
Json to_json(const BiPoly& p);

/// Throws std::invalid_argument on schema violations.
QPoly qpoly_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);

}  // namespace qrr
