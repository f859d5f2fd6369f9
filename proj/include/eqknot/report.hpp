#pragma once

// Rendering of results as JSON (stable field names) and as plain text.
// Rationals and polynomials are serialized as strings in the textual
// grammar so that values round-trip exactly.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "eqknot/obstruction.hpp"

namespace eqknot {

using Json = nlohmann::ordered_json;

Json to_json(const QuadraticCertificate& c);
Json to_json(const GenusBound& g, const QuadraticCertificate& c);
Json to_json(const SliceReport& r);
Json to_json(const AmphichiralReport& r);
Json to_json(const ValidationReport& r);
Json to_json(const TorsionMatrix& gram);

std::string to_text(const QuadraticCertificate& c);
std::string to_text(const GenusBound& g, const QuadraticCertificate& c);
std::string to_text(const SliceReport& r);
std::string to_text(const AmphichiralReport& r);
std::string to_text(const ValidationReport& r);

}  // namespace eqknot
