#pragma once

// JSON views of the library's results. These are the payloads of the CLI
// envelope and are described by schema/dcover.schema.json.

#include "dcover/audit.hpp"
#include "dcover/collisions.hpp"
#include "dcover/cover_invariants.hpp"
#include "dcover/figure.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace dcover {

inline constexpr const char* kVersion = "0.3.1";

/// Integers that fit in 64 bits become JSON numbers, anything larger a
/// decimal string.
nlohmann::json integer_json(const Integer& v);
/// {"num": .., "den": .., "text": "p/q"}
nlohmann::json rational_json(const Rational& r);

nlohmann::json to_json(const DivisorClass& d);
nlohmann::json to_json(const Polarization& p);
nlohmann::json to_json(const CohomologyTable& t);
nlohmann::json to_json(const CoverInvariants& inv);
nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const GeographyPoint& pt);
nlohmann::json to_json(const XiSearch& search);
nlohmann::json to_json(const ExamplesReport& report);

/// {"version", "command", "payload", "warnings"}
nlohmann::json envelope(const std::string& command, nlohmann::json payload,
                        const std::vector<std::string>& warnings);

}  // namespace dcover
