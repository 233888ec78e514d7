#pragma once

#include "progdisc/rational.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace progdisc {

// All records share one envelope so downstream tooling can dispatch on the
// command field; the docs directory ships the matching schema file.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

// Node for a number whose exact rational value is known: both the fraction
// string and the binary64 it rounds to.
Json rational_node(const Rational& q);

// rational_node when the exact value is available, bare float otherwise.
Json number_node(double value, const std::optional<Rational>& exact);

// Cell rendering used by every CSV emitter: %.17g, round-trip safe.
std::string csv_double(double value);

// Fresh record envelope: schema_version, command, empty parameters and
// results in fixed order.
Json make_record(const std::string& command);

// Record rendered as pretty JSON with a trailing newline, byte-stable for
// identical inputs.
std::string render_json(const Json& record);

}  // namespace progdisc
