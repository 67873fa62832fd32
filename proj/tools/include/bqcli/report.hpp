#pragma once

#include <string>

#include "json.hpp"

#include "bq/dimvalue.hpp"
#include "bq/module.hpp"

namespace bq::cli {

/// Reports are ordered key-value trees; key order is insertion order, so the
/// serialization is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { text, structured };

/// {"kind": "exact"|"at_least"|"infinite", "value": n or null, "certificate": "..."}
Json dim_json(const DimValue& d);

/// Empty report carrying the schema version, command and budget.
Json report_header(const std::string& command, std::size_t bound, unsigned seed);

/// Structured: two-space indented JSON plus a newline. Text: an indented
/// "key: value" outline of the same tree.
std::string emit_report(const Json& report, Format f);

}  // namespace bq::cli
