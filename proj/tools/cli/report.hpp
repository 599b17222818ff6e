#pragma once

#include <string>

#include <json.hpp>

namespace krull::cli {

using Json = nlohmann::json;

enum class Format { json, csv, markdown };

Format parse_format(const std::string& s);

// Serializes a report.  Object keys come out sorted, so equal reports give
// byte-identical text.
std::string emit_report(const Json& report, Format f);

}  // namespace krull::cli
