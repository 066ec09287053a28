#ifndef EMK_REPORT_HPP
#define EMK_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "emk/rational.hpp"

namespace emk {

inline constexpr const char* kToolName = "emk";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

// Deterministic serialization: keys sorted (json is map-backed), doubles
// printed with %.17g, no timestamps anywhere in the payload.
std::string dump_deterministic(const nlohmann::json& j, int indent = 2);

inline std::string rational_string(const Rational& q) { return q.get_str(); }

// RFC 4180: CRLF row endings, quoting only where required.
std::string csv_line(const std::vector<std::string>& fields);
std::string csv_number(double v);

}  // namespace emk

#endif  // EMK_REPORT_HPP
