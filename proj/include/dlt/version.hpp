#pragma once

namespace dlt {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

}  // namespace dlt
