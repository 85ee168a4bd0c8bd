#pragma once

namespace ncm {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace ncm
