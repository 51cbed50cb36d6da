#pragma once

#include <cstdint>

namespace oremod {

inline constexpr const char* kToolName = "oremod";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "oremod.report/1";

// Default seed for the randomized suites; printed in every report and
// overridable via --seed or the OREMOD_SEED environment variable.
inline constexpr std::uint64_t kDefaultSeed = 24601;

} // namespace oremod
