#pragma once

namespace fatpoints {

inline constexpr const char* kToolName = "fatpoints";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kToolId = "fatpoints/1.0.0";

// Identifies the pseudorandom generator and the seed-derivation scheme.
// Certificates produced under one id are only replayable by a tool that
// implements exactly that scheme; bump the suffix on any change.
inline constexpr const char* kGeneratorId = "splitmix64-v1";

}  // namespace fatpoints
