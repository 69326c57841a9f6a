#pragma once

namespace mcflow {

// Bumped on any change that can alter numerical output; keys the on-disk
// reference cache.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace mcflow
