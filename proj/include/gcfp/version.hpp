#pragma once

namespace gcfp {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace gcfp
