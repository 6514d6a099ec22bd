#pragma once

namespace ffgroup {

inline constexpr const char* kToolVersion = "ffgroup 1.0.0";

}  // namespace ffgroup
