#pragma once

namespace texdim {

inline constexpr const char* kToolName = "texdim";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace texdim
