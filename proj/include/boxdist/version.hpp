#pragma once

namespace boxdist {

inline constexpr const char* kVersion = "boxdist 0.1.0";

}  // namespace boxdist
