#pragma once

namespace lucaslab {

inline constexpr const char* version = "0.1.0";

}
