#pragma once

namespace qpb {
inline constexpr const char* kVersion = "0.1.0";
}
