#pragma once

#define GGHLAB_VERSION "1.0.0"

namespace gghlab {
inline const char* version_string() { return GGHLAB_VERSION; }
} // namespace gghlab
