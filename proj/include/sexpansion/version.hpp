#pragma once

namespace sexpansion {

inline constexpr const char* kLibraryVersion = "1.0.0";

// Bumped whenever the corresponding on-disk layout changes.
inline constexpr int kTableFormatVersion = 1;
inline constexpr int kCatalogFormatVersion = 1;
inline constexpr int kAlgebraFormatVersion = 1;

}  // namespace sexpansion
