#ifndef HHV_VERSION_HPP
#define HHV_VERSION_HPP

namespace hhv {
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;
} // namespace hhv

#endif
