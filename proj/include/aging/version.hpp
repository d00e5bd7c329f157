#ifndef AGING_VERSION_HPP
#define AGING_VERSION_HPP

namespace aging {

inline constexpr const char* kVersion = "0.4.0";

}  // namespace aging

#endif
