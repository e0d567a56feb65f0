#pragma once

#include <cstdio>
#include <string>

#include "gaussclone/design.hpp"

namespace gaussclone::detail {

inline std::string off_surface_message(const NoiseProfile& profile) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "profile is off the optimal surface (residual %.3g)", residual(profile));
  return buf;
}

}  // namespace gaussclone::detail
