#pragma once

#include <string_view>

namespace nnsdist {

#ifndef NNSDIST_VERSION_STRING
#define NNSDIST_VERSION_STRING "0.0.0"
#endif

inline constexpr std::string_view kVersion = NNSDIST_VERSION_STRING;

}  // namespace nnsdist
