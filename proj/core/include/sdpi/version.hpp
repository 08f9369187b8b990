/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#pragma once

#include <string_view>

namespace sdpi {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace sdpi
