#pragma once

#include "symcoh/bigint.hpp"
#include "symcoh/errors.hpp"
#include "symcoh/hochschild.hpp"
#include "symcoh/partitions.hpp"
#include "symcoh/rationality.hpp"
#include "symcoh/series.hpp"
#include "symcoh/statistics.hpp"

namespace symcoh {
inline constexpr const char* kVersion = "0.1.0";
}
