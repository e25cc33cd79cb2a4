#pragma once

#include "wordmetric/blocks.hpp"
#include "wordmetric/core.hpp"
#include "wordmetric/digits.hpp"
#include "wordmetric/equivalence.hpp"
#include "wordmetric/powersearch.hpp"
#include "wordmetric/wordlen.hpp"

namespace wordmetric {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wordmetric
