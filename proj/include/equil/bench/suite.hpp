#pragma once

#include <vector>

#include "equil/bench/scenario.hpp"

namespace equil::bench {

// Scenarios run by `equil verify`: one per theorem family, sized to finish in
// seconds.
std::vector<Scenario> builtin_suite();

}  // namespace equil::bench
