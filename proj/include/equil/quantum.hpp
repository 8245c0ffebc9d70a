#pragma once

#include "equil/quantum/dynamics.hpp"
#include "equil/quantum/linalg.hpp"
#include "equil/quantum/moments.hpp"
#include "equil/quantum/random.hpp"
#include "equil/quantum/spectrum.hpp"
#include "equil/quantum/state.hpp"
