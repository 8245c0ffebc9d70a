#pragma once

#include "equil/classical/dynamics.hpp"
#include "equil/classical/maps.hpp"
#include "equil/classical/partition.hpp"
#include "equil/classical/phase_space.hpp"
