#pragma once

#include "equil/core/distribution.hpp"
#include "equil/core/equilibration.hpp"
#include "equil/core/probe.hpp"
#include "equil/core/summation.hpp"
#include "equil/core/synthetic.hpp"
#include "equil/core/time_average.hpp"
#include "equil/errors.hpp"
