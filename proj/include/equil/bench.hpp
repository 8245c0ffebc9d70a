#pragma once

#include "equil/bench/export.hpp"
#include "equil/bench/report.hpp"
#include "equil/bench/runner.hpp"
#include "equil/bench/scenario.hpp"
#include "equil/bench/suite.hpp"
