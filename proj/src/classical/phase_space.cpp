#include "equil/classical/phase_space.hpp"

#include <cmath>

namespace equil::classical {

double wrap_unit(double x) noexcept {
    double r = x - std::floor(x);
    // x slightly below an integer can round up to exactly 1.
    if (r >= 1.0)
        r = 0.0;
    return r;
}

double circle_distance(double a, double b) noexcept {
    const double d = wrap_unit(a - b);
    return d > 0.5 ? 1.0 - d : d;
}

PhasePoint::PhasePoint(std::vector<double> coords) : coords_(std::move(coords)) {
    for (double& c : coords_)
        c = wrap_unit(c);
}

PhasePoint::PhasePoint(std::initializer_list<double> coords)
    : PhasePoint(std::vector<double>(coords)) {}

}  // namespace equil::classical
