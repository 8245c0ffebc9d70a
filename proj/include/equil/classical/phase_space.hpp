#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace equil::classical {

// Point on the unit torus [0,1)^dim. Coordinates are wrapped on construction.
class PhasePoint {
public:
    PhasePoint() = default;
    explicit PhasePoint(std::vector<double> coords);
    PhasePoint(std::initializer_list<double> coords);

    std::size_t dimension() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }

    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;

private:
    std::vector<double> coords_;
};

// x mod 1 in [0, 1).
double wrap_unit(double x) noexcept;

// Distance between a and b on the circle of circumference 1.
double circle_distance(double a, double b) noexcept;

}  // namespace equil::classical
