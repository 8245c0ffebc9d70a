#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "equil/classical/phase_space.hpp"

namespace equil::classical {

enum class MapKind { rotation, cat_map, baker_map, composed };

// Floating-point cat map iteration loses invertibility over long horizons;
// the dyadic variant snaps coordinates to multiples of 2^-32 and iterates
// with exact integer arithmetic.
enum class CatArithmetic { floating, exact_dyadic };

inline constexpr int kDyadicBits = 32;

// Parameters that identify a catalogue map; enough to rebuild it.
struct MapSpec {
    MapKind kind = MapKind::rotation;
    std::vector<double> rotation;                 // rotation: per-coordinate shift
    CatArithmetic arithmetic = CatArithmetic::floating;  // cat map
    std::vector<MapSpec> parts;                   // composed: applied in order
};

// Reversible discrete-time evolution on the unit torus.
class InvertibleMap {
public:
    using Step = std::function<PhasePoint(const PhasePoint&)>;

    InvertibleMap(std::string name, std::size_t dimension, Step forward, Step backward,
                  MapSpec spec);

    const std::string& name() const noexcept { return name_; }
    std::size_t dimension() const noexcept { return dimension_; }
    const MapSpec& spec() const noexcept { return spec_; }

    PhasePoint forward(const PhasePoint& x) const;
    PhasePoint backward(const PhasePoint& x) const;

private:
    std::string name_;
    std::size_t dimension_;
    Step forward_;
    Step backward_;
    MapSpec spec_;
};

// x -> x + alpha (mod 1), coordinatewise. Dimension = alpha.size().
InvertibleMap rotation(std::vector<double> alpha);

// Arnold cat map (x, y) -> (2x + y, x + y) mod 1.
InvertibleMap cat_map(CatArithmetic arithmetic = CatArithmetic::floating);

// Baker's map: (x, y) -> (2x, y/2) for x < 1/2, (2x - 1, (y + 1)/2) otherwise.
// Floating-point iteration shifts mantissa bits out of x, so orbits collapse
// onto x = 0 after about 50 steps; use it for short horizons only.
InvertibleMap baker_map();

// Applies maps[0], then maps[1], ...
InvertibleMap compose(std::vector<InvertibleMap> maps);

InvertibleMap make_map(const MapSpec& spec);

// Snaps a point onto the 2^-32 lattice used by exact cat-map iteration.
PhasePoint snap_to_dyadic(const PhasePoint& x);

}  // namespace equil::classical
