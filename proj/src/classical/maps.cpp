#include "equil/classical/maps.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "equil/errors.hpp"

namespace equil::classical {

namespace {

constexpr std::uint64_t kDyadicModulus = std::uint64_t{1} << kDyadicBits;
constexpr std::uint64_t kDyadicMask = kDyadicModulus - 1;
constexpr double kDyadicScale = static_cast<double>(kDyadicModulus);

std::uint64_t to_lattice(double x) {
    return static_cast<std::uint64_t>(std::llround(x * kDyadicScale)) & kDyadicMask;
}

double from_lattice(std::uint64_t k) { return static_cast<double>(k) / kDyadicScale; }

void require_dimension(const PhasePoint& x, std::size_t dim, const std::string& name) {
    if (x.dimension() != dim) {
        std::ostringstream msg;
        msg << name << " acts on " << dim << "-dimensional points, got " << x.dimension();
        throw DimensionError(msg.str());
    }
}

}  // namespace

InvertibleMap::InvertibleMap(std::string name, std::size_t dimension, Step forward,
                             Step backward, MapSpec spec)
    : name_(std::move(name)),
      dimension_(dimension),
      forward_(std::move(forward)),
      backward_(std::move(backward)),
      spec_(std::move(spec)) {}

PhasePoint InvertibleMap::forward(const PhasePoint& x) const {
    require_dimension(x, dimension_, name_);
    return forward_(x);
}

PhasePoint InvertibleMap::backward(const PhasePoint& x) const {
    require_dimension(x, dimension_, name_);
    return backward_(x);
}

PhasePoint snap_to_dyadic(const PhasePoint& x) {
    std::vector<double> c(x.coords().begin(), x.coords().end());
    for (double& v : c)
        v = from_lattice(to_lattice(v));
    return PhasePoint(std::move(c));
}

InvertibleMap rotation(std::vector<double> alpha) {
    if (alpha.empty())
        throw DomainError("rotation needs at least one coordinate");
    for (double a : alpha)
        if (!std::isfinite(a))
            throw DomainError("rotation angle must be finite");
    MapSpec spec{MapKind::rotation, alpha, CatArithmetic::floating, {}};
    std::ostringstream name;
    name.precision(17);
    name << "rotation(";
    for (std::size_t i = 0; i < alpha.size(); ++i)
        name << (i ? "," : "") << alpha[i];
    name << ")";
    auto shift = [alpha](double sign) {
        return [alpha, sign](const PhasePoint& x) {
            std::vector<double> c(x.coords().begin(), x.coords().end());
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] = wrap_unit(c[i] + sign * alpha[i]);
            return PhasePoint(std::move(c));
        };
    };
    const std::size_t dim = alpha.size();
    return InvertibleMap(name.str(), dim, shift(1.0), shift(-1.0), std::move(spec));
}

InvertibleMap cat_map(CatArithmetic arithmetic) {
    MapSpec spec{MapKind::cat_map, {}, arithmetic, {}};
    if (arithmetic == CatArithmetic::exact_dyadic) {
        auto fwd = [](const PhasePoint& p) {
            const std::uint64_t x = to_lattice(p[0]), y = to_lattice(p[1]);
            return PhasePoint({from_lattice((2 * x + y) & kDyadicMask),
                               from_lattice((x + y) & kDyadicMask)});
        };
        auto bwd = [](const PhasePoint& p) {
            const std::uint64_t x = to_lattice(p[0]), y = to_lattice(p[1]);
            // Unsigned wrap-around implements the negative entries mod 2^32.
            return PhasePoint({from_lattice((x - y) & kDyadicMask),
                               from_lattice((2 * y - x) & kDyadicMask)});
        };
        return InvertibleMap("cat-map(exact)", 2, fwd, bwd, std::move(spec));
    }
    auto fwd = [](const PhasePoint& p) {
        return PhasePoint({wrap_unit(2.0 * p[0] + p[1]), wrap_unit(p[0] + p[1])});
    };
    auto bwd = [](const PhasePoint& p) {
        return PhasePoint({wrap_unit(p[0] - p[1]), wrap_unit(2.0 * p[1] - p[0])});
    };
    return InvertibleMap("cat-map", 2, fwd, bwd, std::move(spec));
}

InvertibleMap baker_map() {
    auto fwd = [](const PhasePoint& p) {
        const double x = p[0], y = p[1];
        if (x < 0.5)
            return PhasePoint({2.0 * x, 0.5 * y});
        return PhasePoint({2.0 * x - 1.0, 0.5 * (y + 1.0)});
    };
    auto bwd = [](const PhasePoint& p) {
        const double x = p[0], y = p[1];
        if (y < 0.5)
            return PhasePoint({0.5 * x, 2.0 * y});
        return PhasePoint({0.5 * (x + 1.0), 2.0 * y - 1.0});
    };
    return InvertibleMap("baker-map", 2, fwd, bwd, MapSpec{MapKind::baker_map, {}, {}, {}});
}

InvertibleMap compose(std::vector<InvertibleMap> maps) {
    if (maps.empty())
        throw DomainError("compose needs at least one map");
    const std::size_t dim = maps.front().dimension();
    MapSpec spec{MapKind::composed, {}, CatArithmetic::floating, {}};
    std::string name = "composed(";
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].dimension() != dim)
            throw DimensionError("composed maps must share a dimension");
        spec.parts.push_back(maps[i].spec());
        name += (i ? "," : "") + maps[i].name();
    }
    name += ")";
    auto fwd = [maps](const PhasePoint& x) {
        PhasePoint y = x;
        for (const auto& m : maps)
            y = m.forward(y);
        return y;
    };
    auto bwd = [maps](const PhasePoint& x) {
        PhasePoint y = x;
        for (auto it = maps.rbegin(); it != maps.rend(); ++it)
            y = it->backward(y);
        return y;
    };
    return InvertibleMap(name, dim, fwd, bwd, std::move(spec));
}

InvertibleMap make_map(const MapSpec& spec) {
    switch (spec.kind) {
    case MapKind::rotation:
        return rotation(spec.rotation);
    case MapKind::cat_map:
        return cat_map(spec.arithmetic);
    case MapKind::baker_map:
        return baker_map();
    case MapKind::composed: {
        std::vector<InvertibleMap> parts;
        for (const auto& p : spec.parts)
            parts.push_back(make_map(p));
        return compose(std::move(parts));
    }
    }
    throw DomainError("unknown map kind");
}

}  // namespace equil::classical
