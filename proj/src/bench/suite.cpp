#include "equil/bench/suite.hpp"

namespace equil::bench {

namespace {

const char* const kSuite[] = {
    R"({
      "name": "qubit-sigma-x", "kind": "quantum", "epsilon": 0.35,
      "average": {"horizon": 6283.185307179586, "samples": 10000, "seed": 1},
      "system": {"hamiltonian": {"eigenvalues": [0, 1]},
                 "state": {"vector": [[0.7071067811865476, 0], [0.7071067811865476, 0]]}},
      "measurement": {"povm": [[[0.5, 0.5], [0.5, 0.5]], [[0.5, -0.5], [-0.5, 0.5]]]}
    })",
    R"({
      "name": "quantum-random", "kind": "quantum", "epsilon": 0.2,
      "average": {"samples": 2000, "seed": 11},
      "system": {"random": {"dimension": 8, "spectrum": "uniform", "state": "pure"}},
      "measurement": {"random": {"outcomes": 2, "kind": "projective"}},
      "sweep": {"dimension": [4, 16], "spectrum": ["uniform", "equally-spaced"],
                "state": ["pure", "mixed"], "outcomes": [2, 4]}
    })",
    R"({
      "name": "rotation-boxes", "kind": "classical-pure", "epsilon": 0.3,
      "average": {"horizon": 20000, "samples": 20000, "scheme": "uniform-grid", "seed": 21},
      "system": {"map": {"type": "rotation", "alpha": [0.41421356237309515, 0.7320508075688772]},
                 "point": "random"},
      "measurement": {"random_boxes": {"cells": 3}},
      "sweep": {"outcomes": [2, 4, 8], "seed": [21, 22]}
    })",
    R"({
      "name": "cat-exact-boxes", "kind": "classical-pure", "epsilon": 0.3,
      "average": {"horizon": 20000, "samples": 20000, "scheme": "uniform-grid", "seed": 31},
      "system": {"map": {"type": "cat", "arithmetic": "exact"}, "point": "random"},
      "measurement": {"random_boxes": {"cells": 2}},
      "sweep": {"outcomes": [2, 4, 8]}
    })",
    R"({
      "name": "cat-ensemble", "kind": "classical-ensemble", "epsilon": 0.5,
      "average": {"horizon": 2000, "samples": 2000, "scheme": "uniform-grid", "seed": 41},
      "system": {"map": {"type": "cat", "arithmetic": "exact"},
                 "ensemble": {"size": 1000, "contamination": 0.0, "audit_pairs": 30}},
      "measurement": {"random_boxes": {"cells": 2}},
      "sweep": {"delta": [0.0, 0.02, 0.1], "outcomes": [2, 4, 8]}
    })",
    R"({
      "name": "synthetic-uneven", "kind": "synthetic-probe", "epsilon": 0.2,
      "average": {"horizon": 1000, "samples": 10000, "seed": 51},
      "system": {"recipe": {"outcomes": 4, "kind": "smooth-mixture", "components": 5,
                            "dominant_mass": 0.93}},
      "sweep": {"outcomes": [2, 4, 8]}
    })",
};

}  // namespace

std::vector<Scenario> builtin_suite() {
    std::vector<Scenario> out;
    for (const char* text : kSuite)
        out.push_back(parse_scenario(nlohmann::json::parse(text)));
    return out;
}

}  // namespace equil::bench
