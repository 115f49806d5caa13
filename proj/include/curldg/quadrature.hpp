#pragma once

#include <vector>

#include "curldg/geometry.hpp"

namespace curldg {

// Rule on the reference triangle {(r,s): r,s >= 0, r+s <= 1}; weights sum to
// the reference measure 1/2. Physical integrals scale by |det J| = 2|K|.
struct QuadratureRule {
    std::vector<Vec2> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
};

// Rule on the reference edge [0,1]; weights sum to 1.
struct EdgeQuadrature {
    std::vector<double> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
};

// Six-point symmetric rule, exact for polynomials of degree <= 4.
const QuadratureRule& triangle_rule_degree4();

// Three-point Gauss-Legendre, exact for degree <= 5.
const EdgeQuadrature& edge_rule_gauss3();

}  // namespace curldg
