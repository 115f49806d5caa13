#include "curldg/quadrature.hpp"

#include <cmath>

namespace curldg {

const QuadratureRule& triangle_rule_degree4() {
    static const QuadratureRule rule = [] {
        const double a1 = 0.44594849091596488631832925388305;
        const double w1 = 0.22338158967801146569500700843312;
        const double a2 = 0.09157621350977074345957146340220;
        const double w2 = 0.10995174365532186763832632490021;
        QuadratureRule r;
        r.points = {{a1, a1}, {1.0 - 2.0 * a1, a1}, {a1, 1.0 - 2.0 * a1},
                    {a2, a2}, {1.0 - 2.0 * a2, a2}, {a2, 1.0 - 2.0 * a2}};
        // halve the area-normalized weights so they sum to the reference
        // triangle measure
        r.weights = {0.5 * w1, 0.5 * w1, 0.5 * w1, 0.5 * w2, 0.5 * w2, 0.5 * w2};
        return r;
    }();
    return rule;
}

const EdgeQuadrature& edge_rule_gauss3() {
    static const EdgeQuadrature rule = [] {
        const double off = 0.5 * std::sqrt(3.0 / 5.0);
        EdgeQuadrature r;
        r.points = {0.5 - off, 0.5, 0.5 + off};
        r.weights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
        return r;
    }();
    return rule;
}

}  // namespace curldg
