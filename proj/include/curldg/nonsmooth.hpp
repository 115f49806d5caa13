#pragma once

#include "curldg/geometry.hpp"

namespace curldg {

// Radial locally Lipschitz potential built from the decaying modulus
//   omega(t) = (a - b) e^{-beta t} + b,   psi(xi) = int_0^{|xi|} omega(t) dt.
// For a > b > 0 the potential is nonsmooth at the origin with Clarke
// subdifferential a * (closed unit ball); away from the origin it is smooth
// with gradient omega(|xi|) xi / |xi|. The degenerate setting a = b = 0
// switches the nonsmooth current law off entirely ("linear mode").
//
// Key constants: every subgradient is bounded by a, and the relaxed
// monotonicity modulus is m = beta (a - b).
class ExponentialDecayPotential {
public:
    ExponentialDecayPotential(double a, double b, double beta, double tol_zero = 1.0e-12);

    static ExponentialDecayPotential linear() { return {0.0, 0.0, 1.0}; }

    double a() const { return a_; }
    double b() const { return b_; }
    double beta() const { return beta_; }
    double tol_zero() const { return tol_zero_; }
    bool is_linear() const { return a_ == 0.0 && b_ == 0.0; }
    double monotonicity_modulus() const { return beta_ * (a_ - b_); }  // m

    // omega(t); t must be non-negative.
    double omega(double t) const;

    // psi(xi) = b|xi| + (a - b)(1 - e^{-beta |xi|}) / beta
    double psi(Vec2 xi) const;

    // The minimal-norm selection of the Clarke subdifferential: the radial
    // gradient where |xi| > tol_zero, the zero vector at the kink.
    Vec2 subgradient(Vec2 xi) const;

    // Generalized directional derivative psi^0(xi; v); at the kink it is the
    // support function of the ball of radius a, i.e. a |v|.
    double psi0(Vec2 xi, Vec2 v) const;

private:
    double a_;
    double b_;
    double beta_;
    double tol_zero_;
};

}  // namespace curldg
