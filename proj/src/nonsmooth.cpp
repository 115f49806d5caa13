#include "curldg/nonsmooth.hpp"

#include <cmath>
#include <stdexcept>

namespace curldg {

ExponentialDecayPotential::ExponentialDecayPotential(double a, double b, double beta,
                                                     double tol_zero)
    : a_(a), b_(b), beta_(beta), tol_zero_(tol_zero) {
    const bool linear_mode = (a == 0.0 && b == 0.0);
    if (!linear_mode && !(a > b && b > 0.0))
        throw std::invalid_argument(
            "ExponentialDecayPotential: requires a > b > 0 (or a = b = 0 for linear mode)");
    if (!(beta > 0.0)) throw std::invalid_argument("ExponentialDecayPotential: beta must be positive");
    if (!(tol_zero > 0.0))
        throw std::invalid_argument("ExponentialDecayPotential: tol_zero must be positive");
}

double ExponentialDecayPotential::omega(double t) const {
    if (t < 0.0) throw std::domain_error("omega: negative argument");
    return (a_ - b_) * std::exp(-beta_ * t) + b_;
}

double ExponentialDecayPotential::psi(Vec2 xi) const {
    const double r = norm(xi);
    return b_ * r + (a_ - b_) * (1.0 - std::exp(-beta_ * r)) / beta_;
}

Vec2 ExponentialDecayPotential::subgradient(Vec2 xi) const {
    const double r = norm(xi);
    if (r <= tol_zero_) return {0.0, 0.0};
    return (omega(r) / r) * xi;
}

double ExponentialDecayPotential::psi0(Vec2 xi, Vec2 v) const {
    const double r = norm(xi);
    if (r <= tol_zero_) return a_ * norm(v);
    return omega(r) * dot(xi, v) / r;
}

}  // namespace curldg
