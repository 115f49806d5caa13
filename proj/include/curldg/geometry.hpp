#pragma once

#include <cmath>

namespace curldg {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2& operator+=(Vec2& a, Vec2 b) { a.x += b.x; a.y += b.y; return a; }
inline Vec2& operator-=(Vec2& a, Vec2 b) { a.x -= b.x; a.y -= b.y; return a; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

// Out-of-plane component of the 3D cross product of two in-plane vectors.
// With a = (a1, a2, 0) and b = (b1, b2, 0), (a x b)_3 = a1 b2 - a2 b1.
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// In-plane part of n x q for a scalar out-of-plane quantity q = (0, 0, q3):
// (n1, n2, 0) x (0, 0, q) = (n2 q, -n1 q, 0).
inline Vec2 cross_scalar(Vec2 n, double q) { return {n.y * q, -n.x * q}; }

// 2D curl of a scalar field, (dB/dy, -dB/dx), expressed through its gradient.
inline Vec2 rotated_gradient(Vec2 grad) { return {grad.y, -grad.x}; }

}  // namespace curldg
