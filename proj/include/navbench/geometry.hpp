#pragma once

#include <cmath>
#include <string>

namespace navbench {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Normalize an angle into (-pi, pi].
inline double normalize_angle(double a) {
    a = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

struct Vec2 {
    double x{0.0};
    double y{0.0};

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
    double squared_norm() const { return x * x + y * y; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double angle() const { return std::atan2(y, x); }

    /// Unit vector; (0,0) maps to (0,0).
    Vec2 normalized() const {
        const double n = norm();
        if (n < 1e-300) return {0.0, 0.0};
        return {x / n, y / n};
    }

    Vec2 rotated(double angle_rad) const {
        const double c = std::cos(angle_rad), s = std::sin(angle_rad);
        return {c * x - s * y, s * x + c * y};
    }

    /// 90 degrees counterclockwise.
    Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline Vec2 unit_from_angle(double angle_rad) {
    return {std::cos(angle_rad), std::sin(angle_rad)};
}

/// SE(2) pose; theta is kept in (-pi, pi].
struct Pose2D {
    double x{0.0};
    double y{0.0};
    double theta{0.0};

    Pose2D() = default;
    Pose2D(double x_, double y_, double theta_) : x(x_), y(y_), theta(normalize_angle(theta_)) {}

    Vec2 position() const { return {x, y}; }

    /// Compose with a pose expressed in this pose's frame.
    Pose2D compose(const Pose2D& local) const {
        const double c = std::cos(theta), s = std::sin(theta);
        return {x + c * local.x - s * local.y,
                y + s * local.x + c * local.y,
                theta + local.theta};
    }

    bool operator==(const Pose2D& o) const { return x == o.x && y == o.y && theta == o.theta; }
};

struct Twist {
    double v{0.0};      // m/s
    double omega{0.0};  // rad/s

    Twist() = default;
    Twist(double v_, double omega_) : v(v_), omega(omega_) {}

    bool operator==(const Twist& o) const { return v == o.v && omega == o.omega; }
};

/// Disc-footprint robot with velocity and acceleration limits.
struct RobotModel {
    std::string name{"default"};
    double radius{0.25};      // m
    double v_max{1.0};        // m/s
    double v_min{-0.3};       // m/s, <= 0
    double omega_max{2.0};    // rad/s
    double a_lin_max{1.5};    // m/s^2
    double a_ang_max{3.0};    // rad/s^2
};

/// A circular agent (pedestrian, parked robot, spawned obstacle) as seen by
/// clearance and raycast queries.
struct Disc {
    Vec2 center;
    double radius{0.0};
};

}  // namespace navbench
